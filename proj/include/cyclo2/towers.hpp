#pragma once

#include <string>
#include <vector>

#include "cyclo2/base_field.hpp"
#include "cyclo2/labels.hpp"
#include "cyclo2/unit_group.hpp"

namespace cyclo2 {

/// Every 2-tower decomposition of F(zeta_{2^e})/F, top label first.
/// Cyclic case: the single tower z_{2^e}/z_{2^{e-1}}/.../z_{2^nu}/base.
/// Non-cyclic case: 2(e-nu)+1 towers, emitted as the all-zeta tower, then
/// the towers switching to tau+ at level e-r for r = 0..e-nu-1, then those
/// switching through tau- at level e-r. Requires e > nu.
std::vector<TowerDecomposition> enumerate_towers(const BaseField& f, unsigned e);

/// True when each adjacent pair of labels is a legal relative-degree-2 step.
bool is_valid_tower(const TowerDecomposition& t, unsigned e);

/// Deterministic DOT digraph of the subfield lattice spanned by the towers.
/// Nodes are canonical labels; labels whose stabilizer subgroups coincide
/// are merged, with the aliases listed on the node. The stabilizer table
/// normally comes from oracle::label_stabilizer_table.
std::string emit_dot(const BaseField& f, unsigned e,
                     const std::vector<TowerDecomposition>& towers,
                     const std::vector<std::pair<FieldLabel, UnitSubgroup>>& stabilizers);

}  // namespace cyclo2
