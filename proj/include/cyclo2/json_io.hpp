#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cyclo2/classifier.hpp"
#include "cyclo2/labels.hpp"
#include "cyclo2/oracle.hpp"

namespace cyclo2 {

using nlohmann::json;

json to_json(const BaseField& f);
json to_json(const Invariants& inv);
json to_json(const UnitSubgroup& h);
json to_json(const Coefficient& c);
json to_json(const SymbolicMinPoly& p);
json to_json(const Classification& c);
json to_json(const TauReport& r);
json to_json(const std::vector<TowerDecomposition>& towers);
json to_json(const oracle::VerificationReport& r);

BaseField base_field_from_json(const json& j);
Invariants invariants_from_json(const json& j);
UnitSubgroup unit_subgroup_from_json(const json& j);
Coefficient coefficient_from_json(const json& j);
SymbolicMinPoly min_poly_from_json(const json& j);
Classification classification_from_json(const json& j);
std::vector<TowerDecomposition> towers_from_json(const json& j);

/// Serialize with a fixed indentation, trailing newline included.
std::string dump_json(const json& j);

}  // namespace cyclo2
