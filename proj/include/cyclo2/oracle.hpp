#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclo2/base_field.hpp"
#include "cyclo2/classifier.hpp"
#include "cyclo2/finite_field.hpp"
#include "cyclo2/labels.hpp"
#include "cyclo2/unit_group.hpp"

namespace cyclo2::oracle {

/// Kronecker symbol (a|n).
int kronecker(long long a, long long n);

/// The actual Galois group of F(zeta_{2^e})/F as a subgroup of U_{2^e},
/// computed from classical facts only: Frobenius powers for F_q, the
/// congruence kernel for Q(zeta_m), and Kronecker-character enumeration
/// over U_L (L = lcm(|disc|, 2^e)) for Q(sqrt d). Requires e >= 3.
UnitSubgroup galois_subgroup(const BaseField& f, unsigned e);

/// Subgroup of h fixing the subfield named by the label:
///   zeta_{2^k}:  a = 1 (mod 2^k)
///   tau+_{2^k}:  a = +-1 (mod 2^k)
///   tau-_{2^k}:  a = 1 or 2^{k-1}-1 (mod 2^k)
///   base:        all of h
UnitSubgroup label_stabilizer(const UnitSubgroup& h, const FieldLabel& label);

/// Stabilizers of every label with level in [2, e], plus the base label.
std::vector<std::pair<FieldLabel, UnitSubgroup>> label_stabilizer_table(const UnitSubgroup& h,
                                                                        unsigned e);

/// [M : F] for the labeled subfield M: |H| / |stabilizer|.
std::uint64_t degree_of(const BaseField& f, unsigned e, const FieldLabel& label);

struct LatticeNode {
  UnitSubgroup subgroup;
  std::vector<FieldLabel> labels;  // all labels whose stabilizer this is
  std::uint64_t subfield_degree;   // [M : F]
};

/// All subgroups between {1} and H with their label annotations and the
/// index-2 cover relation (edges as node indices, lower subgroup first).
struct SubfieldLattice {
  std::vector<LatticeNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

SubfieldLattice subfield_lattice(const BaseField& f, unsigned e);

struct ClauseResult {
  std::string clause;
  bool pass = false;
  bool skipped = false;
  std::string expected;
  std::string actual;
};

/// Clause-by-clause comparison of every classifier prediction against this
/// module's ground truth for one (F, e). Failures are data, not errors.
struct VerificationReport {
  BaseField field = BaseField::rationals();
  unsigned e = 0;
  std::vector<ClauseResult> clauses;

  bool all_pass() const;
};

/// Runs the full comparison. Finite-field minimal-polynomial and concrete
/// tau clauses construct F_{q^d}; they are skipped (marked, not failed) when
/// the total prime-field degree k*d exceeds max_construct_degree.
VerificationReport verify(const BaseField& f, unsigned e, unsigned max_construct_degree = 256);

/// Concrete coefficients of a symbolic minimal polynomial, evaluated from a
/// chosen primitive 2^e-th root zeta in a finite field; ascending, dense.
std::vector<ff::FqField::Elem> resolve_min_poly(const SymbolicMinPoly& poly,
                                                const ff::FqField& field,
                                                const ff::FqField::Elem& zeta, unsigned e);

/// The Frobenius orbit size of zeta_{2^e} over F_q: the multiplicative order
/// of q mod 2^e, computed on exponents alone.
std::uint64_t frobenius_orbit_size(std::uint64_t q, unsigned e);

}  // namespace cyclo2::oracle
