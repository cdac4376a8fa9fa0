#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclo2/base_field.hpp"
#include "cyclo2/invariants.hpp"
#include "cyclo2/labels.hpp"
#include "cyclo2/unit_group.hpp"

namespace cyclo2 {

/// One coefficient of a symbolic minimal polynomial: an affine expression
/// symbol_scale * <symbol constant> + constant, where the symbol constant is
/// zeta_{2^level}, tau+_{2^level} or tau-_{2^level} viewed as an element of
/// the base field. Pure integers have symbol = none.
struct Coefficient {
  enum class Symbol { none, zeta, tau_plus, tau_minus };
  Symbol symbol = Symbol::none;
  unsigned level = 0;
  int symbol_scale = 0;
  long long constant = 0;

  static Coefficient integer(long long c) { return {Symbol::none, 0, 0, c}; }

  bool is_integer() const { return symbol == Symbol::none; }
  std::string str() const;

  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

/// Sparse polynomial, exponent -> coefficient; leading coefficient always
/// the integer 1. Kept symbolic in characteristic 0 and resolved to concrete
/// elements only over finite fields (see oracle::resolve_min_poly).
struct SymbolicMinPoly {
  std::map<std::uint64_t, Coefficient> terms;

  std::uint64_t degree() const { return terms.empty() ? 0 : terms.rbegin()->first; }
  std::string str() const;  // "x^4 - tm8*x^2 - 1"

  friend bool operator==(const SymbolicMinPoly&, const SymbolicMinPoly&) = default;
};

enum class CyclicityReason { zeta4_in_f, tau_minus_nu_in_f, neither };

std::string reason_string(CyclicityReason r);

/// A Galois generator eps * 5^(five_exp) mod 2^e together with its residue.
struct NamedGenerator {
  int eps = 1;
  std::uint64_t five_exp = 0;
  std::uint64_t residue = 1;

  std::string str() const;  // "[5^2]", "[-5]", "[-1]"
  friend bool operator==(const NamedGenerator&, const NamedGenerator&) = default;
};

/// Full classification of F(zeta_{2^e})/F. When e <= nu the extension has
/// degree at most 2 and the main structure theory does not apply; such
/// inputs yield small_degree = true with only the membership-derived degree
/// filled in.
struct Classification {
  BaseField field = BaseField::rationals();
  unsigned e = 0;
  Invariants invariants;
  bool small_degree = false;
  bool cyclic = true;
  CyclicityReason reason = CyclicityReason::neither;
  std::uint64_t degree = 1;
  UnitSubgroup galois;
  std::vector<NamedGenerator> generator_names;
  std::vector<std::pair<FieldLabel, UnitClass>> codegree2;
  SymbolicMinPoly min_poly;
  std::uint64_t tower_count = 1;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Decides cyclicity of F(zeta_{2^e})/F and assembles degree, Galois
/// subgroup of U_{2^e}, codegree-2 subextensions, the minimal polynomial of
/// zeta_{2^e} over F and the tower count. The extension is cyclic iff
/// zeta_4 in F, or zeta_4 not in F and tau-_{2^nu} in F.
Classification classify(const BaseField& f, unsigned e);

/// min(zeta_{2^{e-i}}, F) for e - i > nu - 1:
///   zeta_4 in F:              x^(2^(e-nu+1-i)) - zeta_{2^(nu-1)}
///   cyclic, zeta_4 not in F:  x^(2^(e-nu+1-i)) - tau-_{2^nu} x^(2^(e-nu-i)) - 1
///   non-cyclic (i = 0 only):  x^(2^(e-nu+1)) - tau+_{2^nu} x^(2^(e-nu)) + 1
SymbolicMinPoly min_poly_zeta(const BaseField& f, unsigned e, unsigned i = 0);

/// The codegree-2 subextensions of F(zeta_{2^e})/F with the unit class whose
/// order-2 subgroup stabilizes each: a single entry (zeta_{2^(e-1)},
/// [1+2^(e-1)]) in the cyclic case, three entries otherwise.
std::vector<std::pair<FieldLabel, UnitClass>> codegree2_subextensions(const BaseField& f,
                                                                      unsigned e);

/// Structure of the subextension F(tau^{+-}_{2^e})/F. Degrees and the tower
/// bottom are governed by the largest k with tau+_{2^k} in F, which is
/// nu_plus when zeta_4 is not in F and nu - 1 otherwise.
struct TauReport {
  TauSign sign = TauSign::plus;
  std::uint64_t degree = 1;  // 2^(e - max{k : tau+_{2^k} in F})
  FieldLabel unique_codegree2;
  SymbolicMinPoly step_min_poly;  // x^2 - (tau+_{2^(e-1)} +- 2)
  TowerDecomposition tower;
  UnitClass quotient_generator;  // [5^(2^(nu_plus-2))]
  UnitClass quotient_modulus;    // [-1] for +, [-(1+2^(e-1))] for -

  friend bool operator==(const TauReport&, const TauReport&) = default;
};

TauReport tau_report(const BaseField& f, unsigned e, TauSign sign);

/// Whether Gal(F(zeta_8)/F) is the whole of U_8, i.e. zeta_4 not in F and
/// nu(F) = 2. Forces characteristic 0.
bool is_full_u8(const BaseField& f);

}  // namespace cyclo2
