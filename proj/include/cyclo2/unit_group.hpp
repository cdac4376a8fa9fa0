#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cyclo2 {

/// base^exp mod m. Requires (m-1)^2 to fit in a uint64, which holds for
/// every modulus used in this library (2^e with e <= 22, small primes).
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// An odd residue class [a] in U_{2^e} = (Z/2^eZ)^x for e >= 3, carrying its
/// canonical coordinates a = eps * 5^k mod 2^e. The pair (eps, k) with
/// eps in {+1,-1} and 0 <= k < 2^{e-2} is unique for each odd residue.
/// A UnitClass also names the automorphism sigma_a : zeta -> zeta^a of a
/// 2-power cyclotomic extension.
struct UnitClass {
  unsigned modulus_exponent;  // e >= 3
  std::uint64_t residue;      // odd, in [1, 2^e)
  int sign;                   // eps
  std::uint64_t log5;         // k

  UnitClass(unsigned e, std::uint64_t a);
  std::uint64_t modulus() const { return std::uint64_t{1} << modulus_exponent; }

  friend bool operator==(const UnitClass&, const UnitClass&) = default;
};

/// Splits an odd residue a mod 2^e into (eps, k) with a = eps * 5^k.
/// Throws std::invalid_argument for even a or e < 3.
std::pair<int, std::uint64_t> decompose(unsigned e, std::uint64_t a);

/// Inverse of decompose: eps * 5^k mod 2^e.
std::uint64_t recompose(unsigned e, int sign, std::uint64_t log5);

/// Multiplicative order of u.residue mod 2^e; always a power of 2.
std::uint64_t order_of(const UnitClass& u);
std::uint64_t order_mod(unsigned e, std::uint64_t a);

/// A subgroup of U_{2^e}, stored as its sorted element set.
struct UnitSubgroup {
  unsigned modulus_exponent = 3;
  std::vector<std::uint64_t> elements;    // sorted, first element 1
  std::vector<std::uint64_t> generators;

  std::uint64_t order() const { return elements.size(); }
  std::uint64_t modulus() const { return std::uint64_t{1} << modulus_exponent; }
  bool contains(std::uint64_t a) const;

  friend bool operator==(const UnitSubgroup& x, const UnitSubgroup& y) {
    return x.modulus_exponent == y.modulus_exponent && x.elements == y.elements;
  }
};

/// Smallest subgroup of U_{2^e} containing all of gens (each odd, reduced
/// mod 2^e). span(e, {}) is the trivial group.
UnitSubgroup span(unsigned e, const std::vector<std::uint64_t>& gens);

/// All of U_{2^e}, generated by [-1] and [5].
UnitSubgroup full_unit_group(unsigned e);

/// Smallest residue of full order when H is cyclic, nullopt otherwise.
std::optional<std::uint64_t> cyclic_witness(const UnitSubgroup& h);
bool is_cyclic(const UnitSubgroup& h);

/// Every maximal chain {1} = H_0 < H_1 < ... < H_s = H with all steps of
/// index 2, as ascending lists of subgroups. Enumeration is depth-first by
/// ascending smallest new element, so the output order is reproducible.
/// Throws std::length_error when |H| > 2^20.
std::vector<std::vector<UnitSubgroup>> maximal_chains(const UnitSubgroup& h);

}  // namespace cyclo2
