#pragma once

#include <cstdint>
#include <vector>

namespace cyclo2::ff {

/// Dense polynomial over F_p, ascending coefficients, no trailing zeros
/// required. Used both for field moduli and for scratch arithmetic.
using Poly = std::vector<std::uint32_t>;

Poly poly_trim(Poly a);
Poly poly_mul(std::uint64_t p, const Poly& a, const Poly& b);
Poly poly_mod(std::uint64_t p, Poly a, const Poly& f);
Poly poly_gcd(std::uint64_t p, Poly a, Poly b);
Poly poly_pow_mod(std::uint64_t p, Poly a, std::uint64_t e, const Poly& f);

/// Deterministic irreducibility test (early small-factor exits, then the
/// x^{p^{n/l}} conditions for the prime divisors l of n).
bool is_irreducible(std::uint64_t p, const Poly& f);

/// Lexicographically smallest monic irreducible of degree n over F_p,
/// comparing coefficient tuples (c_{n-1}, ..., c_0).
Poly find_irreducible(std::uint64_t p, unsigned n);

/// (p^n - 1) / 2^shift as little-endian 32-bit limbs. Requires the division
/// to be exact.
std::vector<std::uint32_t> shifted_group_order(std::uint64_t p, unsigned n, unsigned shift);

/// F_{p^n} = F_p[x]/(f) with the deterministic modulus above. Elements are
/// coefficient vectors of length n with entries in [0, p).
class FqField {
 public:
  using Elem = std::vector<std::uint32_t>;

  FqField(std::uint64_t p, unsigned n);

  std::uint64_t p() const { return p_; }
  unsigned degree() const { return n_; }
  const Poly& modulus() const { return modulus_; }
  std::uint64_t base_order(unsigned k) const;  // p^k, k <= degree

  Elem zero() const { return Elem(n_, 0); }
  Elem one() const { return from_int(1); }
  Elem from_int(std::uint64_t c) const;
  Elem element_at(std::uint64_t index) const;  // base-p digit expansion

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, std::uint64_t e) const;
  Elem pow_limbs(const Elem& a, const std::vector<std::uint32_t>& limbs) const;
  bool is_zero(const Elem& a) const;

 private:
  std::uint64_t p_;
  unsigned n_;
  Poly modulus_;
};

/// A primitive 2^e-th root of unity, found by raising sequentially searched
/// elements (in base-p counter order) to (p^n - 1)/2^e until one has exact
/// order 2^e. Throws std::domain_error when 2^e does not divide p^n - 1.
FqField::Elem root_of_unity(const FqField& field, unsigned e);

/// Whether a lies in the subfield F_q, q = p^k with k | n: a^q == a.
bool in_base(const FqField& field, const FqField::Elem& a, std::uint64_t q);

/// Minimal polynomial of alpha over F_q (q = p^k, k | n): the product of
/// x - alpha^{q^i} over the Frobenius orbit. Coefficients ascending; each
/// lies in F_q.
std::vector<FqField::Elem> min_poly(const FqField& field, const FqField::Elem& alpha,
                                    std::uint64_t q);

}  // namespace cyclo2::ff
