#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace cyclo2 {

/// F_{p^k}, p an odd prime.
struct FiniteField {
  std::uint64_t p;
  unsigned k;
  std::uint64_t q;  // p^k
  friend bool operator==(const FiniteField&, const FiniteField&) = default;
};

/// Q(zeta_m), normalized so that m is never 2 mod 4 (Q(zeta_2m) = Q(zeta_m)
/// for odd m). m = 1 is Q itself.
struct CyclotomicQ {
  std::uint64_t m;
  friend bool operator==(const CyclotomicQ&, const CyclotomicQ&) = default;
};

/// Q(sqrt(d)) for squarefree d, d not in {0, 1}.
struct QuadraticQ {
  std::int64_t d;
  friend bool operator==(const QuadraticQ&, const QuadraticQ&) = default;
};

/// One of the three supported base-field families. All membership and order
/// predicates below are decided purely by integer congruences, 2-adic
/// valuations and conductor arithmetic; no algebraic-number arithmetic.
class BaseField {
 public:
  using Variant = std::variant<FiniteField, CyclotomicQ, QuadraticQ>;

  static BaseField finite(std::uint64_t p, unsigned k = 1);
  static BaseField rationals() { return cyclotomic(1); }
  static BaseField cyclotomic(std::uint64_t m);
  static BaseField quadratic(std::int64_t d);

  std::uint64_t characteristic() const;
  const Variant& value() const { return v_; }
  bool is_finite() const { return std::holds_alternative<FiniteField>(v_); }

  /// Canonical spec string: "fq:3", "fq:3^2", "qzeta:12", "qsqrt:-2".
  std::string spec_string() const;

  friend bool operator==(const BaseField&, const BaseField&) = default;

 private:
  explicit BaseField(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

enum class TauSign { plus, minus };

/// Whether zeta_{2^k}, a primitive 2^k-th root of unity, lies in F. k = 0
/// and k = 1 are always true (zeta_1 = 1, zeta_2 = -1).
bool contains_zeta(const BaseField& f, unsigned k);

/// Whether tau^{+-}_{2^k} = zeta_{2^k} +- zeta_{2^k}^{-1} lies in F; k >= 2.
bool contains_tau(const BaseField& f, unsigned k, TauSign sign);

/// Order of zeta_{2^k} in the quotient of the multiplicative group of the
/// algebraic closure by that of F: the smallest n >= 1 with zeta^n in F.
/// Always a power of 2. Requires k <= 62.
std::uint64_t order_over(const BaseField& f, unsigned k);

/// Parses "fq:<p>[^<k>]" | "qzeta:<m>" | "qsqrt:<d>" and normalizes
/// (m = 2 mod 4 is replaced by m/2; non-squarefree d is rejected).
/// Throws std::invalid_argument on malformed or unsupported input.
BaseField parse_field(const std::string& spec);

unsigned v2(std::uint64_t n);  // 2-adic valuation, n > 0
bool is_prime(std::uint64_t n);
bool is_squarefree(std::int64_t d);

}  // namespace cyclo2
