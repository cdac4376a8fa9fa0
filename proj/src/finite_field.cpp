#include "cyclo2/finite_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cyclo2/base_field.hpp"
#include "cyclo2/unit_group.hpp"

namespace cyclo2::ff {

namespace {

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

}  // namespace

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

namespace {

// Reduce a lazy uint64 accumulator in place by the monic modulus f, then
// normalize mod p. Accumulators stay below 2^52 for p < 2^20, n <= 1024.
Poly reduce_accumulator(std::uint64_t p, std::vector<std::uint64_t>& acc, const Poly& f) {
  const std::size_t n = f.size() - 1;
  for (std::size_t i = acc.size(); i-- > n;) {
    const std::uint64_t c = acc[i] % p;
    if (c) {
      const std::size_t shift = i - n;
      for (std::size_t j = 0; j < n; ++j) acc[shift + j] += c * (p - f[j]);
    }
    acc[i] = 0;
  }
  Poly out(std::min(acc.size(), n));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p);
  return poly_trim(std::move(out));
}

}  // namespace

Poly poly_mul(std::uint64_t p, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    const std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j];
  }
  Poly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p);
  return poly_trim(std::move(out));
}

Poly poly_mod(std::uint64_t p, Poly a, const Poly& f) {
  a = poly_trim(std::move(a));
  const std::size_t n = f.size() - 1;  // f monic of degree n
  if (a.size() <= n) return a;
  std::vector<std::uint64_t> acc(a.begin(), a.end());
  return reduce_accumulator(p, acc, f);
}

// a * b mod f in one pass over a shared accumulator.
static Poly poly_mulmod(std::uint64_t p, const Poly& a, const Poly& b, const Poly& f) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    const std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j];
  }
  return reduce_accumulator(p, acc, f);
}

Poly poly_gcd(std::uint64_t p, Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    // make b monic, then reduce
    Poly bm = b;
    const std::uint64_t inv = inv_mod_p(bm.back(), p);
    for (auto& c : bm) c = static_cast<std::uint32_t>(std::uint64_t{c} * inv % p);
    a = poly_mod(p, std::move(a), bm);
    std::swap(a, b);
    b = poly_trim(std::move(b));
  }
  if (!a.empty() && a.back() != 1) {
    const std::uint64_t inv = inv_mod_p(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(std::uint64_t{c} * inv % p);
  }
  return a;
}

Poly poly_pow_mod(std::uint64_t p, Poly a, std::uint64_t e, const Poly& f) {
  Poly r{1};
  a = poly_mod(p, std::move(a), f);
  while (e) {
    if (e & 1) r = poly_mulmod(p, r, a, f);
    if (e >>= 1) a = poly_mulmod(p, a, a, f);
  }
  return r;
}

bool is_irreducible(std::uint64_t p, const Poly& f) {
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  if (f.back() != 1) throw std::invalid_argument("is_irreducible: polynomial must be monic");
  if (n == 1) return true;
  if (f[0] == 0) return false;  // divisible by x

  // Binomials x^(2^t) - a of degree >= 4 are decided instantly: irreducible
  // exactly when a is a non-square and p = 1 mod 4 (classical criterion for
  // 2-power binomials; the prime 2 must divide ord(a) but not (p-1)/ord(a)).
  if (n >= 4 && (n & (n - 1)) == 0) {
    bool binomial = true;
    for (std::size_t i = 1; i < n; ++i)
      if (f[i]) binomial = false;
    if (binomial) {
      if (p % 4 != 1) return false;
      const std::uint64_t a = p - f[0];  // f = x^n - a
      return pow_mod(a, (p - 1) / 2, p) == p - 1;
    }
  }

  // Root scan: a linear factor is by far the most common rejection, and for
  // small p testing every a in F_p is orders of magnitude cheaper than a
  // Frobenius step.
  if (p <= 4096) {
    for (std::uint64_t a = 1; a < p; ++a) {
      std::uint64_t value = 0;
      std::uint64_t power = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (f[i]) value = (value + f[i] * power) % p;
        power = power * a % p;
      }
      value = (value + power) % p;  // monic leading term
      if (value == 0) return false;
    }
  }

  // Positions where gcd(x^{p^i} - x, f) must be checked: small i to reject
  // quickly (any factor of degree <= i shows up), power-of-two checkpoints
  // to catch mid-degree factors early, and i = n/l for the primes l | n.
  std::vector<bool> check(n, false);
  for (std::size_t i = 1; i <= 8 && i < n; ++i) check[i] = true;
  for (std::size_t i = 16; i <= n / 2; i *= 2) check[i] = true;
  for (std::size_t l = 2; l <= n; ++l)
    if (n % l == 0 && is_prime(l)) check[n / l] = true;

  // Frobenius steps w -> w^p: by exponentiation while shallow, and once a
  // candidate survives depth 8, through a power table of x^p mod f, which
  // turns each further step into the linear combination w^p = sum w_j (x^p)^j.
  const Poly x{0, 1};
  Poly w = x;
  Poly xp;
  std::vector<Poly> table;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == 1) {
      w = poly_pow_mod(p, x, p, f);
      xp = w;
    } else if (i <= 8) {
      w = poly_pow_mod(p, w, p, f);
    } else {
      if (table.empty()) {
        table.assign(n, Poly(n, 0));
        table[0][0] = 1;
        Poly cur{1};
        for (std::size_t j = 1; j < n; ++j) {
          cur = poly_mulmod(p, cur, xp, f);
          for (std::size_t k = 0; k < cur.size(); ++k) table[j][k] = cur[k];
        }
      }
      std::vector<std::uint64_t> acc(n, 0);
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (!w[j]) continue;
        const std::uint64_t wj = w[j];
        const Poly& row = table[j];
        for (std::size_t k = 0; k < n; ++k) acc[k] += wj * row[k];
      }
      Poly next(n);
      for (std::size_t k = 0; k < n; ++k) next[k] = static_cast<std::uint32_t>(acc[k] % p);
      w = poly_trim(std::move(next));
    }
    if (i == n) return poly_trim(w) == x;
    if (check[i]) {
      Poly diff = w;  // w - x
      diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
      diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
      if (poly_gcd(p, std::move(diff), f).size() != 1) return false;
    }
  }
  return true;  // unreachable
}

Poly find_irreducible(std::uint64_t p, unsigned n) {
  if (n == 0) throw std::invalid_argument("find_irreducible: degree must be positive");
  if (n == 1) return Poly{0, 1};  // x
  for (std::uint64_t v = 0; v < 20'000'000; ++v) {
    Poly f(n + 1, 0);
    f[n] = 1;
    std::uint64_t rest = v;
    for (unsigned i = 0; i < n && rest; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (rest) break;  // exhausted all monic polynomials of degree n
    if (f[0] == 0) continue;
    if (is_irreducible(p, f)) return f;
  }
  throw std::logic_error("find_irreducible: no irreducible found in search range");
}

std::vector<std::uint32_t> shifted_group_order(std::uint64_t p, unsigned n, unsigned shift) {
  std::vector<std::uint32_t> limbs{1};
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs) {
      std::uint64_t t = std::uint64_t{limb} * p + carry;
      limb = static_cast<std::uint32_t>(t & 0xffffffffu);
      carry = t >> 32;
    }
    while (carry) {
      limbs.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
      carry >>= 32;
    }
  }
  // subtract 1 (p^n >= 1 so no global borrow)
  for (auto& limb : limbs) {
    if (limb) {
      --limb;
      break;
    }
    limb = 0xffffffffu;
  }
  // shift right; must be exact
  for (unsigned i = 0; i < shift; ++i) {
    if (limbs[0] & 1) throw std::domain_error("shifted_group_order: 2^shift does not divide p^n-1");
    std::uint32_t carry = 0;
    for (std::size_t j = limbs.size(); j-- > 0;) {
      std::uint32_t next = limbs[j] & 1;
      limbs[j] = (limbs[j] >> 1) | (carry << 31);
      carry = next;
    }
  }
  while (limbs.size() > 1 && limbs.back() == 0) limbs.pop_back();
  return limbs;
}

FqField::FqField(std::uint64_t p, unsigned n) : p_(p), n_(n) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("FqField: p must be an odd prime");
  if (p >= (std::uint64_t{1} << 20)) throw std::invalid_argument("FqField: p too large");
  if (n == 0 || n > 1024) throw std::invalid_argument("FqField: degree out of range");
  modulus_ = find_irreducible(p, n);
}

std::uint64_t FqField::base_order(unsigned k) const {
  if (k == 0 || k > n_ || n_ % k != 0) throw std::invalid_argument("base_order: k must divide n");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p_;
  return q;
}

FqField::Elem FqField::from_int(std::uint64_t c) const {
  Elem a(n_, 0);
  a[0] = static_cast<std::uint32_t>(c % p_);
  return a;
}

FqField::Elem FqField::element_at(std::uint64_t index) const {
  Elem a(n_, 0);
  for (unsigned i = 0; i < n_ && index; ++i) {
    a[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return a;
}

FqField::Elem FqField::add(const Elem& a, const Elem& b) const {
  Elem out(n_);
  for (unsigned i = 0; i < n_; ++i) out[i] = static_cast<std::uint32_t>((a[i] + b[i]) % p_);
  return out;
}

FqField::Elem FqField::sub(const Elem& a, const Elem& b) const {
  Elem out(n_);
  for (unsigned i = 0; i < n_; ++i)
    out[i] = static_cast<std::uint32_t>((a[i] + p_ - b[i]) % p_);
  return out;
}

FqField::Elem FqField::neg(const Elem& a) const { return sub(zero(), a); }

FqField::Elem FqField::mul(const Elem& a, const Elem& b) const {
  // Lazy-reduction schoolbook product; all accumulators stay far below 2^63
  // because p < 2^20 and n <= 1024.
  std::vector<std::uint64_t> acc(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (!a[i]) continue;
    const std::uint64_t ai = a[i];
    for (unsigned j = 0; j < n_; ++j) acc[i + j] += ai * b[j];
  }
  for (std::size_t i = 2 * n_ - 2; i + 1 > n_; --i) {
    const std::uint64_t c = acc[i] % p_;
    if (c) {
      const std::size_t shift = i - n_;
      for (unsigned j = 0; j < n_; ++j) acc[shift + j] += c * (p_ - modulus_[j]);
    }
  }
  Elem out(n_);
  for (unsigned i = 0; i < n_; ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p_);
  return out;
}

FqField::Elem FqField::pow(const Elem& a, std::uint64_t e) const {
  Elem r = one();
  Elem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FqField::Elem FqField::pow_limbs(const Elem& a, const std::vector<std::uint32_t>& limbs) const {
  int top = -1;
  for (std::size_t i = limbs.size(); i-- > 0;)
    if (limbs[i]) {
      top = static_cast<int>(i);
      break;
    }
  if (top < 0) return one();
  int bit = 31;
  while (!((limbs[top] >> bit) & 1)) --bit;
  Elem r = a;
  for (int i = top; i >= 0; --i) {
    for (int b = (i == top ? bit - 1 : 31); b >= 0; --b) {
      r = mul(r, r);
      if ((limbs[i] >> b) & 1) r = mul(r, a);
    }
  }
  return r;
}

bool FqField::is_zero(const Elem& a) const {
  for (auto c : a)
    if (c) return false;
  return true;
}

FqField::Elem root_of_unity(const FqField& field, unsigned e) {
  if (e < 1 || e > 62) throw std::invalid_argument("root_of_unity: e out of range");
  const std::uint64_t m = std::uint64_t{1} << e;
  if (pow_mod(field.p() % m, field.degree(), m) != 1)
    throw std::domain_error("root_of_unity: 2^e does not divide p^n - 1");
  const auto exponent = shifted_group_order(field.p(), field.degree(), e);
  const FqField::Elem minus_one = field.from_int(field.p() - 1);
  // For even n every prime-field scalar is a square in F_{p^n} (it has a
  // square root already in F_{p^2}), so those candidates can never have
  // full 2-power order; start the sequential search past them.
  const std::uint64_t first = field.degree() % 2 == 0 ? field.p() : 1;
  for (std::uint64_t index = first; index < 2'000'000; ++index) {
    FqField::Elem g = field.element_at(index);
    FqField::Elem c = field.pow_limbs(g, exponent);
    if (field.pow(c, std::uint64_t{1} << (e - 1)) == minus_one) return c;
  }
  throw std::logic_error("root_of_unity: search exhausted");
}

bool in_base(const FqField& field, const FqField::Elem& a, std::uint64_t q) {
  return field.pow(a, q) == a;
}

std::vector<FqField::Elem> min_poly(const FqField& field, const FqField::Elem& alpha,
                                    std::uint64_t q) {
  std::vector<FqField::Elem> conjugates{alpha};
  FqField::Elem beta = field.pow(alpha, q);
  while (!(beta == alpha)) {
    conjugates.push_back(beta);
    if (conjugates.size() > field.degree())
      throw std::logic_error("min_poly: Frobenius orbit did not close");
    beta = field.pow(beta, q);
  }
  std::vector<FqField::Elem> coeffs{field.one()};
  for (const auto& c : conjugates) {
    std::vector<FqField::Elem> next(coeffs.size() + 1, field.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = field.add(next[i + 1], coeffs[i]);
      next[i] = field.sub(next[i], field.mul(c, coeffs[i]));
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace cyclo2::ff
