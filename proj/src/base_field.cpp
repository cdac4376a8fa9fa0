#include "cyclo2/base_field.hpp"

#include <cstdlib>
#include <stdexcept>

namespace cyclo2 {

unsigned v2(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("v2(0) undefined");
  unsigned v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  return v;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t i = 3; i * i <= n; i += 2)
    if (n % i == 0) return false;
  return true;
}

bool is_squarefree(std::int64_t d) {
  std::uint64_t n = d < 0 ? static_cast<std::uint64_t>(-d) : static_cast<std::uint64_t>(d);
  if (n == 0) return false;
  for (std::uint64_t i = 2; i * i <= n; ++i)
    if (n % (i * i) == 0) return false;
  return true;
}

BaseField BaseField::finite(std::uint64_t p, unsigned k) {
  if (p == 2) throw std::invalid_argument("unsupported characteristic: p = 2");
  if (!is_prime(p)) throw std::invalid_argument("invalid field: p is not prime");
  if (k < 1 || k > 16) throw std::invalid_argument("invalid field: extension degree out of range");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > (std::uint64_t{1} << 52) / p)
      throw std::invalid_argument("invalid field: q = p^k too large");
    q *= p;
  }
  return BaseField(FiniteField{p, k, q});
}

BaseField BaseField::cyclotomic(std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("invalid field: m must be positive");
  if (m > (std::uint64_t{1} << 40)) throw std::invalid_argument("invalid field: m too large");
  if (m % 4 == 2) m /= 2;  // Q(zeta_{2m}) = Q(zeta_m) for odd m
  return BaseField(CyclotomicQ{m});
}

BaseField BaseField::quadratic(std::int64_t d) {
  if (d == 0 || d == 1) throw std::invalid_argument("invalid field: d must not be 0 or 1");
  if (d > (std::int64_t{1} << 40) || d < -(std::int64_t{1} << 40))
    throw std::invalid_argument("invalid field: d too large");
  if (!is_squarefree(d)) throw std::invalid_argument("invalid field: d must be squarefree");
  return BaseField(QuadraticQ{d});
}

std::uint64_t BaseField::characteristic() const {
  if (auto* f = std::get_if<FiniteField>(&v_)) return f->p;
  return 0;
}

std::string BaseField::spec_string() const {
  if (auto* f = std::get_if<FiniteField>(&v_)) {
    std::string s = "fq:" + std::to_string(f->p);
    if (f->k > 1) s += "^" + std::to_string(f->k);
    return s;
  }
  if (auto* c = std::get_if<CyclotomicQ>(&v_)) return "qzeta:" + std::to_string(c->m);
  return "qsqrt:" + std::to_string(std::get<QuadraticQ>(v_).d);
}

bool contains_zeta(const BaseField& f, unsigned k) {
  if (k <= 1) return true;
  const std::uint64_t pk = std::uint64_t{1} << k;
  if (auto* fq = std::get_if<FiniteField>(&f.value())) return (fq->q - 1) % pk == 0;
  if (auto* cy = std::get_if<CyclotomicQ>(&f.value())) return cy->m % pk == 0;
  const auto& qd = std::get<QuadraticQ>(f.value());
  return k == 2 && qd.d == -1;
}

bool contains_tau(const BaseField& f, unsigned k, TauSign sign) {
  if (k < 2) throw std::invalid_argument("contains_tau: k must be >= 2");
  const std::uint64_t pk = std::uint64_t{1} << k;
  if (auto* fq = std::get_if<FiniteField>(&f.value())) {
    const std::uint64_t r = fq->q % pk;
    if (sign == TauSign::plus) return r == 1 || r == pk - 1;
    return r == 1 || r == pk / 2 - 1;
  }
  if (auto* cy = std::get_if<CyclotomicQ>(&f.value())) {
    // Conductor rule: Q(tau_{2^k}) has conductor 2^k for k >= 3; tau+_4 = 0
    // and tau-_4 = 2*zeta_4.
    if (sign == TauSign::plus) return k <= 2 || cy->m % pk == 0;
    if (k == 2) return cy->m % 4 == 0;
    return cy->m % pk == 0;
  }
  const auto& qd = std::get<QuadraticQ>(f.value());
  if (sign == TauSign::plus) return k == 2 || (k == 3 && qd.d == 2);
  return (k == 2 && qd.d == -1) || (k == 3 && qd.d == -2);
}

std::uint64_t order_over(const BaseField& f, unsigned k) {
  if (k > 62) throw std::invalid_argument("order_over: k out of range");
  unsigned s;
  if (auto* fq = std::get_if<FiniteField>(&f.value())) {
    s = v2(fq->q - 1);
  } else if (auto* cy = std::get_if<CyclotomicQ>(&f.value())) {
    s = cy->m % 2 == 0 ? v2(cy->m) : 1;
  } else {
    s = std::get<QuadraticQ>(f.value()).d == -1 ? 2 : 1;
  }
  return std::uint64_t{1} << (k > s ? k - s : 0);
}

BaseField parse_field(const std::string& spec) {
  auto number = [](const std::string& s, bool allow_sign) -> std::int64_t {
    if (s.empty()) throw std::invalid_argument("parse error: empty number in field spec");
    std::size_t pos = 0;
    std::int64_t value;
    try {
      value = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse error: bad number '" + s + "' in field spec");
    }
    if (pos != s.size()) throw std::invalid_argument("parse error: trailing characters in '" + s + "'");
    if (!allow_sign && value < 0) throw std::invalid_argument("parse error: unexpected negative value");
    return value;
  };

  if (spec.rfind("fq:", 0) == 0) {
    std::string body = spec.substr(3);
    auto caret = body.find('^');
    std::uint64_t p = static_cast<std::uint64_t>(number(body.substr(0, caret), false));
    unsigned k = 1;
    if (caret != std::string::npos)
      k = static_cast<unsigned>(number(body.substr(caret + 1), false));
    return BaseField::finite(p, k);
  }
  if (spec.rfind("qzeta:", 0) == 0)
    return BaseField::cyclotomic(static_cast<std::uint64_t>(number(spec.substr(6), false)));
  if (spec.rfind("qsqrt:", 0) == 0) return BaseField::quadratic(number(spec.substr(6), true));
  throw std::invalid_argument("parse error: unknown field spec '" + spec + "'");
}

}  // namespace cyclo2
