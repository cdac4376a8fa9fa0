#include "cyclo2/classifier.hpp"

#include <stdexcept>

namespace cyclo2 {

namespace {

std::string symbol_name(Coefficient::Symbol s, unsigned level) {
  const std::string n = std::to_string(std::uint64_t{1} << level);
  switch (s) {
    case Coefficient::Symbol::zeta: return "z" + n;
    case Coefficient::Symbol::tau_plus: return "tp" + n;
    case Coefficient::Symbol::tau_minus: return "tm" + n;
    default: return "?";
  }
}

std::string power_string(std::uint64_t exp) {
  if (exp == 0) return "";
  if (exp == 1) return "x";
  return "x^" + std::to_string(exp);
}

void check_scope(const Invariants& inv, unsigned e, const char* what) {
  if (e <= inv.nu)
    throw std::domain_error(std::string(what) + ": requires e > nu (nu = " +
                            std::to_string(inv.nu) + ", e = " + std::to_string(e) + ")");
}

void check_e_cap(unsigned e) {
  if (e < 1 || e > 20) throw std::invalid_argument("e out of supported range [1, 20]");
}

}  // namespace

std::string Coefficient::str() const {
  if (is_integer()) return std::to_string(constant);
  std::string s;
  if (symbol_scale == -1)
    s = "-";
  else if (symbol_scale != 1)
    s = std::to_string(symbol_scale) + "*";
  s += symbol_name(symbol, level);
  if (constant > 0)
    s += " + " + std::to_string(constant);
  else if (constant < 0)
    s += " - " + std::to_string(-constant);
  return s;
}

std::string SymbolicMinPoly::str() const {
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [exp, c] = *it;
    const bool leading = out.empty();
    std::string xs = power_string(exp);
    if (c.is_integer()) {
      long long v = c.constant;
      if (!leading) {
        out += v < 0 ? " - " : " + ";
        v = v < 0 ? -v : v;
      } else if (v < 0) {
        out += "-";
        v = -v;
      }
      if (xs.empty())
        out += std::to_string(v);
      else
        out += (v == 1 ? xs : std::to_string(v) + "*" + xs);
      continue;
    }
    // symbolic coefficient
    int scale = c.symbol_scale;
    std::string sign;
    if (!leading) {
      sign = scale < 0 ? " - " : " + ";
      scale = scale < 0 ? -scale : scale;
    } else if (scale < 0) {
      sign = "-";
      scale = -scale;
    }
    std::string body = (scale == 1 ? "" : std::to_string(scale) + "*") + symbol_name(c.symbol, c.level);
    if (c.constant != 0 && !xs.empty()) body = "(" + body + (c.constant > 0 ? " + " : " - ") +
                                               std::to_string(std::abs(c.constant)) + ")";
    out += sign + body;
    if (!xs.empty()) out += "*" + xs;
    if (c.constant != 0 && xs.empty())
      out += (c.constant > 0 ? " + " : " - ") + std::to_string(std::abs(c.constant));
  }
  return out;
}

std::string reason_string(CyclicityReason r) {
  switch (r) {
    case CyclicityReason::zeta4_in_f: return "zeta4_in_f";
    case CyclicityReason::tau_minus_nu_in_f: return "tau_minus_nu_in_f";
    case CyclicityReason::neither: return "neither";
  }
  return "?";
}

std::string NamedGenerator::str() const {
  if (five_exp == 0) return eps < 0 ? "[-1]" : "[1]";
  std::string p = five_exp == 1 ? "5" : "5^" + std::to_string(five_exp);
  return eps < 0 ? "[-" + p + "]" : "[" + p + "]";
}

namespace {

SymbolicMinPoly min_poly_zeta_impl(const BaseField& f, const Invariants& inv, unsigned e,
                                   unsigned i) {
  check_scope(inv, e, "min_poly_zeta");
  const unsigned nu = inv.nu;
  const bool z4 = inv.zeta4_in_f;
  const bool tminus = contains_tau(f, nu, TauSign::minus);
  const bool cyclic = z4 || tminus;
  if (!cyclic && i != 0) throw std::domain_error("min_poly_zeta: i must be 0 when non-cyclic");
  if (i > e - nu) throw std::domain_error("min_poly_zeta: index i out of range");

  SymbolicMinPoly p;
  p.terms[std::uint64_t{1} << (e - nu + 1 - i)] = Coefficient::integer(1);
  if (z4) {
    if (!contains_zeta(f, nu - 1)) throw std::logic_error("min_poly_zeta: zeta coefficient not in F");
    p.terms[0] = Coefficient{Coefficient::Symbol::zeta, nu - 1, -1, 0};
  } else if (cyclic) {
    p.terms[std::uint64_t{1} << (e - nu - i)] = Coefficient{Coefficient::Symbol::tau_minus, nu, -1, 0};
    p.terms[0] = Coefficient::integer(-1);
  } else {
    if (nu > 2) {
      if (!contains_tau(f, nu, TauSign::plus))
        throw std::logic_error("min_poly_zeta: tau+ coefficient not in F");
      p.terms[std::uint64_t{1} << (e - nu)] =
          Coefficient{Coefficient::Symbol::tau_plus, nu, -1, 0};
    }  // nu == 2: tau+_4 = 0, the middle term vanishes
    p.terms[0] = Coefficient::integer(1);
  }
  return p;
}

std::vector<std::pair<FieldLabel, UnitClass>> codegree2_impl(const Invariants& inv, bool cyclic,
                                                             unsigned e) {
  const std::uint64_t m = std::uint64_t{1} << e;
  const std::uint64_t half = std::uint64_t{1} << (e - 1);
  std::vector<std::pair<FieldLabel, UnitClass>> out;
  out.emplace_back(FieldLabel::Zeta(e - 1), UnitClass(e, half + 1));  // sigma_{5^{2^{e-3}}}
  if (!cyclic) {
    out.emplace_back(FieldLabel::TauPlus(e), UnitClass(e, m - 1));      // sigma_{-1}
    out.emplace_back(FieldLabel::TauMinus(e), UnitClass(e, half - 1));  // sigma_{-(1+2^{e-1})}
  }
  (void)inv;
  return out;
}

}  // namespace

SymbolicMinPoly min_poly_zeta(const BaseField& f, unsigned e, unsigned i) {
  check_e_cap(e);
  return min_poly_zeta_impl(f, compute_invariants(f), e, i);
}

std::vector<std::pair<FieldLabel, UnitClass>> codegree2_subextensions(const BaseField& f,
                                                                      unsigned e) {
  check_e_cap(e);
  Invariants inv = compute_invariants(f);
  check_scope(inv, e, "codegree2_subextensions");
  const bool cyclic = inv.zeta4_in_f || contains_tau(f, inv.nu, TauSign::minus);
  return codegree2_impl(inv, cyclic, e);
}

Classification classify(const BaseField& f, unsigned e) {
  check_e_cap(e);
  Classification c;
  c.field = f;
  c.e = e;
  c.invariants = compute_invariants(f);

  const unsigned nu = c.invariants.nu;
  const bool z4 = c.invariants.zeta4_in_f;
  const bool tminus = contains_tau(f, nu, TauSign::minus);
  c.cyclic = z4 || tminus;
  c.reason = z4 ? CyclicityReason::zeta4_in_f
                : (tminus ? CyclicityReason::tau_minus_nu_in_f : CyclicityReason::neither);

  if (e <= nu) {
    c.small_degree = true;
    c.cyclic = true;  // degree <= 2 extensions are always cyclic
    c.degree = contains_zeta(f, e) ? 1 : 2;
    c.galois.modulus_exponent = e < 3 ? 3 : e;
    c.galois.elements.clear();
    c.tower_count = 1;
    return c;
  }

  const std::uint64_t m = std::uint64_t{1} << e;
  c.degree = std::uint64_t{1} << (e - nu + 1);
  if (c.cyclic) {
    const std::uint64_t five_exp = std::uint64_t{1} << (nu - 3);  // nu >= 3 whenever cyclic
    const int eps = z4 ? +1 : -1;
    const std::uint64_t g = recompose(e, eps, five_exp);
    c.galois = span(e, {g});
    c.generator_names = {NamedGenerator{eps, five_exp, g}};
    c.tower_count = 1;
  } else {
    if (f.characteristic() != 0)
      throw std::logic_error("classify: non-cyclic result over positive characteristic");
    const std::uint64_t five_exp = std::uint64_t{1} << (nu - 2);
    const std::uint64_t g5 = pow_mod(5, five_exp, m);
    c.galois = span(e, {m - 1, g5});
    c.generator_names = {NamedGenerator{-1, 0, m - 1}, NamedGenerator{+1, five_exp, g5}};
    c.tower_count = 2 * (e - nu) + 1;
  }
  if (c.galois.order() != c.degree)
    throw std::logic_error("classify: predicted generator order disagrees with degree");
  c.codegree2 = codegree2_impl(c.invariants, c.cyclic, e);
  c.min_poly = min_poly_zeta_impl(f, c.invariants, e, 0);
  return c;
}

TauReport tau_report(const BaseField& f, unsigned e, TauSign sign) {
  check_e_cap(e);
  Invariants inv = compute_invariants(f);
  check_scope(inv, e, "tau_report");
  // The tau towers bottom out at the largest k with tau+_{2^k} in F. For
  // zeta_4 not in F that is nu_plus; for zeta_4 in F it is nu - 1, since
  // F(tau+_{2^k}) = F(zeta_{2^k}) and zeta_{2^(nu-1)} is the last root in F.
  const unsigned nup = inv.zeta4_in_f ? inv.nu - 1 : inv.nu_plus;
  const std::uint64_t m = std::uint64_t{1} << e;

  TauReport r{.sign = sign,
              .degree = std::uint64_t{1} << (e - nup),
              .unique_codegree2 = e - 1 > nup ? FieldLabel::TauPlus(e - 1) : FieldLabel::Base(),
              .step_min_poly = {},
              .tower = {},
              .quotient_generator = UnitClass(e, pow_mod(5, std::uint64_t{1} << (nup - 2), m)),
              .quotient_modulus =
                  UnitClass(e, sign == TauSign::plus ? m - 1 : (std::uint64_t{1} << (e - 1)) - 1)};

  const long long shift = sign == TauSign::plus ? -2 : +2;
  r.step_min_poly.terms[2] = Coefficient::integer(1);
  if (e - 1 == 2)
    r.step_min_poly.terms[0] = Coefficient::integer(shift);  // tau+_4 = 0
  else
    r.step_min_poly.terms[0] = Coefficient{Coefficient::Symbol::tau_plus, e - 1, -1, shift};

  r.tower.steps.push_back(sign == TauSign::plus ? FieldLabel::TauPlus(e)
                                                : FieldLabel::TauMinus(e));
  for (unsigned k = e - 1; k > nup; --k) r.tower.steps.push_back(FieldLabel::TauPlus(k));
  r.tower.steps.push_back(FieldLabel::Base());
  return r;
}

bool is_full_u8(const BaseField& f) {
  return !contains_zeta(f, 2) && compute_invariants(f).nu == 2;
}

}  // namespace cyclo2
