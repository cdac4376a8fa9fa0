#include "cyclo2/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cyclo2/invariants.hpp"
#include "cyclo2/towers.hpp"

namespace cyclo2::oracle {

int kronecker(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;
  int twos = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++twos;
  }
  int k = 1;
  if (twos & 1) {
    const int am8 = static_cast<int>(((a % 8) + 8) % 8);
    if (am8 == 3 || am8 == 5) k = -k;
  }
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  while (true) {
    a %= n;
    if (a < 0) a += n;
    if (a == 0) return n == 1 ? k : 0;
    twos = 0;
    while ((a & 1) == 0) {
      a >>= 1;
      ++twos;
    }
    if (twos & 1) {
      const long long nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) k = -k;
    }
    if (a % 4 == 3 && n % 4 == 3) k = -k;
    const long long t = a;
    a = n;
    n = t;
  }
}

namespace {

void fill_generators(UnitSubgroup& h) {
  h.generators.clear();
  if (h.order() <= 1) return;
  UnitSubgroup cur = span(h.modulus_exponent, {});
  for (std::uint64_t x : h.elements) {
    if (cur.contains(x)) continue;
    h.generators.push_back(x);
    cur = span(h.modulus_exponent, h.generators);
    if (cur.order() == h.order()) break;
  }
}

void check_oracle_e(unsigned e) {
  if (e < 3 || e > 20) throw std::invalid_argument("oracle: e out of supported range [3, 20]");
}

std::string render_set(const std::vector<std::uint64_t>& v) {
  if (v.size() > 16) return "<" + std::to_string(v.size()) + " elements>";
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

}  // namespace

UnitSubgroup galois_subgroup(const BaseField& f, unsigned e) {
  check_oracle_e(e);
  const std::uint64_t m = std::uint64_t{1} << e;

  if (auto* fq = std::get_if<FiniteField>(&f.value())) return span(e, {fq->q % m});

  if (auto* cy = std::get_if<CyclotomicQ>(&f.value())) {
    const unsigned b = cy->m % 2 == 0 ? v2(cy->m) : 0;
    if (b < 2) return full_unit_group(e);
    const unsigned bb = b < e ? b : e;
    UnitSubgroup h;
    h.modulus_exponent = e;
    for (std::uint64_t a = 1; a < m; a += std::uint64_t{1} << bb) h.elements.push_back(a);
    fill_generators(h);
    return h;
  }

  const auto& qd = std::get<QuadraticQ>(f.value());
  const long long d = qd.d;
  const long long disc = ((d % 4) + 4) % 4 == 1 ? d : 4 * d;
  const std::uint64_t abs_disc = disc < 0 ? static_cast<std::uint64_t>(-disc)
                                          : static_cast<std::uint64_t>(disc);
  const std::uint64_t big = std::lcm(abs_disc, m);
  if (big > (std::uint64_t{1} << 28))
    throw std::invalid_argument("quadratic oracle: enumeration modulus too large");
  std::vector<bool> hit(m, false);
  for (std::uint64_t b = 1; b < big; b += 2) {
    if (std::gcd(b, big) != 1) continue;
    if (kronecker(disc, static_cast<long long>(b)) == 1) hit[b % m] = true;
  }
  UnitSubgroup h;
  h.modulus_exponent = e;
  for (std::uint64_t a = 1; a < m; a += 2)
    if (hit[a]) h.elements.push_back(a);
  fill_generators(h);
  return h;
}

UnitSubgroup label_stabilizer(const UnitSubgroup& h, const FieldLabel& label) {
  if (label.kind == LabelKind::base) return h;
  if (label.level > h.modulus_exponent)
    throw std::invalid_argument("label_stabilizer: label level exceeds modulus exponent");
  const std::uint64_t mk = std::uint64_t{1} << label.level;
  UnitSubgroup out;
  out.modulus_exponent = h.modulus_exponent;
  for (std::uint64_t a : h.elements) {
    const std::uint64_t r = a % mk;
    bool keep = false;
    switch (label.kind) {
      case LabelKind::zeta: keep = r == 1; break;
      case LabelKind::tau_plus: keep = r == 1 || r == mk - 1; break;
      case LabelKind::tau_minus: keep = r == 1 || r == mk / 2 - 1; break;
      default: break;
    }
    if (keep) out.elements.push_back(a);
  }
  fill_generators(out);
  return out;
}

std::vector<std::pair<FieldLabel, UnitSubgroup>> label_stabilizer_table(const UnitSubgroup& h,
                                                                        unsigned e) {
  std::vector<std::pair<FieldLabel, UnitSubgroup>> out;
  out.emplace_back(FieldLabel::Base(), h);
  for (unsigned k = 2; k <= e; ++k) {
    out.emplace_back(FieldLabel::Zeta(k), label_stabilizer(h, FieldLabel::Zeta(k)));
    out.emplace_back(FieldLabel::TauPlus(k), label_stabilizer(h, FieldLabel::TauPlus(k)));
    out.emplace_back(FieldLabel::TauMinus(k), label_stabilizer(h, FieldLabel::TauMinus(k)));
  }
  return out;
}

std::uint64_t degree_of(const BaseField& f, unsigned e, const FieldLabel& label) {
  UnitSubgroup h = galois_subgroup(f, e);
  return h.order() / label_stabilizer(h, label).order();
}

SubfieldLattice subfield_lattice(const BaseField& f, unsigned e) {
  UnitSubgroup h = galois_subgroup(f, e);
  auto chains = maximal_chains(h);

  std::map<std::vector<std::uint64_t>, std::size_t> index;
  SubfieldLattice lat;
  auto node_of = [&](const UnitSubgroup& s) {
    auto [it, fresh] = index.try_emplace(s.elements, lat.nodes.size());
    if (fresh) lat.nodes.push_back({s, {}, h.order() / s.order()});
    return it->second;
  };
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& chain : chains) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      std::size_t a = node_of(chain[i]);
      if (i + 1 < chain.size()) edges.emplace(a, node_of(chain[i + 1]));
    }
  }
  // Deterministic node order: ascending subgroup order, then elements.
  std::vector<std::size_t> perm(lat.nodes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = lat.nodes[a].subgroup;
    const auto& y = lat.nodes[b].subgroup;
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements < y.elements;
  });
  std::vector<std::size_t> where(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) where[perm[i]] = i;
  SubfieldLattice out;
  for (std::size_t i = 0; i < perm.size(); ++i) out.nodes.push_back(lat.nodes[perm[i]]);
  for (auto [a, b] : edges) out.edges.emplace_back(where[a], where[b]);
  std::sort(out.edges.begin(), out.edges.end());

  for (auto& [label, stab] : label_stabilizer_table(h, e)) {
    auto it = index.find(stab.elements);
    if (it != index.end()) out.nodes[where[it->second]].labels.push_back(label);
  }
  return out;
}

std::uint64_t frobenius_orbit_size(std::uint64_t q, unsigned e) {
  const std::uint64_t m = std::uint64_t{1} << e;
  std::uint64_t j = q % m;
  std::uint64_t n = 1;
  while (j != 1) {
    j = j * (q % m) % m;
    ++n;
  }
  return n;
}

std::vector<ff::FqField::Elem> resolve_min_poly(const SymbolicMinPoly& poly,
                                                const ff::FqField& field,
                                                const ff::FqField::Elem& zeta, unsigned e) {
  const std::uint64_t m = std::uint64_t{1} << e;
  std::vector<ff::FqField::Elem> out(poly.degree() + 1, field.zero());
  for (const auto& [exp, c] : poly.terms) {
    const std::uint64_t p = field.p();
    const std::uint64_t cc = static_cast<std::uint64_t>(((c.constant % static_cast<long long>(p)) +
                                                         static_cast<long long>(p)) %
                                                        static_cast<long long>(p));
    ff::FqField::Elem val = field.from_int(cc);
    if (c.symbol != Coefficient::Symbol::none) {
      const std::uint64_t shift = std::uint64_t{1} << (e - c.level);
      ff::FqField::Elem w = field.pow(zeta, shift);
      ff::FqField::Elem w_inv = field.pow(zeta, m - shift);
      ff::FqField::Elem sym;
      switch (c.symbol) {
        case Coefficient::Symbol::zeta: sym = w; break;
        case Coefficient::Symbol::tau_plus: sym = field.add(w, w_inv); break;
        default: sym = field.sub(w, w_inv); break;
      }
      for (int s = 0; s < std::abs(c.symbol_scale); ++s)
        val = c.symbol_scale > 0 ? field.add(val, sym) : field.sub(val, sym);
    }
    out[static_cast<std::size_t>(exp)] = val;
  }
  return out;
}

namespace {

// One index-2 extension layer above k inside h (smallest-new-element order).
std::vector<UnitSubgroup> extensions_above(const UnitSubgroup& k, const UnitSubgroup& h) {
  const std::uint64_t m = h.modulus();
  std::vector<bool> in_k(m, false);
  for (std::uint64_t x : k.elements) in_k[x] = true;
  std::vector<bool> claimed(m, false);
  std::vector<UnitSubgroup> out;
  for (std::uint64_t x : h.elements) {
    if (in_k[x] || claimed[x]) continue;
    if (!in_k[x * x % m]) continue;
    UnitSubgroup ext;
    ext.modulus_exponent = h.modulus_exponent;
    for (std::uint64_t t : k.elements) {
      const std::uint64_t y = x * t % m;
      claimed[y] = true;
      ext.elements.push_back(y);
    }
    ext.elements.insert(ext.elements.end(), k.elements.begin(), k.elements.end());
    std::sort(ext.elements.begin(), ext.elements.end());
    fill_generators(ext);
    out.push_back(std::move(ext));
  }
  return out;
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const auto& c : clauses)
    if (!c.pass && !c.skipped) return false;
  return true;
}

VerificationReport verify(const BaseField& f, unsigned e, unsigned max_construct_degree) {
  const Invariants inv = compute_invariants(f);
  if (e <= inv.nu) throw std::domain_error("verify: requires e > nu");
  const Classification cls = classify(f, e);
  const UnitSubgroup h = galois_subgroup(f, e);
  const std::uint64_t m = std::uint64_t{1} << e;

  VerificationReport rep;
  rep.field = f;
  rep.e = e;
  auto add = [&](const std::string& clause, bool pass, std::string expected, std::string actual) {
    rep.clauses.push_back({clause, pass, false, std::move(expected), std::move(actual)});
  };
  auto skip = [&](const std::string& clause, std::string why) {
    rep.clauses.push_back({clause, true, true, std::move(why), ""});
  };

  add("degree", cls.degree == h.order(), std::to_string(cls.degree), std::to_string(h.order()));

  const bool oracle_cyclic = is_cyclic(h);
  add("cyclicity", cls.cyclic == oracle_cyclic, cls.cyclic ? "cyclic" : "non-cyclic",
      oracle_cyclic ? "cyclic" : "non-cyclic");

  add("galois_elements", cls.galois.elements == h.elements, render_set(cls.galois.elements),
      render_set(h.elements));

  // Codegree-2 subextensions against the order-2 subgroups of H.
  std::vector<std::uint64_t> involutions;
  for (std::uint64_t x : h.elements)
    if (x != 1 && x * x % m == 1) involutions.push_back(x);
  std::vector<std::uint64_t> predicted;
  bool stab_match = true;
  for (const auto& [label, uc] : cls.codegree2) {
    predicted.push_back(uc.residue);
    const UnitSubgroup st = label_stabilizer(h, label);
    const std::vector<std::uint64_t> expect{1, uc.residue};
    if (!(st.elements == expect)) stab_match = false;
  }
  std::sort(predicted.begin(), predicted.end());
  add("codegree2_count", cls.codegree2.size() == involutions.size(),
      std::to_string(cls.codegree2.size()), std::to_string(involutions.size()));
  add("codegree2_stabilizers", stab_match && predicted == involutions, render_set(predicted),
      render_set(involutions));

  // tau+ / tau- subextension structure.
  for (TauSign sign : {TauSign::plus, TauSign::minus}) {
    const std::string tag = sign == TauSign::plus ? "tau_plus" : "tau_minus";
    const TauReport tr = tau_report(f, e, sign);
    const FieldLabel top = sign == TauSign::plus ? FieldLabel::TauPlus(e) : FieldLabel::TauMinus(e);
    const UnitSubgroup stab = label_stabilizer(h, top);
    add(tag + "_degree", tr.degree == h.order() / stab.order(), std::to_string(tr.degree),
        std::to_string(h.order() / stab.order()));
    const auto supers = extensions_above(stab, h);
    const UnitSubgroup expected_stab = label_stabilizer(h, tr.unique_codegree2);
    const bool unique_ok = supers.size() == 1 && supers[0].elements == expected_stab.elements;
    add(tag + "_unique_codegree2", unique_ok, tr.unique_codegree2.str(),
        std::to_string(supers.size()) + " candidate(s)");
  }

  // Tower enumeration against the maximal chains of H.
  {
    const auto towers = enumerate_towers(f, e);
    const auto chains = maximal_chains(h);
    add("tower_count",
        cls.tower_count == towers.size() && cls.tower_count == chains.size(),
        std::to_string(cls.tower_count), std::to_string(chains.size()));
    std::vector<std::vector<std::vector<std::uint64_t>>> lhs, rhs;
    for (const auto& t : towers) {
      std::vector<std::vector<std::uint64_t>> key;
      for (const auto& step : t.steps) key.push_back(label_stabilizer(h, step).elements);
      lhs.push_back(std::move(key));
    }
    for (const auto& chain : chains) {
      std::vector<std::vector<std::uint64_t>> key;
      for (const auto& sub : chain) key.push_back(sub.elements);
      rhs.push_back(std::move(key));
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    add("tower_bijection", lhs == rhs, std::to_string(lhs.size()) + " towers",
        std::to_string(rhs.size()) + " chains");
  }

  if (oracle_cyclic) {
    // F(zeta_{2^nu}) = F(tau+_{2^nu}): the two stabilizers coincide.
    const auto tau_stab = label_stabilizer(h, FieldLabel::TauPlus(inv.nu));
    const auto zeta_stab = label_stabilizer(h, FieldLabel::Zeta(inv.nu));
    add("tau_plus_nu_names_zeta_level", tau_stab.elements == zeta_stab.elements,
        render_set(zeta_stab.elements), render_set(tau_stab.elements));
  }

  // Concrete finite-field clauses.
  if (auto* fq = std::get_if<FiniteField>(&f.value())) {
    const std::uint64_t orbit = frobenius_orbit_size(fq->q, e);
    const std::uint64_t total_degree = fq->k * orbit;
    if (total_degree > max_construct_degree) {
      skip("min_poly_annihilation",
           "construction degree " + std::to_string(total_degree) + " above cap");
      skip("step_relations", "construction degree above cap");
    } else {
      const ff::FqField field(fq->p, static_cast<unsigned>(total_degree));
      const auto zeta = ff::root_of_unity(field, e);
      add("min_poly_degree", cls.min_poly.degree() == orbit, std::to_string(cls.min_poly.degree()),
          std::to_string(orbit));
      const auto coeffs = resolve_min_poly(cls.min_poly, field, zeta, e);
      bool base_ok = true;
      for (const auto& c : coeffs)
        if (!ff::in_base(field, c, fq->q)) base_ok = false;
      add("min_poly_coefficients_in_base", base_ok, "all coefficients in F_q",
          base_ok ? "ok" : "coefficient outside F_q");
      ff::FqField::Elem acc = field.zero();
      for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = field.add(field.mul(acc, zeta), coeffs[i]);
      add("min_poly_annihilation", field.is_zero(acc), "0", field.is_zero(acc) ? "0" : "nonzero");

      const auto z_inv = field.pow(zeta, m - 1);
      const auto tp_e = field.add(zeta, z_inv);
      const auto tm_e = field.sub(zeta, z_inv);
      const auto z2 = field.mul(zeta, zeta);
      const auto tp_prev = field.add(z2, field.pow(z_inv, 2));
      const auto two = field.from_int(2);
      const bool step_ok = field.mul(tp_e, tp_e) == field.add(tp_prev, two) &&
                           field.mul(tm_e, tm_e) == field.sub(tp_prev, two);
      add("step_relations", step_ok, "tau^2 = tau+_prev +- 2", step_ok ? "ok" : "mismatch");

      const auto one = field.one();
      const bool quad_ok =
          field.is_zero(field.add(field.sub(z2, field.mul(tp_e, zeta)), one)) &&
          field.is_zero(field.sub(field.sub(z2, field.mul(tm_e, zeta)), one));
      add("quadratic_relations", quad_ok, "zeta^2 - tau*zeta -+ 1 = 0", quad_ok ? "ok" : "mismatch");
    }
  }

  return rep;
}

}  // namespace cyclo2::oracle
