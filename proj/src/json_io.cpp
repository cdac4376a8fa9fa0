#include "cyclo2/json_io.hpp"

#include <stdexcept>

namespace cyclo2 {

namespace {

std::string tf_value_string(TfValue t) {
  switch (t) {
    case TfValue::one: return "1";
    case TfValue::two: return "2";
    case TfValue::full: return "2^k";
  }
  return "?";
}

TfValue tf_value_from(const std::string& s) {
  if (s == "1") return TfValue::one;
  if (s == "2") return TfValue::two;
  if (s == "2^k") return TfValue::full;
  throw std::invalid_argument("bad t_F value '" + s + "'");
}

std::string symbol_string(Coefficient::Symbol s) {
  switch (s) {
    case Coefficient::Symbol::none: return "none";
    case Coefficient::Symbol::zeta: return "zeta";
    case Coefficient::Symbol::tau_plus: return "tau_plus";
    case Coefficient::Symbol::tau_minus: return "tau_minus";
  }
  return "?";
}

Coefficient::Symbol symbol_from(const std::string& s) {
  if (s == "none") return Coefficient::Symbol::none;
  if (s == "zeta") return Coefficient::Symbol::zeta;
  if (s == "tau_plus") return Coefficient::Symbol::tau_plus;
  if (s == "tau_minus") return Coefficient::Symbol::tau_minus;
  throw std::invalid_argument("bad coefficient symbol '" + s + "'");
}

CyclicityReason reason_from(const std::string& s) {
  if (s == "zeta4_in_f") return CyclicityReason::zeta4_in_f;
  if (s == "tau_minus_nu_in_f") return CyclicityReason::tau_minus_nu_in_f;
  if (s == "neither") return CyclicityReason::neither;
  throw std::invalid_argument("bad cyclicity reason '" + s + "'");
}

}  // namespace

json to_json(const BaseField& f) { return f.spec_string(); }

BaseField base_field_from_json(const json& j) { return parse_field(j.get<std::string>()); }

json to_json(const Invariants& inv) {
  json t = json::array();
  for (const auto& e : inv.t_table) t.push_back({{"k", e.k}, {"t", tf_value_string(e.t)}});
  json out{{"nu_plus", inv.nu_plus},
           {"nu", inv.nu},
           {"has_c2", inv.has_c2},
           {"zeta4_in_f", inv.zeta4_in_f},
           {"t_table", t}};
  if (inv.c2_witness)
    out["c2_witness"] = *inv.c2_witness;
  else
    out["c2_witness"] = nullptr;
  return out;
}

Invariants invariants_from_json(const json& j) {
  Invariants inv;
  inv.nu_plus = j.at("nu_plus").get<unsigned>();
  inv.nu = j.at("nu").get<unsigned>();
  inv.has_c2 = j.at("has_c2").get<bool>();
  inv.zeta4_in_f = j.at("zeta4_in_f").get<bool>();
  if (!j.at("c2_witness").is_null()) inv.c2_witness = j.at("c2_witness").get<unsigned>();
  for (const auto& e : j.at("t_table"))
    inv.t_table.push_back({e.at("k").get<unsigned>(), tf_value_from(e.at("t").get<std::string>())});
  return inv;
}

json to_json(const UnitSubgroup& h) {
  return json{{"modulus_exponent", h.modulus_exponent},
              {"generators", h.generators},
              {"elements", h.elements}};
}

UnitSubgroup unit_subgroup_from_json(const json& j) {
  UnitSubgroup h;
  h.modulus_exponent = j.at("modulus_exponent").get<unsigned>();
  h.generators = j.at("generators").get<std::vector<std::uint64_t>>();
  h.elements = j.at("elements").get<std::vector<std::uint64_t>>();
  return h;
}

json to_json(const Coefficient& c) {
  if (c.is_integer()) return json{{"const", c.constant}};
  return json{{"symbol", symbol_string(c.symbol)},
              {"level", c.level},
              {"scale", c.symbol_scale},
              {"const", c.constant}};
}

Coefficient coefficient_from_json(const json& j) {
  Coefficient c;
  c.constant = j.at("const").get<long long>();
  if (j.contains("symbol")) {
    c.symbol = symbol_from(j.at("symbol").get<std::string>());
    c.level = j.at("level").get<unsigned>();
    c.symbol_scale = j.at("scale").get<int>();
  }
  return c;
}

json to_json(const SymbolicMinPoly& p) {
  json terms = json::array();
  for (const auto& [exp, c] : p.terms) terms.push_back({{"exp", exp}, {"coeff", to_json(c)}});
  return json{{"terms", terms}, {"rendered", p.str()}};
}

SymbolicMinPoly min_poly_from_json(const json& j) {
  SymbolicMinPoly p;
  for (const auto& t : j.at("terms"))
    p.terms[t.at("exp").get<std::uint64_t>()] = coefficient_from_json(t.at("coeff"));
  return p;
}

json to_json(const Classification& c) {
  json codegree2 = json::array();
  for (const auto& [label, uc] : c.codegree2)
    codegree2.push_back({{"label", label.str()}, {"stabilizer", uc.residue}});
  json names = json::array();
  for (const auto& g : c.generator_names) names.push_back(g.str());
  return json{{"field", to_json(c.field)},
              {"e", c.e},
              {"invariants", to_json(c.invariants)},
              {"small_degree", c.small_degree},
              {"cyclic", c.cyclic},
              {"reason", reason_string(c.reason)},
              {"degree", c.degree},
              {"galois", to_json(c.galois)},
              {"generator_names", names},
              {"codegree2", codegree2},
              {"min_poly", to_json(c.min_poly)},
              {"tower_count", c.tower_count}};
}

Classification classification_from_json(const json& j) {
  Classification c;
  c.field = base_field_from_json(j.at("field"));
  c.e = j.at("e").get<unsigned>();
  c.invariants = invariants_from_json(j.at("invariants"));
  c.small_degree = j.at("small_degree").get<bool>();
  c.cyclic = j.at("cyclic").get<bool>();
  c.reason = reason_from(j.at("reason").get<std::string>());
  c.degree = j.at("degree").get<std::uint64_t>();
  c.galois = unit_subgroup_from_json(j.at("galois"));
  for (const auto& entry : j.at("codegree2"))
    c.codegree2.emplace_back(FieldLabel::parse(entry.at("label").get<std::string>()),
                             UnitClass(c.e, entry.at("stabilizer").get<std::uint64_t>()));
  c.min_poly = min_poly_from_json(j.at("min_poly"));
  c.tower_count = j.at("tower_count").get<std::uint64_t>();
  // generator names are reconstructed from the galois generators
  for (std::uint64_t g : c.galois.generators) {
    UnitClass uc(c.e, g);
    c.generator_names.push_back(NamedGenerator{uc.sign, uc.log5, g});
  }
  return c;
}

json to_json(const TauReport& r) {
  return json{{"sign", r.sign == TauSign::plus ? "+" : "-"},
              {"degree", r.degree},
              {"unique_codegree2", r.unique_codegree2.str()},
              {"step_min_poly", to_json(r.step_min_poly)},
              {"tower", r.tower.step_strings()},
              {"quotient_generator", r.quotient_generator.residue},
              {"quotient_modulus", r.quotient_modulus.residue}};
}

json to_json(const std::vector<TowerDecomposition>& towers) {
  json out = json::array();
  for (const auto& t : towers) out.push_back(t.step_strings());
  return out;
}

std::vector<TowerDecomposition> towers_from_json(const json& j) {
  std::vector<TowerDecomposition> out;
  for (const auto& row : j) {
    TowerDecomposition t;
    for (const auto& s : row) t.steps.push_back(FieldLabel::parse(s.get<std::string>()));
    out.push_back(std::move(t));
  }
  return out;
}

json to_json(const oracle::VerificationReport& r) {
  json clauses = json::array();
  for (const auto& c : r.clauses)
    clauses.push_back({{"clause", c.clause},
                       {"pass", c.pass},
                       {"skipped", c.skipped},
                       {"expected", c.expected},
                       {"actual", c.actual}});
  return json{{"field", to_json(r.field)},
              {"e", r.e},
              {"all_pass", r.all_pass()},
              {"clauses", clauses}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace cyclo2
