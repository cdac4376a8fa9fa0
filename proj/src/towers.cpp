#include "cyclo2/towers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cyclo2/invariants.hpp"

namespace cyclo2 {

std::vector<TowerDecomposition> enumerate_towers(const BaseField& f, unsigned e) {
  if (e > 20) throw std::invalid_argument("enumerate_towers: e out of supported range");
  const Invariants inv = compute_invariants(f);
  const unsigned nu = inv.nu;
  if (e <= nu) throw std::domain_error("enumerate_towers: requires e > nu");
  const bool cyclic = inv.zeta4_in_f || contains_tau(f, nu, TauSign::minus);

  std::vector<TowerDecomposition> out;
  TowerDecomposition zeta_tower;
  for (unsigned k = e; k >= nu; --k) zeta_tower.steps.push_back(FieldLabel::Zeta(k));
  zeta_tower.steps.push_back(FieldLabel::Base());
  out.push_back(zeta_tower);
  if (cyclic) return out;

  // Non-cyclic: nu = nu_plus, and the remaining towers switch out of the
  // zeta chain at level e-r through tau+ or tau-.
  for (int which = 0; which < 2; ++which) {
    for (unsigned r = 0; r + nu + 1 <= e; ++r) {
      TowerDecomposition t;
      for (unsigned k = e; k > e - r; --k) t.steps.push_back(FieldLabel::Zeta(k));
      t.steps.push_back(FieldLabel::Zeta(e - r));
      if (which == 0) {
        for (unsigned k = e - r; k > nu; --k) t.steps.push_back(FieldLabel::TauPlus(k));
      } else {
        t.steps.push_back(FieldLabel::TauMinus(e - r));
        for (unsigned k = e - r - 1; k > nu; --k) t.steps.push_back(FieldLabel::TauPlus(k));
      }
      t.steps.push_back(FieldLabel::Base());
      out.push_back(std::move(t));
    }
  }
  return out;
}

bool is_valid_tower(const TowerDecomposition& t, unsigned e) {
  const auto& s = t.steps;
  if (s.size() < 2) return false;
  if (!(s.front() == FieldLabel::Zeta(e)) || !(s.back() == FieldLabel::Base())) return false;
  for (std::size_t i = 0; i + 2 < s.size(); ++i) {
    const FieldLabel& a = s[i];
    const FieldLabel& b = s[i + 1];
    if (b.kind == LabelKind::base) return false;
    const bool ok =
        (a.kind == LabelKind::zeta && b.kind == LabelKind::zeta && b.level == a.level - 1) ||
        (a.kind == LabelKind::zeta && b.kind != LabelKind::zeta && b.level == a.level) ||
        (a.kind == LabelKind::tau_plus && b.kind == LabelKind::tau_plus &&
         b.level == a.level - 1) ||
        (a.kind == LabelKind::tau_minus && b.kind == LabelKind::tau_plus &&
         b.level == a.level - 1);
    if (!ok) return false;
  }
  return true;
}

namespace {

struct DotNode {
  std::string name;                  // canonical label string
  std::vector<std::string> aliases;  // other labels with the same stabilizer
  std::uint64_t subfield_degree;     // [M : F] = |H| / |stabilizer|
};

}  // namespace

std::string emit_dot(const BaseField& f, unsigned e,
                     const std::vector<TowerDecomposition>& towers,
                     const std::vector<std::pair<FieldLabel, UnitSubgroup>>& stabilizers) {
  auto stab_of = [&](const FieldLabel& l) -> const UnitSubgroup& {
    for (const auto& [label, sub] : stabilizers)
      if (label == l) return sub;
    throw std::invalid_argument("emit_dot: no stabilizer for label " + l.str());
  };
  const std::uint64_t h_order = stab_of(FieldLabel::Base()).order();

  // One node per distinct stabilizer; canonical name = the tower label.
  std::map<std::vector<std::uint64_t>, DotNode> nodes;
  std::map<std::string, std::string> canonical;  // label string -> node name
  for (const auto& t : towers) {
    for (const auto& l : t.steps) {
      const auto& stab = stab_of(l);
      auto [it, fresh] = nodes.try_emplace(stab.elements);
      if (fresh) {
        it->second.name = l.str();
        it->second.subfield_degree = h_order / stab.order();
      }
      canonical[l.str()] = it->second.name;
    }
  }
  // Attach aliases: every label of level <= e whose stabilizer matches a
  // node. tau+_4 = 0 is skipped (it aliases the base field for every F).
  for (const auto& [label, stab] : stabilizers) {
    if (label.kind == LabelKind::tau_plus && label.level == 2) continue;
    auto it = nodes.find(stab.elements);
    if (it == nodes.end()) continue;
    if (it->second.name != label.str()) it->second.aliases.push_back(label.str());
    canonical[label.str()] = it->second.name;
  }

  std::vector<DotNode> ordered;
  for (auto& [_, n] : nodes) {
    std::sort(n.aliases.begin(), n.aliases.end());
    ordered.push_back(n);
  }
  std::sort(ordered.begin(), ordered.end(), [](const DotNode& a, const DotNode& b) {
    return a.subfield_degree != b.subfield_degree ? a.subfield_degree < b.subfield_degree
                                                  : a.name < b.name;
  });

  std::set<std::pair<std::string, std::string>> edges;  // lower -> upper
  for (const auto& t : towers)
    for (std::size_t i = 0; i + 1 < t.steps.size(); ++i)
      edges.emplace(canonical.at(t.steps[i + 1].str()), canonical.at(t.steps[i].str()));

  std::ostringstream os;
  os << "digraph subfields {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  os << "  label=\"" << f.spec_string() << ", e=" << e << "\";\n";
  for (const auto& n : ordered) {
    os << "  \"" << n.name << "\" [label=\"";
    if (n.name == "base")
      os << "F";
    else
      os << "F(" << n.name << ")";
    for (const auto& a : n.aliases) os << " = F(" << a << ")";
    os << "\"];\n";
  }
  for (const auto& [lo, hi] : edges) os << "  \"" << lo << "\" -> \"" << hi << "\" [label=\"2\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace cyclo2
