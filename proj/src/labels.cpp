#include "cyclo2/labels.hpp"

#include <stdexcept>

namespace cyclo2 {

namespace {

void check_level(unsigned k) {
  if (k < 2 || k > 62) throw std::invalid_argument("field label level out of range");
}

}  // namespace

FieldLabel FieldLabel::Zeta(unsigned k) {
  check_level(k);
  return {LabelKind::zeta, k};
}

FieldLabel FieldLabel::TauPlus(unsigned k) {
  check_level(k);
  return {LabelKind::tau_plus, k};
}

FieldLabel FieldLabel::TauMinus(unsigned k) {
  check_level(k);
  return {LabelKind::tau_minus, k};
}

std::string FieldLabel::str() const {
  const std::string n = std::to_string(std::uint64_t{1} << level);
  switch (kind) {
    case LabelKind::base: return "base";
    case LabelKind::zeta: return "z" + n;
    case LabelKind::tau_plus: return "tp" + n;
    case LabelKind::tau_minus: return "tm" + n;
  }
  return "?";
}

FieldLabel FieldLabel::parse(const std::string& s) {
  if (s == "base") return Base();
  LabelKind kind;
  std::size_t off;
  if (s.rfind("tp", 0) == 0) {
    kind = LabelKind::tau_plus;
    off = 2;
  } else if (s.rfind("tm", 0) == 0) {
    kind = LabelKind::tau_minus;
    off = 2;
  } else if (s.rfind("z", 0) == 0) {
    kind = LabelKind::zeta;
    off = 1;
  } else {
    throw std::invalid_argument("bad field label '" + s + "'");
  }
  std::uint64_t n = std::stoull(s.substr(off));
  if (n < 4 || (n & (n - 1)) != 0)
    throw std::invalid_argument("bad field label '" + s + "': not a 2-power >= 4");
  unsigned k = 0;
  while (n > 1) {
    n >>= 1;
    ++k;
  }
  return {kind, k};
}

std::vector<std::string> TowerDecomposition::step_strings() const {
  std::vector<std::string> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.str());
  return out;
}

std::string TowerDecomposition::str() const {
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += "/";
    out += steps[i].str();
  }
  return out;
}

}  // namespace cyclo2
