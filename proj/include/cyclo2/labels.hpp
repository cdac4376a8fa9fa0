#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cyclo2 {

enum class LabelKind { base, zeta, tau_plus, tau_minus };

/// Symbolic name for a subfield of F(zeta_{2^e}): the base field F itself,
/// or F adjoined zeta_{2^k}, tau+_{2^k} = zeta_{2^k} + zeta_{2^k}^{-1}, or
/// tau-_{2^k} = zeta_{2^k} - zeta_{2^k}^{-1}, with k >= 2.
struct FieldLabel {
  LabelKind kind = LabelKind::base;
  unsigned level = 0;  // k; 0 for the base label

  static FieldLabel Base() { return {LabelKind::base, 0}; }
  static FieldLabel Zeta(unsigned k);
  static FieldLabel TauPlus(unsigned k);
  static FieldLabel TauMinus(unsigned k);

  /// "base", "z16", "tp8", "tm8" (the number is 2^level).
  std::string str() const;
  static FieldLabel parse(const std::string& s);

  friend bool operator==(const FieldLabel&, const FieldLabel&) = default;
  friend auto operator<=>(const FieldLabel&, const FieldLabel&) = default;
};

/// A chain of subfields from F(zeta_{2^e}) at the top down to F, every
/// adjacent pair a relative-degree-2 step.
struct TowerDecomposition {
  std::vector<FieldLabel> steps;

  std::vector<std::string> step_strings() const;
  std::string str() const;  // "z16/z8/z4/base"

  friend bool operator==(const TowerDecomposition&, const TowerDecomposition&) = default;
};

}  // namespace cyclo2
