#include "cyclo2/invariants.hpp"

#include <stdexcept>

namespace cyclo2 {

namespace {

constexpr unsigned kSafetyCap = 64;

unsigned family_cap(const BaseField& f) {
  unsigned cap;
  if (auto* fq = std::get_if<FiniteField>(&f.value())) {
    cap = v2(fq->q - 1) + v2(fq->q + 1) + 1;
  } else if (auto* cy = std::get_if<CyclotomicQ>(&f.value())) {
    cap = (cy->m % 2 == 0 ? v2(cy->m) : 0) + 2;
  } else {
    cap = 4;
  }
  return cap < kSafetyCap ? cap : kSafetyCap;
}

// The defining test for nu_plus at level k: automatic when the order of
// zeta_{2^k} over F is at most 2 (then zeta_{t} + zeta_t^{-1} is +-2),
// otherwise membership of tau+_{2^k}.
bool nu_plus_test(const BaseField& f, unsigned k) {
  if (order_over(f, k) <= 2) return true;
  return contains_tau(f, k, TauSign::plus);
}

}  // namespace

std::string tf_string(const TfEntry& entry) {
  switch (entry.t) {
    case TfValue::one: return "1";
    case TfValue::two: return "2";
    case TfValue::full: return "2^" + std::to_string(entry.k);
  }
  return "?";
}

TfValue t_f(const BaseField& f, unsigned e) {
  const std::uint64_t o = order_over(f, e);
  if (o == 1) return TfValue::one;
  if (o == 2) return TfValue::two;
  return TfValue::full;
}

unsigned nu_plus(const BaseField& f) {
  const unsigned cap = family_cap(f);
  unsigned k = 1;
  while (k <= cap && nu_plus_test(f, k + 1)) ++k;
  if (k > cap) throw std::logic_error("nu_plus: search exceeded family bound");
  return k;
}

std::pair<bool, std::optional<unsigned>> property_c2(const BaseField& f) {
  const unsigned cap = family_cap(f);
  for (unsigned e = 3; e <= cap; ++e) {
    if (!contains_zeta(f, e) && order_over(f, e) == (std::uint64_t{1} << (e - 1)) &&
        contains_tau(f, e, TauSign::minus))
      return {true, e};
  }
  return {false, std::nullopt};
}

Invariants compute_invariants(const BaseField& f) {
  Invariants inv;
  inv.nu_plus = nu_plus(f);
  auto [c2, witness] = property_c2(f);
  inv.has_c2 = c2;
  inv.c2_witness = witness;
  inv.nu = inv.nu_plus + (c2 ? 1 : 0);
  inv.zeta4_in_f = contains_zeta(f, 2);
  for (unsigned k = 1; k <= inv.nu + 1; ++k) inv.t_table.push_back({k, t_f(f, k)});
  return inv;
}

}  // namespace cyclo2
