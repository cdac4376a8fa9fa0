#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclo2/base_field.hpp"

namespace cyclo2 {

/// t_F(2^k): "full" means 2^k (order of zeta_{2^k} over F exceeds 2),
/// otherwise the value is literally 1 or 2.
enum class TfValue { one, two, full };

struct TfEntry {
  unsigned k;
  TfValue t;
  friend bool operator==(const TfEntry&, const TfEntry&) = default;
};

std::string tf_string(const TfEntry& entry);  // "1", "2", or "2^k"

/// The base-field invariants that govern degrees and cyclicity of
/// F(zeta_{2^e})/F. nu = nu_plus + 1 exactly when F has property C2:
/// some e' >= 3 with zeta_{2^e'} not in F, order 2^{e'-1} over F, and
/// tau-_{2^e'} in F.
struct Invariants {
  unsigned nu_plus = 2;
  unsigned nu = 2;
  bool has_c2 = false;
  std::optional<unsigned> c2_witness;
  bool zeta4_in_f = false;
  std::vector<TfEntry> t_table;  // k = 1 .. nu+1

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

TfValue t_f(const BaseField& f, unsigned e);

/// Largest k such that zeta_{t_F(2^k)} + zeta_{t_F(2^k)}^{-1} lies in F.
/// Finite for all supported families; the per-family search bound is
/// v2(q^2-1) for F_q, v2(m)+2 for Q(zeta_m) and 4 for Q(sqrt d).
unsigned nu_plus(const BaseField& f);

std::pair<bool, std::optional<unsigned>> property_c2(const BaseField& f);

Invariants compute_invariants(const BaseField& f);

}  // namespace cyclo2
