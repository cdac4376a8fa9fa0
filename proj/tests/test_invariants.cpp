#include <doctest.h>

#include <stdexcept>

#include "cyclo2/invariants.hpp"

using namespace cyclo2;

TEST_CASE("t_f classifies the order of zeta over F") {
  CHECK(t_f(BaseField::cyclotomic(16), 4) == TfValue::one);
  CHECK(t_f(BaseField::cyclotomic(4), 3) == TfValue::two);
  CHECK(t_f(BaseField::rationals(), 3) == TfValue::full);
  CHECK(tf_string({3, TfValue::full}) == "2^3");
}

TEST_CASE("nu_plus on the worked fields") {
  CHECK(nu_plus(BaseField::rationals()) == 2);
  CHECK(nu_plus(BaseField::finite(3)) == 2);
  CHECK(nu_plus(BaseField::cyclotomic(4)) == 3);
  CHECK(nu_plus(BaseField::finite(7)) == 3);
  CHECK(nu_plus(BaseField::quadratic(2)) == 3);
  CHECK(nu_plus(BaseField::quadratic(-2)) == 2);
}

TEST_CASE("property_c2 search with closed-form cross-check") {
  CHECK(property_c2(BaseField::finite(3)) == std::pair{true, std::optional<unsigned>{3}});
  CHECK(property_c2(BaseField::rationals()).first == false);
  CHECK(property_c2(BaseField::quadratic(-2)) == std::pair{true, std::optional<unsigned>{3}});
  CHECK(property_c2(BaseField::finite(7)) == std::pair{true, std::optional<unsigned>{4}});
  CHECK(property_c2(BaseField::quadratic(-1)).first == false);
  CHECK(property_c2(BaseField::cyclotomic(8)).first == false);

  // F_q has C2 exactly when q = 3 mod 4, with witness v2(q+1)+1; Q(zeta_m)
  // never has it; Q(sqrt d) only for d = -2.
  for (std::uint64_t p = 3; p < 1000; p += 2) {
    if (!is_prime(p)) continue;
    for (unsigned k = 1; k <= 2; ++k) {
      const BaseField f = BaseField::finite(p, k);
      const std::uint64_t q = std::get<FiniteField>(f.value()).q;
      const auto [c2, witness] = property_c2(f);
      CHECK(c2 == (q % 4 == 3));
      if (c2) CHECK(witness == v2(q + 1) + 1);
    }
  }
  for (std::uint64_t m = 1; m <= 128; ++m)
    if (m % 4 != 2) CHECK_FALSE(property_c2(BaseField::cyclotomic(m)).first);
  for (std::int64_t d = -50; d <= 50; ++d)
    if (d != 0 && d != 1 && is_squarefree(d))
      CHECK(property_c2(BaseField::quadratic(d)).first == (d == -2));
}

TEST_CASE("nu bundles") {
  const Invariants f3 = compute_invariants(BaseField::finite(3));
  CHECK(f3.nu_plus == 2);
  CHECK(f3.nu == 3);
  CHECK(f3.has_c2);
  CHECK_FALSE(f3.zeta4_in_f);

  const Invariants f7 = compute_invariants(BaseField::finite(7));
  CHECK(f7.nu_plus == 3);
  CHECK(f7.nu == 4);
  CHECK(f7.c2_witness == 4);

  const Invariants qz4 = compute_invariants(BaseField::cyclotomic(4));
  CHECK(qz4.nu_plus == 3);
  CHECK(qz4.nu == 3);
  CHECK_FALSE(qz4.has_c2);
  CHECK(qz4.zeta4_in_f);
  CHECK(qz4.t_table.size() == qz4.nu + 1);
}

TEST_CASE("closed form for nu over finite fields, q < 10^4") {
  for (std::uint64_t p = 3; p < 10000; p += 2) {
    if (!is_prime(p)) continue;
    for (unsigned k = 1;; ++k) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < k; ++i) q *= p;
      if (q >= 10000) break;
      const Invariants inv = compute_invariants(BaseField::finite(p, k));
      const unsigned expected = q % 4 == 1 ? v2(q - 1) + 1 : v2(q + 1) + 1;
      CHECK(inv.nu == expected);
    }
  }
}

TEST_CASE("invariant consistency across families") {
  std::vector<BaseField> fields;
  for (std::uint64_t m = 1; m <= 64; ++m)
    if (m % 4 != 2) fields.push_back(BaseField::cyclotomic(m));
  for (std::int64_t d = -30; d <= 30; ++d)
    if (d != 0 && d != 1 && is_squarefree(d)) fields.push_back(BaseField::quadratic(d));
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 31, 97}) fields.push_back(BaseField::finite(p));

  for (const auto& f : fields) {
    const Invariants inv = compute_invariants(f);
    CHECK(inv.nu >= 2);
    CHECK(inv.nu == inv.nu_plus + (inv.has_c2 ? 1 : 0));
    if (inv.has_c2) {
      REQUIRE(inv.c2_witness.has_value());
      const unsigned w = *inv.c2_witness;
      CHECK_FALSE(inv.zeta4_in_f);
      CHECK_FALSE(contains_zeta(f, w));
      CHECK(contains_tau(f, w, TauSign::minus));
      CHECK(order_over(f, w) == (std::uint64_t{1} << (w - 1)));
    }
  }
}
