#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "cyclo2/classifier.hpp"
#include "cyclo2/oracle.hpp"

using namespace cyclo2;

namespace {

// Test-only model of Z[zeta_{2^K}]: integer polynomials modulo
// x^(2^(K-1)) + 1, with zeta = x. Gives an exact characteristic-zero check
// of identities among the 2-power roots of unity.
struct CycloRing {
  unsigned K;
  std::size_t n;  // 2^(K-1)

  explicit CycloRing(unsigned k) : K(k), n(std::size_t{1} << (k - 1)) {}

  using Elt = std::vector<long long>;

  Elt zero() const { return Elt(n, 0); }
  Elt from_int(long long c) const {
    Elt a = zero();
    a[0] = c;
    return a;
  }
  // zeta^j for 0 <= j < 2^K; x^n = -1
  Elt zeta_pow(std::uint64_t j) const {
    j &= (std::uint64_t{2} * n) - 1;
    Elt a = zero();
    if (j < n)
      a[j] = 1;
    else
      a[j - n] = -1;
    return a;
  }
  Elt add(const Elt& a, const Elt& b) const {
    Elt c = zero();
    for (std::size_t i = 0; i < n; ++i) c[i] = a[i] + b[i];
    return c;
  }
  Elt sub(const Elt& a, const Elt& b) const {
    Elt c = zero();
    for (std::size_t i = 0; i < n; ++i) c[i] = a[i] - b[i];
    return c;
  }
  Elt mul(const Elt& a, const Elt& b) const {
    Elt c = zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b[j]) continue;
        const std::size_t k = i + j;
        if (k < n)
          c[k] += a[i] * b[j];
        else
          c[k - n] -= a[i] * b[j];
      }
    }
    return c;
  }
  bool is_zero(const Elt& a) const {
    for (auto v : a)
      if (v) return false;
    return true;
  }
};

}  // namespace

TEST_CASE("classification of Q(zeta_16)/Q") {
  const Classification c = classify(BaseField::rationals(), 4);
  CHECK_FALSE(c.small_degree);
  CHECK_FALSE(c.cyclic);
  CHECK(c.reason == CyclicityReason::neither);
  CHECK(c.degree == 8);
  CHECK(c.galois.elements == std::vector<std::uint64_t>{1, 3, 5, 7, 9, 11, 13, 15});
  CHECK(c.tower_count == 5);
  CHECK(c.invariants.nu == 2);
  CHECK(c.min_poly.str() == "x^8 + 1");  // tau+_4 = 0 makes the middle term vanish
  REQUIRE(c.generator_names.size() == 2);
  CHECK(c.generator_names[0].str() == "[-1]");
  CHECK(c.generator_names[1].str() == "[5]");
}

TEST_CASE("classification of F_3(zeta_16)/F_3") {
  const Classification c = classify(BaseField::finite(3), 4);
  CHECK(c.cyclic);
  CHECK(c.reason == CyclicityReason::tau_minus_nu_in_f);
  CHECK(c.degree == 4);
  CHECK(c.galois.elements == std::vector<std::uint64_t>{1, 3, 9, 11});
  CHECK(c.galois.generators == std::vector<std::uint64_t>{11});  // -5 mod 16
  CHECK(c.generator_names[0].str() == "[-5]");
  CHECK(c.tower_count == 1);
  CHECK(c.min_poly.str() == "x^4 - tm8*x^2 - 1");
}

TEST_CASE("classification of Q(zeta_4)(zeta_16)/Q(zeta_4)") {
  const Classification c = classify(BaseField::cyclotomic(4), 4);
  CHECK(c.cyclic);
  CHECK(c.reason == CyclicityReason::zeta4_in_f);
  CHECK(c.degree == 4);
  CHECK(c.galois.elements == std::vector<std::uint64_t>{1, 5, 9, 13});
  CHECK(c.generator_names[0].str() == "[5]");
  CHECK(c.min_poly.str() == "x^4 - z4");
}

TEST_CASE("small degree inputs are flagged, not classified") {
  const Classification a = classify(BaseField::rationals(), 2);
  CHECK(a.small_degree);
  CHECK(a.degree == 2);  // zeta_4 not in Q
  CHECK(a.cyclic);
  const Classification b = classify(BaseField::cyclotomic(4), 2);
  CHECK(b.small_degree);
  CHECK(b.degree == 1);
  const Classification c = classify(BaseField::finite(3), 3);  // nu(F_3) = 3
  CHECK(c.small_degree);
  CHECK(c.degree == 2);
}

TEST_CASE("min_poly_zeta across the three regimes") {
  // zeta_4 in F: x^(2^(e-nu+1-i)) - zeta_{2^(nu-1)}
  const auto a = min_poly_zeta(BaseField::cyclotomic(4), 5, 1);
  CHECK(a.str() == "x^4 - z4");
  // cyclic via tau-: middle term at 2^(e-nu-i)
  const auto b = min_poly_zeta(BaseField::finite(3), 5, 0);
  CHECK(b.str() == "x^8 - tm8*x^4 - 1");
  const auto b1 = min_poly_zeta(BaseField::finite(3), 5, 2);
  CHECK(b1.str() == "x^2 - tm8*x - 1");
  // non-cyclic: x^(2^(e-nu+1)) - tau+_{2^nu} x^(2^(e-nu)) + 1
  const auto c = min_poly_zeta(BaseField::quadratic(2), 5, 0);
  CHECK(c.str() == "x^8 - tp8*x^4 + 1");
  const auto d = min_poly_zeta(BaseField::rationals(), 4, 0);
  CHECK(d.str() == "x^8 + 1");

  CHECK_THROWS_AS(min_poly_zeta(BaseField::rationals(), 4, 1), std::domain_error);
  CHECK_THROWS_AS(min_poly_zeta(BaseField::finite(3), 5, 3), std::domain_error);
  CHECK_THROWS_AS(min_poly_zeta(BaseField::finite(3), 3, 0), std::domain_error);
}

TEST_CASE("codegree-2 subextensions") {
  const auto q = codegree2_subextensions(BaseField::rationals(), 4);
  REQUIRE(q.size() == 3);
  CHECK(q[0].first == FieldLabel::Zeta(3));
  CHECK(q[0].second.residue == 9);
  CHECK(q[1].first == FieldLabel::TauPlus(4));
  CHECK(q[1].second.residue == 15);
  CHECK(q[2].first == FieldLabel::TauMinus(4));
  CHECK(q[2].second.residue == 7);

  const auto f3 = codegree2_subextensions(BaseField::finite(3), 4);
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].first == FieldLabel::Zeta(3));
  CHECK(f3[0].second.residue == 9);

  CHECK(codegree2_subextensions(BaseField::cyclotomic(4), 4) == f3);
  CHECK_THROWS_AS(codegree2_subextensions(BaseField::finite(3), 3), std::domain_error);
}

TEST_CASE("tau subextension reports") {
  const TauReport plus = tau_report(BaseField::rationals(), 4, TauSign::plus);
  CHECK(plus.degree == 4);
  CHECK(plus.tower.str() == "tp16/tp8/base");
  CHECK(plus.unique_codegree2 == FieldLabel::TauPlus(3));
  CHECK(plus.step_min_poly.str() == "x^2 - tp8 - 2");
  CHECK(plus.quotient_generator.residue == 5);
  CHECK(plus.quotient_modulus.residue == 15);

  const TauReport minus = tau_report(BaseField::rationals(), 4, TauSign::minus);
  CHECK(minus.degree == 4);
  CHECK(minus.tower.str() == "tm16/tp8/base");
  CHECK(minus.step_min_poly.str() == "x^2 - tp8 + 2");
  CHECK(minus.quotient_modulus.residue == 7);  // -(1 + 2^3) mod 16

  const TauReport f3m = tau_report(BaseField::finite(3), 4, TauSign::minus);
  CHECK(f3m.degree == 4);  // nu_plus(F_3) = 2: full degree, F_3(tau-_16) = F_3(zeta_16)
  CHECK(f3m.tower.str() == "tm16/tp8/base");

  // e = nu + 1 with nu = nu_plus: the codegree-2 subextension is F itself
  const TauReport small = tau_report(BaseField::rationals(), 3, TauSign::plus);
  CHECK(small.degree == 2);
  CHECK(small.unique_codegree2 == FieldLabel::Base());
  CHECK(small.tower.str() == "tp8/base");
  CHECK(small.step_min_poly.str() == "x^2 - 2");  // tau+_4 = 0

  // zeta_4 in F: F(tau_{2^e}) = F(zeta_{2^e}), so the tau tower carries the
  // full degree 2^(e - (nu - 1)).
  const TauReport z4 = tau_report(BaseField::cyclotomic(4), 4, TauSign::plus);
  CHECK(z4.degree == 4);
  CHECK(z4.tower.str() == "tp16/tp8/base");
  CHECK(z4.quotient_generator.residue == 5);
  const TauReport z8 = tau_report(BaseField::cyclotomic(8), 5, TauSign::minus);
  CHECK(z8.degree == 4);  // [Q(zeta_8)(zeta_32) : Q(zeta_8)] = 4
  CHECK(z8.tower.str() == "tm32/tp16/base");
}

TEST_CASE("full U_8 criterion") {
  CHECK(is_full_u8(BaseField::rationals()));
  CHECK_FALSE(is_full_u8(BaseField::finite(3)));
  CHECK(is_full_u8(BaseField::quadratic(5)));
  CHECK_FALSE(is_full_u8(BaseField::quadratic(-1)));
  CHECK_FALSE(is_full_u8(BaseField::quadratic(-2)));
  // oracle route: Gal(F(zeta_8)/F) = U_8 iff |H| = 4 at e = 3
  for (const auto& f : {BaseField::rationals(), BaseField::finite(3), BaseField::finite(5),
                        BaseField::quadratic(5), BaseField::quadratic(-2), BaseField::cyclotomic(3),
                        BaseField::cyclotomic(8)})
    CHECK(is_full_u8(f) == (oracle::galois_subgroup(f, 3).order() == 4));
}

TEST_CASE("the cyclic Galois group need not sit inside <[5]> or <[-5]>") {
  // Gal(F_7(zeta_32)/F_7) = <[7]> = <[-5^2]> = {1,7,17,23} is cyclic but is
  // contained in neither <[5]> nor <[-5]> mod 32; the classifier therefore
  // predicts the generator [eps * 5^(2^(nu-3))] itself and the oracle checks
  // set equality rather than containment.
  const auto h = oracle::galois_subgroup(BaseField::finite(7), 5);
  CHECK(h.elements == std::vector<std::uint64_t>{1, 7, 17, 23});
  CHECK(is_cyclic(h));
  const auto five = span(5, {5});
  const auto minus_five = span(5, {27});
  for (std::uint64_t x : h.elements) {
    if (x == 7) {
      CHECK_FALSE(five.contains(x));
      CHECK_FALSE(minus_five.contains(x));
    }
  }
  const Classification c = classify(BaseField::finite(7), 5);
  CHECK(c.galois == h);
  CHECK(c.generator_names[0].str() == "[-5^2]");
}

TEST_CASE("symbolic coefficients denote base-field elements") {
  for (const auto& spec : {"fq:3", "fq:7", "qzeta:4", "qzeta:8", "qsqrt:-2", "qsqrt:3"}) {
    const BaseField f = parse_field(spec);
    const unsigned nu = compute_invariants(f).nu;
    const Classification c = classify(f, nu + 2);
    for (const auto& [exp, coeff] : c.min_poly.terms) {
      if (coeff.is_integer()) continue;
      if (coeff.symbol == Coefficient::Symbol::zeta) CHECK(contains_zeta(f, coeff.level));
      if (coeff.symbol == Coefficient::Symbol::tau_plus)
        CHECK(contains_tau(f, coeff.level, TauSign::plus));
      if (coeff.symbol == Coefficient::Symbol::tau_minus)
        CHECK(contains_tau(f, coeff.level, TauSign::minus));
    }
  }
}

TEST_CASE("zeta_4 in F forces coinciding tau fields at every level") {
  for (const auto& spec : {"qzeta:4", "qzeta:8", "qzeta:48", "fq:5", "fq:13", "qsqrt:-1"}) {
    const BaseField f = parse_field(spec);
    for (unsigned e = 3; e <= 8; ++e) {
      if (contains_zeta(f, e)) continue;
      const UnitSubgroup h = oracle::galois_subgroup(f, e);
      CHECK(oracle::label_stabilizer(h, FieldLabel::TauPlus(e)).order() == 1);
      CHECK(oracle::label_stabilizer(h, FieldLabel::TauMinus(e)).order() == 1);
    }
  }
}

TEST_CASE("root-of-unity identities hold in the exact cyclotomic model") {
  for (unsigned e = 3; e <= 10; ++e) {
    const CycloRing ring(e);
    const auto zeta = ring.zeta_pow(1);
    const auto zeta_inv = ring.zeta_pow((std::uint64_t{1} << e) - 1);
    const auto tau_plus = ring.add(zeta, zeta_inv);
    const auto tau_minus = ring.sub(zeta, zeta_inv);
    const auto z2 = ring.zeta_pow(2);
    const auto z2_inv = ring.zeta_pow((std::uint64_t{1} << e) - 2);
    const auto tau_plus_prev = ring.add(z2, z2_inv);

    // (tau+)^2 = tau+' + 2 and (tau-)^2 = tau+' - 2
    CHECK(ring.is_zero(ring.sub(ring.mul(tau_plus, tau_plus),
                                ring.add(tau_plus_prev, ring.from_int(2)))));
    CHECK(ring.is_zero(ring.sub(ring.mul(tau_minus, tau_minus),
                                ring.sub(tau_plus_prev, ring.from_int(2)))));
    // zeta^2 - tau+ zeta + 1 = 0 and zeta^2 - tau- zeta - 1 = 0
    CHECK(ring.is_zero(ring.add(ring.sub(ring.mul(zeta, zeta), ring.mul(tau_plus, zeta)),
                                ring.from_int(1))));
    CHECK(ring.is_zero(ring.sub(ring.sub(ring.mul(zeta, zeta), ring.mul(tau_minus, zeta)),
                                ring.from_int(1))));
    // tau+_4 = 0 and tau-_4 = 2 zeta_4
    const auto q = std::uint64_t{1} << (e - 2);
    CHECK(ring.is_zero(ring.add(ring.zeta_pow(q), ring.zeta_pow(3 * q))));
    CHECK(ring.is_zero(ring.sub(ring.sub(ring.zeta_pow(q), ring.zeta_pow(3 * q)),
                                ring.mul(ring.from_int(2), ring.zeta_pow(q)))));
  }
}

TEST_CASE("rendering of symbolic polynomials") {
  SymbolicMinPoly p;
  p.terms[2] = Coefficient::integer(1);
  p.terms[0] = Coefficient{Coefficient::Symbol::tau_plus, 3, -1, -2};
  CHECK(p.str() == "x^2 - tp8 - 2");
  SymbolicMinPoly q;
  q.terms[8] = Coefficient::integer(1);
  q.terms[4] = Coefficient{Coefficient::Symbol::tau_plus, 2, -1, 0};
  q.terms[0] = Coefficient::integer(1);
  CHECK(q.str() == "x^8 - tp4*x^4 + 1");
}
