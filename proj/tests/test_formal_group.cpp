#include <catch2/catch_amalgamated.hpp>

#include "mqk/formal_group.hpp"
#include "test_util.hpp"

using namespace mqk;
using mqk::testutil::throws_code;

TEST_CASE("additive and multiplicative laws satisfy the axioms") {
  CHECK(check_fgl_axioms(mk_additive(8)).ok());
  CHECK(check_fgl_axioms(mk_multiplicative(true, 8)).ok());
  CHECK(check_fgl_axioms(mk_multiplicative(false, 8)).ok());
}

TEST_CASE("height-n laws satisfy the axioms") {
  for (Base b : {Base::Zloc2, Base::F2}) {
    CHECK(check_fgl_axioms(mk_morava({2, b, true}, 9)).ok());
    CHECK(check_fgl_axioms(mk_morava({3, b, true}, 12)).ok());
  }
  CHECK(check_fgl_axioms(mk_morava({2, Base::Zloc2, false}, 9)).ok());
}

TEST_CASE("the height-2 logarithm matches its closed form through degree 16") {
  FormalGroupLaw k2 = mk_morava({2, Base::Zloc2, true}, 16);
  REQUIRE(k2.log.has_value());
  CHECK(series_str(*k2.log) ==
        "1 * x1\n"
        "1/2 * v * x1^4\n"
        "1/4 * v^5 * x1^16");
}

TEST_CASE("the height-2 law starts with the hand-expanded degree-4 terms") {
  // exp(l(x)+l(y)) with l(t) = t + v t^4/2 + ... gives, through degree 4,
  // x + y + (v/2)(x^4 + y^4 - (x+y)^4) = x + y - v(2x^3y + 3x^2y^2 + 2xy^3).
  FormalGroupLaw k2 = mk_morava({2, Base::Zloc2, true}, 9);
  const RingSpec r = k2.ring;
  CHECK(k2.F.coeff(Exps{1, 0}) == GradedScalar::one(r));
  CHECK(k2.F.coeff(Exps{0, 1}) == GradedScalar::one(r));
  CHECK(k2.F.coeff(Exps{2, 0}).is_zero());
  CHECK(k2.F.coeff(Exps{1, 1}).is_zero());
  CHECK(k2.F.coeff(Exps{2, 1}).is_zero());
  CHECK(k2.F.coeff(Exps{3, 1}) == GradedScalar::v_power(r, 1, Rational(-2)));
  CHECK(k2.F.coeff(Exps{2, 2}) == GradedScalar::v_power(r, 1, Rational(-3)));
  CHECK(k2.F.coeff(Exps{1, 3}) == GradedScalar::v_power(r, 1, Rational(-2)));
}

TEST_CASE("every law coefficient is homogeneous of codimension 1") {
  for (const FormalGroupLaw& fgl :
       {mk_multiplicative(true, 8), mk_morava({2, Base::Zloc2, true}, 12),
        mk_morava({3, Base::F2, true}, 12)}) {
    for (const auto& [e, c] : fgl.F.terms) {
      auto cd = scalar_codim(c);
      REQUIRE(cd.has_value());
      CHECK(total_degree(e) + *cd == 1);
    }
  }
}

TEST_CASE("the doubling series reduces to v t^{2^n} modulo 2") {
  struct Row {
    int n, trunc;
  };
  for (Row row : {Row{1, 12}, Row{2, 20}, Row{3, 16}}) {
    FormalGroupLaw law = mk_morava({row.n, Base::Zloc2, true}, row.trunc);
    const RingSpec f2ring = RingSpec::with_v(Base::F2, law.ring.v_degree, true);
    TruncSeries dbl = reduce_coefficients(two_series(law), f2ring);
    TruncSeries expect = TruncSeries::zero(f2ring, 1, law.trunc);
    expect.add_term(Exps{1 << row.n}, GradedScalar::v_power(f2ring, 1));
    CHECK(dbl == expect);
  }
}

TEST_CASE("the doubling series over F2 is exactly v t^{2^n}") {
  FormalGroupLaw law = mk_morava({2, Base::F2, true}, 12);
  TruncSeries expect = TruncSeries::zero(law.ring, 1, law.trunc);
  expect.add_term(Exps{4}, GradedScalar::v_power(law.ring, 1));
  CHECK(two_series(law) == expect);
}

TEST_CASE("multiplicative doubling agrees with height 1 modulo 2") {
  FormalGroupLaw mult = mk_multiplicative(true, 10);
  const RingSpec f2ring = RingSpec::with_v(Base::F2, -1, true);
  TruncSeries expect = TruncSeries::zero(f2ring, 1, 10);
  expect.add_term(Exps{2}, GradedScalar::v_power(f2ring, 1));
  CHECK(reduce_coefficients(two_series(mult), f2ring) == expect);

  FormalGroupLaw k1 = mk_morava({1, Base::F2, true}, 10);
  TruncSeries e1 = TruncSeries::zero(k1.ring, 1, k1.trunc);
  e1.add_term(Exps{2}, GradedScalar::v_power(k1.ring, 1));
  CHECK(two_series(k1) == e1);
}

TEST_CASE("the multiplicative inverse is the negative geometric series") {
  // F(t, i) = t + i - v t i = 0 gives i = -t / (1 - v t) = -sum v^k t^{k+1}.
  FormalGroupLaw mult = mk_multiplicative(true, 10);
  TruncSeries expect = TruncSeries::zero(mult.ring, 1, 10);
  for (int k = 0; k + 1 <= 10; ++k)
    expect.add_term(Exps{k + 1}, GradedScalar::v_power(mult.ring, k, Rational(-1)));
  CHECK(formal_inverse(mult) == expect);
}

TEST_CASE("additive inverse and doubling are linear") {
  FormalGroupLaw add = mk_additive(8);
  TruncSeries t = identity_series(add.ring, 8);
  CHECK(formal_inverse(add) == -t);
  CHECK(two_series(add) == GradedScalar::from_rational(add.ring, Rational(2)) * t);
}

TEST_CASE("inverses compose to zero under the law") {
  for (const FormalGroupLaw& fgl :
       {mk_morava({2, Base::Zloc2, true}, 10), mk_morava({2, Base::F2, true}, 10),
        mk_multiplicative(false, 10)}) {
    TruncSeries t = identity_series(fgl.ring, fgl.trunc);
    CHECK(fgl_sum(fgl, t, formal_inverse(fgl)).is_zero());
  }
}

TEST_CASE("g series of the multiplicative law is the constant -v") {
  FormalGroupLaw mult = mk_multiplicative(true, 8);
  TruncSeries g = g_series(mult);
  TruncSeries expect = TruncSeries::zero(mult.ring, 2, g.trunc);
  expect.add_term(Exps{0, 0}, GradedScalar::v_power(mult.ring, 1, Rational(-1)));
  CHECK(g == expect);
}

TEST_CASE("compositional inverse round trips on the multiplicative logarithm") {
  FormalGroupLaw mult = mk_multiplicative(true, 10);
  REQUIRE(mult.log.has_value());
  TruncSeries exp = compositional_inverse(*mult.log);
  TruncSeries t = identity_series(exp.ring, exp.trunc);
  CHECK(series_substitute(*mult.log, {exp}) == t);
  CHECK(series_substitute(exp, {*mult.log}) == t);
}

TEST_CASE("point counts from the logarithm match the closed form") {
  FormalGroupLaw k2 = mk_morava({2, Base::Zloc2, true}, 17);
  std::vector<GradedScalar> mish = mishchenko_classes(k2, 16);
  const RingSpec target = pn_class_morava(2, 0).ring;
  for (int i = 0; i <= 16; ++i) {
    INFO("i = " << i);
    CHECK(reduce_scalar(mish[i], target) == pn_class_morava(2, i));
  }
  FormalGroupLaw k3 = mk_morava({3, Base::Zloc2, true}, 12);
  std::vector<GradedScalar> mish3 = mishchenko_classes(k3, 8);
  const RingSpec t3 = pn_class_morava(3, 0).ring;
  for (int i = 0; i <= 8; ++i) {
    INFO("i = " << i);
    CHECK(reduce_scalar(mish3[i], t3) == pn_class_morava(3, i));
  }
}

TEST_CASE("frozen point-count values at height 2") {
  const RingSpec r = pn_class_morava(2, 0).ring;
  CHECK(pn_class_morava(2, 0) == GradedScalar::one(r));
  CHECK(pn_class_morava(2, 1).is_zero());
  CHECK(pn_class_morava(2, 2).is_zero());
  CHECK(pn_class_morava(2, 3) == GradedScalar::v_power(r, 1, Rational(2)));
  CHECK(pn_class_morava(2, 15) == GradedScalar::v_power(r, 5, Rational(4)));
  CHECK(pn_class_morava(3, 7) == GradedScalar::v_power(pn_class_morava(3, 0).ring, 1, Rational(4)));
}

TEST_CASE("point counts of the classical laws") {
  FormalGroupLaw add = mk_additive(8);
  std::vector<GradedScalar> pa = mishchenko_classes(add, 6);
  CHECK(pa[0].is_one());
  for (int i = 1; i <= 6; ++i) CHECK(pa[i].is_zero());

  FormalGroupLaw mult = mk_multiplicative(true, 8);
  std::vector<GradedScalar> pm = mishchenko_classes(mult, 6);
  for (int i = 0; i <= 6; ++i) CHECK(pm[i] == GradedScalar::v_power(pm[i].ring, i));
}

TEST_CASE("point counts need a logarithm") {
  FormalGroupLaw add = mk_additive(6);
  add.log.reset();
  CHECK_THROWS_MATCHES(mishchenko_classes(add, 3), Error, throws_code(Errc::log_unavailable));
  CHECK_THROWS_MATCHES(mishchenko_classes(mk_additive(4), 9), Error,
                       throws_code(Errc::precondition));
}

TEST_CASE("the connective variant carries the same coefficients") {
  FormalGroupLaw k2 = mk_morava({2, Base::Zloc2, true}, 10);
  FormalGroupLaw ck2 = mk_morava({2, Base::Zloc2, false}, 10);
  CHECK(ck2.name == "CK(2)");
  CHECK(k2.name == "K(2)");
  CHECK_FALSE(ck2.ring.v_invertible);
  CHECK(reduce_coefficients(ck2.F, k2.ring) == k2.F);
}

TEST_CASE("coefficient change to F2 keeps the law") {
  FormalGroupLaw k2 = mk_morava({2, Base::Zloc2, true}, 10);
  FormalGroupLaw k2f = with_coefficients(k2, Base::F2);
  CHECK(check_fgl_axioms(k2f).ok());
  CHECK(k2f.F == mk_morava({2, Base::F2, true}, 10).F);
}
