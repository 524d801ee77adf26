#include <algorithm>
#include <vector>

#include <mqk/schubert.hpp>

#include "test_util.hpp"

using namespace mqk;
using mqk::testutil::Rng;
using mqk::testutil::random_series;
using mqk::testutil::throws_code;

namespace {

RootDatum B(int l) { return make_root_datum(LieType::B, l); }
RootDatum D(int l) { return make_root_datum(LieType::D, l); }

FormalGroupLaw additive(int t) { return mk_additive(t); }
FormalGroupLaw multiplicative(int t) { return mk_multiplicative(true, t); }
FormalGroupLaw k2_f2(int t) { return mk_morava({2, Base::F2, true}, t); }

std::vector<int> weight(std::initializer_list<int> w) { return std::vector<int>(w); }

std::vector<int> random_weight(Rng& rng, int rank, int spread) {
  std::vector<int> lam(rank);
  for (int& c : lam) c = static_cast<int>(rng() % (2 * spread + 1)) - spread;
  return lam;
}

// Random polynomial supported in degrees [0, maxdeg].
TruncSeries random_poly(Rng& rng, const BTContext& ctx, int maxdeg) {
  TruncSeries u = random_series(rng, ctx.fgl.ring, ctx.datum.rank, ctx.trunc, 8);
  TruncSeries out = TruncSeries::zero(ctx.fgl.ring, ctx.datum.rank, ctx.trunc);
  for (int k = 0; k <= maxdeg; ++k) out += homogeneous_part(u, k);
  return out;
}

// Random homogeneous polynomial of exact x-degree s with integer
// coefficients (no v), for the characteristic map.
TruncSeries random_homog(Rng& rng, const BTContext& ctx, int s) {
  TruncSeries out = TruncSeries::zero(ctx.fgl.ring, ctx.datum.rank, ctx.trunc);
  for (int t = 0; t < 6; ++t) {
    Exps e(ctx.datum.rank, 0);
    int left = s;
    for (int i = 0; i + 1 < ctx.datum.rank; ++i) {
      e[i] = static_cast<int>(rng() % (left + 1));
      left -= e[i];
    }
    e[ctx.datum.rank - 1] = left;
    out.add_term(e, GradedScalar::from_rational(ctx.fgl.ring,
                                                Rational(static_cast<int>(rng() % 9) - 4)));
  }
  return out;
}

}  // namespace

TEST_CASE("coordinate classes of weights") {
  for (const FormalGroupLaw& fgl : {additive(6), multiplicative(6), k2_f2(8)}) {
    BTContext ctx = make_bt_context(B(2), fgl, 6);
    CHECK(x_lambda(ctx, weight({1, 0})) == bt_var(ctx, 1));
    CHECK(x_lambda(ctx, weight({0, 1})) == bt_var(ctx, 2));
    CHECK(x_lambda(ctx, weight({0, 0})).is_zero());
  }
  BTContext add = make_bt_context(B(2), additive(6), 6);
  CHECK(x_lambda(add, weight({1, -1})) == bt_var(add, 1) - bt_var(add, 2));
  CHECK(x_lambda(add, weight({2, 3})) ==
        GradedScalar::from_rational(add.fgl.ring, 2) * bt_var(add, 1) +
            GradedScalar::from_rational(add.fgl.ring, 3) * bt_var(add, 2));
}

TEST_CASE("weight classes add through the law") {
  for (const FormalGroupLaw& fgl : {additive(6), multiplicative(6), k2_f2(8)}) {
    BTContext ctx = make_bt_context(B(3), fgl, 6);
    Rng rng(501);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<int> lam = random_weight(rng, 3, 2);
      std::vector<int> mu = random_weight(rng, 3, 2);
      std::vector<int> sum(3);
      for (int i = 0; i < 3; ++i) sum[i] = lam[i] + mu[i];
      CHECK(fgl_sum(ctx.fgl, x_lambda(ctx, lam), x_lambda(ctx, mu)) == x_lambda(ctx, sum));
      std::vector<int> neg(3);
      for (int i = 0; i < 3; ++i) neg[i] = -lam[i];
      CHECK(fgl_sum(ctx.fgl, x_lambda(ctx, lam), x_lambda(ctx, neg)).is_zero());
    }
  }
}

TEST_CASE("reflection action on the coordinate ring") {
  BTContext ctx = make_bt_context(B(2), additive(6), 6);
  TruncSeries x1 = bt_var(ctx, 1), x2 = bt_var(ctx, 2);
  CHECK(weyl_action_bt(ctx, 1, x1) == x2);
  CHECK(weyl_action_bt(ctx, 1, x2) == x1);
  CHECK(weyl_action_bt(ctx, 2, x2) == -x2);
  CHECK(weyl_action_bt(ctx, 2, x1) == x1);
  BTContext d3 = make_bt_context(D(3), additive(6), 6);
  CHECK(weyl_action_bt(d3, 3, bt_var(d3, 2)) == -bt_var(d3, 3));
  CHECK(weyl_action_bt(d3, 3, bt_var(d3, 3)) == -bt_var(d3, 2));
}

TEST_CASE("reflections are ring involutions for every law") {
  for (const FormalGroupLaw& fgl : {additive(6), multiplicative(6), k2_f2(8)}) {
    BTContext ctx = make_bt_context(B(2), fgl, 6);
    Rng rng(733);
    for (int i = 1; i <= 2; ++i)
      for (int trial = 0; trial < 6; ++trial) {
        TruncSeries u = random_poly(rng, ctx, 4);
        TruncSeries v = random_poly(rng, ctx, 4);
        CHECK(weyl_action_bt(ctx, i, weyl_action_bt(ctx, i, u)) == u);
        CHECK(weyl_action_bt(ctx, i, u * v) ==
              weyl_action_bt(ctx, i, u) * weyl_action_bt(ctx, i, v));
        CHECK(weyl_action_bt(ctx, i, u + v) ==
              weyl_action_bt(ctx, i, u) + weyl_action_bt(ctx, i, v));
      }
  }
}

TEST_CASE("divided differences at the additive law") {
  BTContext ctx = make_bt_context(B(2), additive(6), 6);
  TruncSeries one = TruncSeries::constant(ctx.fgl.ring, 2, 6, Rational(1));
  CHECK(demazure_bt(ctx, 1, one).is_zero());
  CHECK(demazure_bt(ctx, 2, one).is_zero());
  TruncSeries x1 = bt_var(ctx, 1);
  CHECK(demazure_bt(ctx, 1, x1) == TruncSeries::constant(ctx.fgl.ring, 2, 5, Rational(1)));
  CHECK(demazure_bt(ctx, 2, x1).is_zero());
  // (x1^2 - x2^2) / (x1 - x2) = x1 + x2.
  CHECK(demazure_bt(ctx, 1, x1 * x1) == truncate(x1 + bt_var(ctx, 2), 5));
}

TEST_CASE("divided differences are coefficient-linear") {
  for (const FormalGroupLaw& fgl : {multiplicative(6), k2_f2(8)}) {
    BTContext ctx = make_bt_context(B(2), fgl, 6);
    Rng rng(9119);
    for (int trial = 0; trial < 6; ++trial) {
      TruncSeries u = random_poly(rng, ctx, 4);
      GradedScalar c = mqk::testutil::random_scalar(rng, ctx.fgl.ring);
      for (int i = 1; i <= 2; ++i)
        CHECK(demazure_bt(ctx, i, c * u) == c * demazure_bt(ctx, i, u));
    }
  }
}

TEST_CASE("leibniz rule for every law") {
  for (const FormalGroupLaw& fgl : {additive(6), multiplicative(6), k2_f2(8)}) {
    for (const RootDatum& rd : {B(2), B(3)}) {
      BTContext ctx = make_bt_context(rd, fgl, 6);
      Rng rng(42 + rd.rank);
      for (int trial = 0; trial < 8; ++trial) {
        TruncSeries u = random_poly(rng, ctx, 3);
        TruncSeries v = random_poly(rng, ctx, 3);
        for (int i = 1; i <= rd.rank; ++i) {
          TruncSeries lhs = demazure_bt(ctx, i, u * v);
          TruncSeries rhs = demazure_bt(ctx, i, u) * truncate(v, 5) +
                            truncate(weyl_action_bt(ctx, i, u), 5) * demazure_bt(ctx, i, v);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("squares of divided differences") {
  // Additive: the square vanishes. Other laws: the square is -kappa_i
  // times the operator, with kappa_i = G(x_alpha, x_{-alpha}).
  BTContext add = make_bt_context(B(3), additive(6), 6);
  Rng rng(6060);
  for (int trial = 0; trial < 6; ++trial) {
    TruncSeries u = random_poly(rng, add, 4);
    for (int i = 1; i <= 3; ++i)
      CHECK(demazure_bt(add, i, demazure_bt(add, i, u)).is_zero());
  }
  for (const FormalGroupLaw& fgl : {multiplicative(6), k2_f2(8)}) {
    BTContext ctx = make_bt_context(B(2), fgl, 6);
    for (int trial = 0; trial < 6; ++trial) {
      TruncSeries u = random_poly(rng, ctx, 4);
      for (int i = 1; i <= 2; ++i) {
        TruncSeries du = demazure_bt(ctx, i, u);
        TruncSeries lhs = demazure_bt(ctx, i, du);
        CHECK(lhs == -(truncate(kappa_bt(ctx, i), 4) * truncate(du, 4)));
      }
    }
  }
}

TEST_CASE("kappa by law") {
  BTContext add = make_bt_context(B(2), additive(6), 6);
  CHECK(kappa_bt(add, 1).is_zero());
  CHECK(kappa_bt(add, 2).is_zero());
  BTContext mul = make_bt_context(B(2), multiplicative(8), 6);
  for (int i = 1; i <= 2; ++i)
    CHECK(kappa_bt(mul, i) ==
          TruncSeries::constant(mul.fgl.ring, 2, 6,
                                GradedScalar::v_power(mul.fgl.ring, 1, Rational(-1))));
  BTContext k2 = make_bt_context(B(2), k2_f2(8), 6);
  for (int i = 1; i <= 2; ++i) {
    TruncSeries k = kappa_bt(k2, i);
    CHECK_FALSE(k.is_zero());
    CHECK(series_homogeneous(k));
    CHECK(series_codim(k) == -1);
  }
}

TEST_CASE("braid relations at the additive law") {
  for (const RootDatum& rd : {B(2), B(3), D(4)}) {
    BTContext ctx = make_bt_context(rd, additive(6), 6);
    Rng rng(88 + rd.rank);
    for (int i = 1; i <= rd.rank; ++i)
      for (int j = i + 1; j <= rd.rank; ++j) {
        const int m = braid_order(rd, i, j);
        std::vector<int> w1, w2;
        for (int k = 0; k < m; ++k) {
          w1.push_back(k % 2 == 0 ? i : j);
          w2.push_back(k % 2 == 0 ? j : i);
        }
        for (int trial = 0; trial < 4; ++trial) {
          TruncSeries u = random_poly(rng, ctx, 4);
          CHECK(demazure_word(ctx, w1, u) == demazure_word(ctx, w2, u));
        }
      }
  }
}

TEST_CASE("word composites at the additive law") {
  BTContext ctx = make_bt_context(B(2), additive(6), 6);
  Rng rng(1201);
  TruncSeries u = random_poly(rng, ctx, 4);
  CHECK(demazure_word(ctx, {}, u) == u);
  CHECK(demazure_word(ctx, {1, 1}, u).is_zero());
  CHECK(demazure_word(ctx, {2, 2}, u).is_zero());
  CHECK(demazure_word(ctx, {1, 2, 1, 2}, u) == demazure_word(ctx, {2, 1, 2, 1}, u));
  // Non-reduced words of any shape act as zero.
  CHECK(demazure_word(ctx, {1, 2, 2, 1}, u).is_zero());
  CHECK(demazure_word(ctx, {2, 1, 2, 1, 2}, u).is_zero());
}

TEST_CASE("additive word composites depend only on the element") {
  for (const RootDatum& rd : {B(2), B(3)}) {
    BTContext ctx = make_bt_context(rd, additive(6), 6);
    Rng rng(3434);
    for (const SignedPerm& w : enumerate_weyl(rd)) {
      if (length(rd, w) > 4) continue;
      std::vector<int> canonical = reduced_word(rd, w);
      std::vector<int> other = reduced_word(rd, sp_inverse(w));
      std::reverse(other.begin(), other.end());
      CHECK(is_reduced(rd, other));
      CHECK(apply_word(rd, other) == w);
      TruncSeries u = random_poly(rng, ctx, 3);
      CHECK(demazure_word(ctx, canonical, u) == demazure_word(ctx, other, u));
    }
  }
}

TEST_CASE("context preconditions") {
  CHECK_THROWS_MATCHES(make_bt_context(B(2), additive(4), 6), Error,
                       throws_code(Errc::trunc_mismatch));
  BTContext ctx = make_bt_context(B(2), additive(6), 6);
  CHECK_THROWS_MATCHES(x_lambda(ctx, weight({1, 2, 3})), Error, throws_code(Errc::bad_argument));
  TruncSeries wrong = TruncSeries::var(ctx.fgl.ring, 3, 6, 0);
  CHECK_THROWS_MATCHES(weyl_action_bt(ctx, 1, wrong), Error, throws_code(Errc::bad_argument));
}

TEST_CASE("schubert combinations") {
  RootDatum rd = B(2);
  SignedPerm e = sp_identity(2);
  SchubertComb a = sc_class(rd, e) + sc_class(rd, simple_reflection(rd, 1), 3);
  CHECK_FALSE(a.is_zero());
  CHECK((a - a).is_zero());
  CHECK(Int(2) * a == a + a);
  CHECK(sc_str(sc_zero(rd)) == "0");
  CHECK(sc_str(sc_class(rd, e)) == "X[1,2]");
}

TEST_CASE("schubert demazure follows the ascent rule") {
  RootDatum rd = B(2);
  SignedPerm e = sp_identity(2);
  SignedPerm s1 = simple_reflection(rd, 1);
  SignedPerm w0 = longest_element(rd);
  CHECK(demazure_schubert(rd, 1, sc_class(rd, e)) == sc_class(rd, s1, -1));
  // Descents die.
  CHECK(demazure_schubert(rd, 1, sc_class(rd, s1)).is_zero());
  for (int i = 1; i <= 2; ++i) CHECK(demazure_schubert(rd, i, sc_class(rd, w0)).is_zero());
  // The square is zero on a generic combination.
  Rng rng(77);
  SchubertComb mix = sc_zero(rd);
  for (const SignedPerm& w : enumerate_weyl(rd)) mix.add(w, static_cast<int>(rng() % 7) - 3);
  for (int i = 1; i <= 2; ++i)
    CHECK(demazure_schubert(rd, i, demazure_schubert(rd, i, mix)).is_zero());
}

TEST_CASE("schubert duality certificates") {
  for (const RootDatum& rd : {B(2), B(3), D(4)}) {
    SignedPerm w0 = longest_element(rd);
    const int top = length(rd, w0);
    std::vector<SignedPerm> all = enumerate_weyl(rd);
    for (const SignedPerm& w : all) {
      const int sign = (top - length(rd, w)) % 2 == 0 ? 1 : -1;
      CHECK(dual_chain(rd, w, sc_class(rd, w)) == sc_class(rd, w0, sign));
    }
    // The chain of w kills every other class of the same length.
    for (const SignedPerm& w : all)
      for (const SignedPerm& wp : all) {
        if (w == wp || length(rd, w) != length(rd, wp)) continue;
        CHECK(dual_chain(rd, w, sc_class(rd, wp)).is_zero());
      }
  }
}

TEST_CASE("characteristic map basics") {
  BTContext ctx = make_bt_context(B(2), additive(6), 6);
  RootDatum rd = ctx.datum;
  SignedPerm w0 = longest_element(rd);
  TruncSeries five = TruncSeries::constant(ctx.fgl.ring, 2, 6, Rational(5));
  // Degree zero: (-1)^{l(w0)} u Z_e, and Z_e is the class of w0.
  CHECK(char_map_chow(ctx, five) == sc_class(rd, w0, 5));
  TruncSeries x1 = bt_var(ctx, 1);
  CHECK(char_map_chow(ctx, x1) == sc_class(rd, mult(w0, simple_reflection(rd, 1)), -1));
  CHECK(char_map_chow(ctx, x1 * x1) ==
        sc_class(rd, mult(w0, apply_word(rd, {2, 1})), 2));
  CHECK(char_map_chow(ctx, TruncSeries::zero(ctx.fgl.ring, 2, 6)).is_zero());
  CHECK_THROWS_MATCHES(char_map_chow(ctx, x1 + x1 * x1), Error,
                       throws_code(Errc::not_homogeneous));
  BTContext mul = make_bt_context(B(2), multiplicative(6), 6);
  CHECK_THROWS_MATCHES(char_map_chow(mul, bt_var(mul, 1)), Error,
                       throws_code(Errc::precondition));
}

TEST_CASE("characteristic map intertwines the two demazure actions") {
  for (const RootDatum& rd : {B(2), B(3)}) {
    BTContext ctx = make_bt_context(rd, additive(6), 6);
    Rng rng(515 + rd.rank);
    for (int s = 1; s <= 3; ++s)
      for (int trial = 0; trial < 5; ++trial) {
        TruncSeries u = random_homog(rng, ctx, s);
        SchubertComb cu = char_map_chow(ctx, u);
        for (int i = 1; i <= rd.rank; ++i)
          CHECK(demazure_schubert(rd, i, cu) == char_map_chow(ctx, demazure_bt(ctx, i, u)));
      }
  }
}
