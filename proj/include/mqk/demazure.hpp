#pragma once
// Divided-difference calculus on the torus side, for an arbitrary formal
// group law: weights become one-dimensional classes x_lambda through
// F-addition of the coordinate classes x_1..x_l, the Weyl group acts by
// substitution on generators, and the operator for a simple root is exact
// division by x_{alpha_i}. Each division drops the known precision by one,
// so a context's truncation bounds how many operators can be chained.

#include <cstdlib>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "formal_group.hpp"
#include "weyl.hpp"

namespace mqk {

struct BTContext {
  RootDatum datum;
  FormalGroupLaw fgl;
  int trunc = 0;
  // Built on first use; keyed by the weight's coordinate vector.
  mutable std::map<std::vector<int>, TruncSeries> xlam;
  mutable std::optional<TruncSeries> inv1;
};

inline BTContext make_bt_context(const RootDatum& datum, const FormalGroupLaw& fgl, int trunc) {
  require(trunc >= 1, Errc::bad_argument, "truncation must be positive");
  require(trunc <= fgl.trunc, Errc::trunc_mismatch,
          "context truncation exceeds the law's precision");
  BTContext ctx;
  ctx.datum = datum;
  ctx.fgl = fgl;
  ctx.trunc = trunc;
  return ctx;
}

inline TruncSeries bt_var(const BTContext& ctx, int j) {
  require(j >= 1 && j <= ctx.datum.rank, Errc::bad_argument, "coordinate index out of range");
  return TruncSeries::var(ctx.fgl.ring, ctx.datum.rank, ctx.trunc, j - 1);
}

// x_lambda, assembled coordinate by coordinate with F-addition; negative
// coordinates enter through the formal inverse. Associativity and
// commutativity of F make the result independent of assembly order.
inline const TruncSeries& x_lambda(const BTContext& ctx, const std::vector<int>& lam) {
  require(static_cast<int>(lam.size()) == ctx.datum.rank, Errc::bad_argument,
          "weight rank mismatch");
  auto it = ctx.xlam.find(lam);
  if (it != ctx.xlam.end()) return it->second;
  TruncSeries acc = TruncSeries::zero(ctx.fgl.ring, ctx.datum.rank, ctx.trunc);
  for (int j = 1; j <= ctx.datum.rank; ++j) {
    if (lam[j - 1] == 0) continue;
    TruncSeries step = bt_var(ctx, j);
    if (lam[j - 1] < 0) {
      if (!ctx.inv1) ctx.inv1 = formal_inverse(ctx.fgl);
      step = series_substitute(truncate(*ctx.inv1, ctx.trunc), {step});
    }
    for (int c = std::abs(lam[j - 1]); c-- > 0;) acc = fgl_sum(ctx.fgl, acc, step);
  }
  return ctx.xlam.emplace(lam, std::move(acc)).first->second;
}

// The reflection s_i as a ring substitution: x_j goes to x_{s_i(e_j)}.
inline TruncSeries weyl_action_bt(const BTContext& ctx, int i, const TruncSeries& u) {
  check_same_ring(u.ring, ctx.fgl.ring);
  require(u.nvars == ctx.datum.rank, Errc::bad_argument, "series rank mismatch");
  require(u.trunc <= ctx.trunc, Errc::trunc_mismatch, "series outlives the context precision");
  SignedPerm s = simple_reflection(ctx.datum, i);
  std::vector<TruncSeries> args;
  args.reserve(ctx.datum.rank);
  for (int j = 1; j <= ctx.datum.rank; ++j) {
    std::vector<int> ej(ctx.datum.rank, 0);
    ej[j - 1] = 1;
    args.push_back(truncate(x_lambda(ctx, act(s, ej)), u.trunc));
  }
  return series_substitute(u, args);
}

// (u - s_i(u)) / x_{alpha_i}. The difference is always divisible; a
// division failure would signal a bug, so it is surfaced, not caught.
inline TruncSeries demazure_bt(const BTContext& ctx, int i, const TruncSeries& u) {
  TruncSeries num = u - weyl_action_bt(ctx, i, u);
  TruncSeries den = truncate(x_lambda(ctx, simple_root(ctx.datum, i)), u.trunc);
  return series_exact_div(num, den);
}

// Letters apply first to last: word[0] acts first.
inline TruncSeries demazure_word(const BTContext& ctx, const std::vector<int>& word,
                                 const TruncSeries& u) {
  TruncSeries out = u;
  for (int i : word) out = demazure_bt(ctx, i, out);
  return out;
}

// kappa_i = G(x_{alpha_i}, x_{-alpha_i}) where F(x,y) = x + y + xy G(x,y);
// zero for the additive law, and the square of the divided difference is
// -kappa_i times it. G is only determined to the law's precision minus two,
// so the result's precision is capped there as well.
inline TruncSeries kappa_bt(const BTContext& ctx, int i) {
  TruncSeries g = g_series(ctx.fgl);
  const int t = std::min(ctx.trunc, g.trunc);
  std::vector<int> neg = simple_root(ctx.datum, i);
  for (int& c : neg) c = -c;
  TruncSeries xa = truncate(x_lambda(ctx, simple_root(ctx.datum, i)), t);
  TruncSeries xn = truncate(x_lambda(ctx, neg), t);
  return series_substitute(g, {xa, xn});
}

}  // namespace mqk
