#pragma once
// The Schubert-class side of the calculus: integer combinations of classes
// X_w indexed by Weyl elements, the induced divided-difference action, the
// duality chain, and the characteristic map from polynomials (additive law)
// into them. The companion basis Z_w is X_{w_0 w}.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "demazure.hpp"
#include "weyl.hpp"

namespace mqk {

struct SchubertComb {
  RootDatum datum;
  std::map<SignedPerm, Int> c;

  bool is_zero() const { return c.empty(); }

  void add(const SignedPerm& w, const Int& k) {
    if (k == 0) return;
    auto it = c.find(w);
    if (it == c.end()) {
      c.emplace(w, k);
      return;
    }
    it->second += k;
    if (it->second == 0) c.erase(it);
  }
};

inline SchubertComb sc_zero(const RootDatum& rd) { return SchubertComb{rd, {}}; }

inline SchubertComb sc_class(const RootDatum& rd, const SignedPerm& w, const Int& k = 1) {
  check_in_group(rd, w);
  SchubertComb a = sc_zero(rd);
  a.add(w, k);
  return a;
}

inline void check_same_datum(const SchubertComb& a, const SchubertComb& b) {
  require(a.datum.type == b.datum.type && a.datum.rank == b.datum.rank, Errc::bad_argument,
          "combinations over different groups");
}

inline SchubertComb operator+(const SchubertComb& a, const SchubertComb& b) {
  check_same_datum(a, b);
  SchubertComb out = a;
  for (const auto& [w, k] : b.c) out.add(w, k);
  return out;
}

inline SchubertComb operator-(const SchubertComb& a) {
  SchubertComb out = sc_zero(a.datum);
  for (const auto& [w, k] : a.c) out.c.emplace(w, -k);
  return out;
}

inline SchubertComb operator-(const SchubertComb& a, const SchubertComb& b) { return a + (-b); }

inline SchubertComb operator*(const Int& k, const SchubertComb& a) {
  SchubertComb out = sc_zero(a.datum);
  for (const auto& [w, v] : a.c) out.add(w, k * v);
  return out;
}

inline bool operator==(const SchubertComb& a, const SchubertComb& b) {
  return a.datum.type == b.datum.type && a.datum.rank == b.datum.rank && a.c == b.c;
}

// Ascent rule: X_w goes to -X_{w s_i} when that increases length and to 0
// otherwise; the descent case is forced by the vanishing of the square at
// the additive law.
inline SchubertComb demazure_schubert(const RootDatum& rd, int i, const SchubertComb& a) {
  SchubertComb out = sc_zero(rd);
  for (const auto& [w, k] : a.c) {
    SignedPerm ws = mult(w, simple_reflection(rd, i));
    if (length(rd, ws) > length(rd, w)) out.add(ws, -k);
  }
  return out;
}

inline SchubertComb demazure_schubert_word(const RootDatum& rd, const std::vector<int>& word,
                                           const SchubertComb& a) {
  SchubertComb out = a;
  for (int i : word) out = demazure_schubert(rd, i, out);
  return out;
}

// The chain attached to w: the operators of the lex-min reduced word of
// w^{-1} w_0, applied first to last. On X_w it lands on the sign
// (-1)^{l(w_0) - l(w)} times X_{w_0}; it kills every other class of the
// same length, because only w itself can ascend all the way to the top.
inline SchubertComb dual_chain(const RootDatum& rd, const SignedPerm& w, const SchubertComb& a) {
  std::vector<int> word = reduced_word(rd, mult(sp_inverse(w), longest_element(rd)));
  return demazure_schubert_word(rd, word, a);
}

namespace detail {

inline Int integer_constant(const TruncSeries& s) {
  GradedScalar c = s.constant_term();
  require(s == TruncSeries::constant(s.ring, s.nvars, s.trunc, c), Errc::precondition,
          "expected a constant series");
  if (c.is_zero()) return Int(0);
  require(c.terms.size() == 1 && c.terms.count(0) == 1, Errc::not_integral,
          "constant has a nonzero v-degree");
  const Rational& r = c.terms.at(0);
  require(den(r) == 1, Errc::not_integral, "constant is not an integer");
  return num(r);
}

}  // namespace detail

// The characteristic map for the additive law: a homogeneous u of degree s
// goes to (-1)^{l(w_0) - s} times the sum over length-s elements w of
// Delta_w(u) Z_w, where Delta_w composes the letters of a reduced word
// rightmost first and Z_w = X_{w_0 w}. Needs u.trunc >= s so the constants
// Delta_w(u) survive the precision loss of s divisions.
inline SchubertComb char_map_chow(const BTContext& ctx, const TruncSeries& u) {
  TruncSeries x = TruncSeries::var(ctx.fgl.ring, 2, ctx.fgl.trunc, 0);
  TruncSeries y = TruncSeries::var(ctx.fgl.ring, 2, ctx.fgl.trunc, 1);
  require(ctx.fgl.F == x + y, Errc::precondition, "characteristic map needs the additive law");
  require(series_homogeneous(u), Errc::not_homogeneous,
          "characteristic map needs a homogeneous input");
  SchubertComb out = sc_zero(ctx.datum);
  auto codim = series_codim(u);
  if (!codim.has_value()) return out;
  const int s = *codim;
  require(s <= u.trunc, Errc::trunc_mismatch, "degree exceeds the series precision");
  const SignedPerm w0 = longest_element(ctx.datum);
  const int sign = (length(ctx.datum, w0) - s) % 2 == 0 ? 1 : -1;
  for (const SignedPerm& w : enumerate_weyl(ctx.datum)) {
    if (length(ctx.datum, w) != s) continue;
    std::vector<int> word = reduced_word(ctx.datum, w);
    std::reverse(word.begin(), word.end());
    Int k = detail::integer_constant(demazure_word(ctx, word, u));
    out.add(mult(w0, w), sign * k);
  }
  return out;
}

inline std::string sc_str(const SchubertComb& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [w, k] : a.c) {
    if (!s.empty()) s += " + ";
    if (k != 1) s += k.str() + " * ";
    s += "X" + sp_str(w);
  }
  return s;
}

}  // namespace mqk
