#pragma once

// One-dimensional commutative formal group laws, truncated at a fixed total
// degree. Built-in constructors: additive (x + y over Z), multiplicative
// (x + y - v·x·y over Z[v], deg v = -1, v the Bott-style unit), and the
// 2-primary height-n laws over Z_(2)[v] / F2[v] with deg v = 1 - 2^n.
// The logarithm, when present, lives over the rationalized ring.

#include <optional>
#include <string>
#include <vector>

#include "mqk/series.hpp"

namespace mqk {

struct FormalGroupLaw {
  RingSpec ring;
  int trunc = 0;
  TruncSeries F;                   // two variables, F(x1, x2)
  std::optional<TruncSeries> log;  // one variable over ring.rationalized()
  std::string name;                // "additive", "multiplicative", "K(2)", ...
};

// t alone, the additive logarithm.
inline TruncSeries identity_series(const RingSpec& r, int trunc) {
  return TruncSeries::var(r, 1, trunc, 0);
}

inline FormalGroupLaw mk_additive(int trunc) {
  const RingSpec ring = RingSpec::plain(Base::Z);
  TruncSeries F = TruncSeries::var(ring, 2, trunc, 0) + TruncSeries::var(ring, 2, trunc, 1);
  return FormalGroupLaw{ring, trunc, F, identity_series(ring.rationalized(), trunc), "additive"};
}

// F = x + y - v·x·y. log = sum_{i>=1} v^{i-1} t^i / i (so the degree-i class
// of the i-th projective space is v^i under this law's point counts).
inline FormalGroupLaw mk_multiplicative(bool beta_unit, int trunc) {
  const RingSpec ring = RingSpec::with_v(Base::Z, -1, beta_unit);
  TruncSeries x = TruncSeries::var(ring, 2, trunc, 0);
  TruncSeries y = TruncSeries::var(ring, 2, trunc, 1);
  TruncSeries F = x + y - GradedScalar::v_power(ring, 1) * (x * y);
  const RingSpec qring = ring.rationalized();
  TruncSeries lg = TruncSeries::zero(qring, 1, trunc);
  for (int i = 1; i <= trunc; ++i)
    lg.add_term(Exps{i}, GradedScalar::v_power(qring, i - 1, Rational(1, i)));
  return FormalGroupLaw{ring, trunc, F, lg, "multiplicative"};
}

struct MoravaSpec {
  int n = 2;
  Base base = Base::F2;       // F2 or Zloc2
  bool v_invertible = true;   // false gives the connective variant
};

// Compositional inverse of f = t + O(t^2), solved degree by degree.
inline TruncSeries compositional_inverse(const TruncSeries& f) {
  require(f.nvars == 1, Errc::bad_argument, "compositional inverse needs one variable");
  require(f.constant_term().is_zero() && f.coeff(Exps{1}).is_one(), Errc::bad_argument,
          "series must start with t");
  TruncSeries g = identity_series(f.ring, f.trunc);
  for (int k = 2; k <= f.trunc; ++k) {
    TruncSeries err = series_substitute(f, {g}) - identity_series(f.ring, f.trunc);
    // err has order >= k by induction; kill its degree-k coefficient.
    TruncSeries ek = homogeneous_part(err, k);
    g -= ek;
  }
  require(series_substitute(f, {g}) == identity_series(f.ring, f.trunc), Errc::non_divisible,
          "compositional inverse did not converge");
  return g;
}

namespace detail {

// Geometric exponent (2^{nk} - 1) / (2^n - 1) of v in the height-n log.
inline Int morava_v_exponent(int n, int k) {
  return (pow_int(2, static_cast<unsigned>(n * k)) - 1) / (pow_int(2, static_cast<unsigned>(n)) - 1);
}

}  // namespace detail

// log(t) = sum_{k>=0} 2^{-k} v^{(2^{nk}-1)/(2^n-1)} t^{2^{nk}} over Q[v].
inline TruncSeries morava_log(int n, const RingSpec& qring, int trunc) {
  TruncSeries lg = TruncSeries::zero(qring, 1, trunc);
  Int tpow = 1;  // 2^{nk}
  for (int k = 0; tpow <= trunc; ++k, tpow = pow_int(2, static_cast<unsigned>(n * k))) {
    lg.add_term(Exps{static_cast<int>(tpow)},
                GradedScalar::v_power(qring, static_cast<int>(detail::morava_v_exponent(n, k)),
                                      Rational(1, pow_int(2, static_cast<unsigned>(k)))));
  }
  return lg;
}

inline FormalGroupLaw mk_morava(const MoravaSpec& spec, int trunc) {
  require(spec.n >= 1, Errc::precondition, "height must be >= 1");
  require(spec.base == Base::F2 || spec.base == Base::Zloc2, Errc::precondition,
          "height-n laws live over F2 or Z(2)");
  const int min_trunc = (1 << spec.n) + 4;
  const int T = std::max(trunc, min_trunc);
  const int v_deg = 1 - (1 << spec.n);
  const RingSpec ring = RingSpec::with_v(spec.base, v_deg, spec.v_invertible);
  const RingSpec qring = ring.rationalized();
  TruncSeries lg = morava_log(spec.n, qring, T);
  TruncSeries exp = compositional_inverse(lg);
  TruncSeries lx = series_substitute(lg, {TruncSeries::var(qring, 2, T, 0)});
  TruncSeries ly = series_substitute(lg, {TruncSeries::var(qring, 2, T, 1)});
  TruncSeries FQ = series_substitute(exp, {lx + ly});
  // 2-integrality of every coefficient is verified, not assumed.
  for (const auto& [e, c] : FQ.terms)
    for (const auto& [vexp, coeff] : c.terms)
      require(odd_denominator(coeff), Errc::not_integral,
              "law coefficient not 2-integral at " + monomial_str(e));
  TruncSeries F = reduce_coefficients(FQ, ring);
  std::string nm = (spec.v_invertible ? "K(" : "CK(") + std::to_string(spec.n) + ")";
  return FormalGroupLaw{ring, T, F, lg, nm};
}

// Coefficient change, keeping the v-structure and the logarithm.
inline FormalGroupLaw with_coefficients(const FormalGroupLaw& fgl, Base target) {
  RingSpec ring = fgl.ring;
  ring.base = target;
  FormalGroupLaw out{ring, fgl.trunc, reduce_coefficients(fgl.F, ring), fgl.log, fgl.name};
  return out;
}

// F(a, b) for series over the law's ring.
inline TruncSeries fgl_sum(const FormalGroupLaw& fgl, const TruncSeries& a,
                           const TruncSeries& b) {
  TruncSeries F = fgl.F;
  if (a.trunc < F.trunc) F = truncate(F, a.trunc);
  return series_substitute(F, {a, b});
}

// [2](t) = F(t, t).
inline TruncSeries two_series(const FormalGroupLaw& fgl) {
  TruncSeries t = identity_series(fgl.ring, fgl.trunc);
  return series_substitute(fgl.F, {t, t});
}

// [-1](t): the unique i with F(t, i(t)) = 0, solved degree by degree.
inline TruncSeries formal_inverse(const FormalGroupLaw& fgl) {
  TruncSeries t = identity_series(fgl.ring, fgl.trunc);
  TruncSeries inv = -t;
  for (int k = 2; k <= fgl.trunc; ++k) {
    TruncSeries err = series_substitute(fgl.F, {t, inv});
    inv -= homogeneous_part(err, k);
  }
  require(series_substitute(fgl.F, {t, inv}).is_zero(), Errc::non_divisible,
          "formal inverse did not converge");
  return inv;
}

// G with F = x + y + x·y·G(x, y), by exact division.
inline TruncSeries g_series(const FormalGroupLaw& fgl) {
  TruncSeries x = TruncSeries::var(fgl.ring, 2, fgl.trunc, 0);
  TruncSeries y = TruncSeries::var(fgl.ring, 2, fgl.trunc, 1);
  return series_exact_div(fgl.F - x - y, x * y);
}

// Point counts of projective spaces: log(t) = sum_{i>=1} [P^{i-1}] t^i / i,
// so [P^i] = (i+1) * (coefficient of t^{i+1} in log). Over the rationalized
// ring; callers reduce into their own coefficients.
inline std::vector<GradedScalar> mishchenko_classes(const FormalGroupLaw& fgl, int imax) {
  require(fgl.log.has_value(), Errc::log_unavailable,
          "law " + fgl.name + " carries no logarithm");
  require(imax + 1 <= fgl.log->trunc, Errc::precondition,
          "requested class index exceeds the logarithm's truncation");
  std::vector<GradedScalar> out;
  out.reserve(imax + 1);
  for (int i = 0; i <= imax; ++i) {
    GradedScalar c = fgl.log->coeff(Exps{i + 1});
    out.push_back(GradedScalar::from_rational(c.ring, Rational(i + 1)) * c);
  }
  return out;
}

// Closed form of the height-n point counts over Z_(2)[v^{±1}]:
// [P^i] = 2^{(n-1)k} v^{(2^{nk}-1)/(2^n-1)} when i = 2^{nk} - 1, else 0.
inline GradedScalar pn_class_morava(int n, int i) {
  require(n >= 1 && i >= 0, Errc::precondition, "need n >= 1, i >= 0");
  const RingSpec ring = RingSpec::with_v(Base::Zloc2, 1 - (1 << n), true);
  Int tpow = 1;
  for (int k = 0; tpow - 1 <= i; ++k, tpow = pow_int(2, static_cast<unsigned>(n * k))) {
    if (tpow - 1 == i)
      return GradedScalar::v_power(ring, static_cast<int>(detail::morava_v_exponent(n, k)),
                                   Rational(pow_int(2, static_cast<unsigned>((n - 1) * k))));
  }
  return GradedScalar::zero(ring);
}

// Associativity, unitality and commutativity at the stored truncation.
struct FglAxiomReport {
  bool unital = false, commutative = false, associative = false;
  bool ok() const { return unital && commutative && associative; }
};

inline FglAxiomReport check_fgl_axioms(const FormalGroupLaw& fgl) {
  FglAxiomReport rep;
  const RingSpec r = fgl.ring;
  const int T = fgl.trunc;
  TruncSeries x2 = TruncSeries::var(r, 2, T, 0);
  TruncSeries y2 = TruncSeries::var(r, 2, T, 1);
  TruncSeries zero2 = TruncSeries::zero(r, 2, T);
  rep.unital = series_substitute(fgl.F, {x2, zero2}) == x2 &&
               series_substitute(fgl.F, {zero2, y2}) == y2;
  TruncSeries Fswap = series_substitute(fgl.F, {y2, x2});
  rep.commutative = Fswap == fgl.F;
  TruncSeries x3 = TruncSeries::var(r, 3, T, 0);
  TruncSeries y3 = TruncSeries::var(r, 3, T, 1);
  TruncSeries z3 = TruncSeries::var(r, 3, T, 2);
  TruncSeries Fxy = series_substitute(fgl.F, {x3, y3});
  TruncSeries Fyz = series_substitute(fgl.F, {y3, z3});
  rep.associative =
      series_substitute(fgl.F, {Fxy, z3}) == series_substitute(fgl.F, {x3, Fyz});
  return rep;
}

}  // namespace mqk
