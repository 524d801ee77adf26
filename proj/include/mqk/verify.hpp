#pragma once

// Verification sweeps: every guarantee the library makes, run over a grid of
// theories and dimensions and recorded as named checks in a Report. The
// command-line `verify` subcommand and the acceptance runner both drive
// these. Loops run in a fixed order, so check lists and witnesses are
// deterministic for a fixed seed; failures carry the offending cell and both
// sides of the broken identity.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mqk/demazure.hpp"
#include "mqk/motive.hpp"
#include "mqk/report.hpp"
#include "mqk/schubert.hpp"

namespace mqk {

struct VerifyOptions {
  std::vector<int> ns = {2, 3};  // heights to sweep
  int dmax = 12;                 // largest quadric dimension in the ring sweeps
  std::uint64_t seed = 0;        // seed for the randomized identities
};

namespace detail {

inline std::string height_name(int n) { return "K(" + std::to_string(n) + ")"; }

// Small deterministic polynomial: every monomial of total degree <= maxdeg
// gets a coefficient in [-3, 3], with a random v-factor when the ring has v.
inline TruncSeries random_poly(std::mt19937_64& rng, const RingSpec& ring, int nvars, int trunc,
                               int maxdeg) {
  TruncSeries out = TruncSeries::zero(ring, nvars, trunc);
  Exps e(nvars, 0);
  while (true) {
    if (total_degree(e) <= maxdeg) {
      const int c = static_cast<int>(rng() % 7) - 3;
      const int ve = ring.has_v ? static_cast<int>(rng() % 2) : 0;
      if (c != 0) out.add_term(e, GradedScalar::v_power(ring, ve, Rational(c)));
    }
    int i = 0;
    while (i < nvars && e[i] == maxdeg) e[i++] = 0;
    if (i == nvars) break;
    ++e[i];
  }
  return out;
}

inline TruncSeries random_homogeneous(std::mt19937_64& rng, const RingSpec& ring, int nvars,
                                      int trunc, int deg) {
  TruncSeries out = TruncSeries::zero(ring, nvars, trunc);
  Exps e(nvars, 0);
  while (true) {
    if (total_degree(e) == deg) {
      const int c = static_cast<int>(rng() % 7) - 3;
      if (c != 0) out.add_term(e, GradedScalar::from_rational(ring, Rational(c)));
    }
    int i = 0;
    while (i < nvars && e[i] == deg) e[i++] = 0;
    if (i == nvars) break;
    ++e[i];
  }
  return out;
}

}  // namespace detail

// Height-n laws over Z(2)[v^±1]: axioms, v-polynomial 2-integral
// coefficients, and the mod-2 doubling series v·t^{2^n}.
inline void checks_fgl_laws(Report& rep, const VerifyOptions& opt) {
  for (int n : opt.ns) {
    const std::string tag = "fgl/" + detail::height_name(n) + "/";
    FormalGroupLaw law = mk_morava(MoravaSpec{n, Base::Zloc2, true}, (1 << n) + 4);
    const FglAxiomReport ax = check_fgl_axioms(law);
    rep.add(tag + "unital", ax.unital);
    rep.add(tag + "commutative", ax.commutative);
    rep.add(tag + "associative", ax.associative);
    bool integral = true;
    std::string wit;
    for (const auto& [e, c] : law.F.terms)
      for (const auto& [vexp, coeff] : c.terms)
        if (vexp < 0 || !base_value_ok(Base::Zloc2, coeff)) {
          integral = false;
          wit = monomial_str(e) + ": " + scalar_str(c);
        }
    rep.add(tag + "coefficients-in-Z(2)[v]", integral, wit);
    FormalGroupLaw law2 = with_coefficients(law, Base::F2);
    TruncSeries two = two_series(law2);
    TruncSeries expect = TruncSeries::zero(law2.ring, 1, law2.trunc);
    expect.add_term(Exps{1 << n}, GradedScalar::v_power(law2.ring, 1));
    rep.add(tag + "doubling-series-mod-2", two == expect, series_str(two));
  }
}

// Logarithm-derived projective-space classes against the closed form
// [P^i] = 2^{(n-1)k} v^{(2^{nk}-1)/(2^n-1)} at i = 2^{nk}-1, else 0.
inline void checks_mishchenko(Report& rep, const VerifyOptions& opt) {
  for (int n : opt.ns) {
    const std::string tag = "fgl/" + detail::height_name(n) + "/";
    const int T = (1 << n) + 4;
    FormalGroupLaw law = mk_morava(MoravaSpec{n, Base::Zloc2, true}, T);
    auto cls = mishchenko_classes(law, T - 1);
    bool match = true;
    std::string wit;
    for (int i = 0; i < T; ++i) {
      const GradedScalar closed = pn_class_morava(n, i);
      const GradedScalar got = reduce_scalar(cls[i], closed.ring);
      if (!(got == closed)) {
        match = false;
        wit = "i=" + std::to_string(i) + ": " + scalar_str(got) + " vs " + scalar_str(closed);
        break;
      }
    }
    rep.add(tag + "projective-space-classes", match, wit);
  }
  const GradedScalar p3 = pn_class_morava(2, 3);
  rep.add("fgl/K(2)/class-of-P3",
          p3 == GradedScalar::v_power(p3.ring, 1, Rational(2)), scalar_str(p3));
}

namespace detail {

// The ring sweep grid: additive, multiplicative, and one law per height.
inline std::vector<FormalGroupLaw> sweep_laws(const VerifyOptions& opt, int trunc) {
  std::vector<FormalGroupLaw> laws;
  laws.push_back(mk_additive(trunc));
  laws.push_back(mk_multiplicative(true, trunc));
  for (int n : opt.ns) laws.push_back(mk_morava(MoravaSpec{n, Base::Zloc2, true}, trunc));
  return laws;
}

}  // namespace detail

// Ring axioms on the whole cell basis plus the defining structure equations,
// for one (law, coefficients, dimension) cell. The law must already live
// over the target coefficients with truncation >= D + 2.
inline void checks_quadric_cell(Report& rep, const FormalGroupLaw& lb, int D) {
  TheoryPtr th = make_quadric_theory(D, lb);
  const int d = th->d;
  const int B = th->basis_size();
  const std::string tag =
      "quadric/" + lb.name + "/" + lb.ring.name() + "/D=" + std::to_string(D) + "/";
  std::vector<QuadricClass> basis;
  basis.reserve(B);
  for (int i = 0; i < B; ++i) basis.push_back(qc_basis(th, i));

  bool comm = true;
  std::string wit;
  for (int i = 0; i < B && comm; ++i)
    for (int j = i + 1; j < B && comm; ++j)
      if (!(basis[i] * basis[j] == basis[j] * basis[i])) {
        comm = false;
        wit = th->basis_name(i) + " * " + th->basis_name(j);
      }
  rep.add(tag + "commutative", comm, wit);

  bool assoc = true;
  wit.clear();
  for (int i = 0; i < B && assoc; ++i)
    for (int j = 0; j < B && assoc; ++j) {
      const QuadricClass ij = basis[i] * basis[j];
      for (int k = 0; k < B && assoc; ++k)
        if (!(ij * basis[k] == basis[i] * (basis[j] * basis[k]))) {
          assoc = false;
          wit = th->basis_name(i) + " * " + th->basis_name(j) + " * " + th->basis_name(k);
        }
    }
  rep.add(tag + "associative", assoc, wit);

  const QuadricClass h = qc_h_power(th, 1);
  bool ladder = true;
  wit.clear();
  for (int i = 0; i <= d; ++i)
    if (!(h * qc_l(th, i) == qc_l(th, i - 1))) {
      ladder = false;
      wit = "h * l" + std::to_string(i);
      break;
    }
  rep.add(tag + "h-ladder", ladder, wit);

  bool lltab = true;
  wit.clear();
  for (int i = 0; i <= d && lltab; ++i)
    for (int j = 0; j <= d && lltab; ++j) {
      const bool corner = i == d && j == d && D % 4 == 0;
      const QuadricClass expect = corner ? qc_l(th, 0) : qc_zero(th);
      if (!(qc_l(th, i) * qc_l(th, j) == expect)) {
        lltab = false;
        wit = "l" + std::to_string(i) + " * l" + std::to_string(j);
      }
    }
  rep.add(tag + "l-products", lltab, wit);

  // Top h-power against the doubling-series coefficients, re-derived.
  TruncSeries two = two_series(lb);
  QuadricClass expect = qc_zero(th);
  for (int i = 1; i <= D - d; ++i)
    expect = expect + two.coeff(Exps{i}) * qc_l(th, D - d - i);
  rep.add(tag + "top-h-power", qc_h_power(th, d + 1) == expect,
          qc_str(qc_h_power(th, d + 1)) + " vs " + qc_str(expect));

  if (lb.name == "additive") {
    const QuadricClass chow =
        GradedScalar::from_rational(th->ring, Rational(2)) * qc_l(th, D - d - 1);
    rep.add(tag + "top-h-power-chow", qc_h_power(th, d + 1) == chow,
            qc_str(qc_h_power(th, d + 1)));
  }
  if (lb.name != "additive" && lb.name != "multiplicative" && lb.ring.base == Base::F2) {
    const int twon = 1 - th->ring.v_degree;
    if (D + 1 < twon * twon) {
      const QuadricClass closed = GradedScalar::v_power(th->ring, 1) * qc_l(th, D - d - twon);
      rep.add(tag + "top-h-power-mod-2", qc_h_power(th, d + 1) == closed,
              qc_str(qc_h_power(th, d + 1)));
    }
  }
}

// The full cell grid: every law x coefficient base x dimension.
inline void checks_quadric_ring(Report& rep, const VerifyOptions& opt) {
  const Base bases[] = {Base::F2, Base::Zloc2, Base::Q};
  for (const FormalGroupLaw& law : detail::sweep_laws(opt, opt.dmax + 2))
    for (Base b : bases) {
      FormalGroupLaw lb = with_coefficients(law, b);
      for (int D = 1; D <= opt.dmax; ++D) checks_quadric_cell(rep, lb, D);
    }
}

// Closed-form Euler characteristics per law, and the compatibility of the
// pushforward with mod-2 coefficient reduction.
inline void checks_pushforward(Report& rep, const VerifyOptions& opt) {
  const int T = opt.dmax + 2;

  FormalGroupLaw addq = with_coefficients(mk_additive(T), Base::Q);
  for (int D = 1; D <= opt.dmax; ++D) {
    TheoryPtr th = make_quadric_theory(D, addq);
    const std::string tag = "pushforward/additive/Q/D=" + std::to_string(D) + "/";
    bool okh = true;
    std::string wit;
    for (int k = 0; k <= D; ++k) {
      const GradedScalar chi = pushforward_point(qc_h_power(th, k));
      const GradedScalar expect = k == D ? GradedScalar::from_rational(th->ring, Rational(2))
                                         : GradedScalar::zero(th->ring);
      if (!(chi == expect)) {
        okh = false;
        wit = "chi(h^" + std::to_string(k) + ") = " + scalar_str(chi);
        break;
      }
    }
    rep.add(tag + "chi-h-powers", okh, wit);
    bool okl = true;
    wit.clear();
    for (int i = 0; i <= th->d; ++i) {
      const GradedScalar chi = pushforward_point(qc_l(th, i));
      const GradedScalar expect =
          i == 0 ? GradedScalar::one(th->ring) : GradedScalar::zero(th->ring);
      if (!(chi == expect)) {
        okl = false;
        wit = "chi(l" + std::to_string(i) + ") = " + scalar_str(chi);
        break;
      }
    }
    rep.add(tag + "chi-l-classes", okl, wit);
  }

  FormalGroupLaw mul = mk_multiplicative(true, T);
  for (int D = 1; D <= opt.dmax; ++D) {
    TheoryPtr th = make_quadric_theory(D, mul);
    const std::string tag =
        "pushforward/multiplicative/" + th->ring.name() + "/D=" + std::to_string(D) + "/";
    bool okh = true;
    std::string wit;
    for (int k = 0; k <= D; ++k) {
      const GradedScalar chi = pushforward_point(qc_h_power(th, k));
      const GradedScalar expect = k == D ? GradedScalar::from_rational(th->ring, Rational(2))
                                         : GradedScalar::v_power(th->ring, D - k);
      if (!(chi == expect)) {
        okh = false;
        wit = "chi(h^" + std::to_string(k) + ") = " + scalar_str(chi);
        break;
      }
    }
    rep.add(tag + "chi-h-powers", okh, wit);
    bool okl = true;
    wit.clear();
    for (int i = 0; i <= th->d; ++i) {
      const GradedScalar chi = pushforward_point(qc_l(th, i));
      if (!(chi == GradedScalar::v_power(th->ring, i))) {
        okl = false;
        wit = "chi(l" + std::to_string(i) + ") = " + scalar_str(chi);
        break;
      }
    }
    rep.add(tag + "chi-l-classes", okl, wit);
  }

  for (int n : opt.ns) {
    FormalGroupLaw f2 = mk_morava(MoravaSpec{n, Base::F2, true}, T);
    FormalGroupLaw z2 = mk_morava(MoravaSpec{n, Base::Zloc2, true}, T);
    // The mod-2 doubling series is a single term up to degree 2^{2n}.
    const int dcap = std::min(opt.dmax, (1 << (2 * n)) - 2);
    for (int D = 1; D <= dcap; ++D) {
      TheoryPtr th2 = make_quadric_theory(D, f2);
      TheoryPtr thz = make_quadric_theory(D, z2);
      const std::string nm = detail::height_name(n);
      const std::string tag =
          "pushforward/" + nm + "/" + th2->ring.name() + "/D=" + std::to_string(D) + "/";
      bool okh = true;
      std::string wit;
      for (int k = 0; k <= D; ++k) {
        const GradedScalar chi = pushforward_point(qc_h_power(th2, k));
        const GradedScalar expect = k == D + 1 - (1 << n)
                                        ? GradedScalar::v_power(th2->ring, 1)
                                        : GradedScalar::zero(th2->ring);
        if (!(chi == expect)) {
          okh = false;
          wit = "chi(h^" + std::to_string(k) + ") = " + scalar_str(chi);
          break;
        }
      }
      rep.add(tag + "chi-h-powers", okh, wit);
      bool okl = true;
      wit.clear();
      for (int i = 0; i <= th2->d; ++i) {
        const GradedScalar chi = pushforward_point(qc_l(th2, i));
        const GradedScalar expect =
            i == 0 ? GradedScalar::one(th2->ring) : GradedScalar::zero(th2->ring);
        if (!(chi == expect)) {
          okl = false;
          wit = "chi(l" + std::to_string(i) + ") = " + scalar_str(chi);
          break;
        }
      }
      rep.add(tag + "chi-l-classes", okl, wit);
      bool comm = true;
      wit.clear();
      for (int idx = 0; idx < thz->basis_size(); ++idx) {
        const GradedScalar reduced =
            reduce_scalar(pushforward_point(qc_basis(thz, idx)), th2->ring);
        const GradedScalar direct = pushforward_point(qc_basis(th2, idx));
        if (!(reduced == direct)) {
          comm = false;
          wit = thz->basis_name(idx) + ": " + scalar_str(reduced) + " vs " + scalar_str(direct);
          break;
        }
      }
      rep.add("pushforward/" + nm + "/Z(2)-to-F2/D=" + std::to_string(D) + "/chi-commutes",
              comm, wit);
    }
  }
}

// Diagonal and its splitting into an orthogonal idempotent system, for one
// invertible-v mod-2 theory cell.
inline void checks_diagonal_cell(Report& rep, const TheoryPtr& th) {
  const int twon = 1 - th->ring.v_degree;
  const int period = twon - 1;
  int n = 0;
  while ((1 << n) < twon) ++n;
  const std::string tag =
      "motive/" + detail::height_name(n) + "/D=" + std::to_string(th->D) + "/";
  const Correspondence delta = diagonal(th);
  rep.add(tag + "diagonal-two-routes", delta == diagonal_from_gram(th), corr_str(delta));

  bool unit = true;
  std::string wit;
  for (int a = 0; a < th->basis_size() && unit; ++a)
    for (int b = 0; b < th->basis_size() && unit; ++b) {
      const Correspondence f = kunneth(qc_basis(th, a), qc_basis(th, b));
      if (!(compose(delta, f) == f && compose(f, delta) == f)) {
        unit = false;
        wit = th->basis_name(a) + " x " + th->basis_name(b);
      }
    }
  rep.add(tag + "diagonal-unit", unit, wit);

  const std::vector<Correspondence> pis = tate_projectors(th);
  const std::vector<Correspondence> simp = tate_projectors_simplified(th);
  bool same = pis.size() == simp.size();
  for (size_t i = 0; same && i < pis.size(); ++i) same = pis[i] == simp[i];
  rep.add(tag + "tate-normal-form", same);

  const VarpiSystem vs = varpi_projectors(th);
  std::vector<Correspondence> all = pis;
  all.insert(all.end(), vs.varpi.begin(), vs.varpi.end());

  bool idem = true;
  wit.clear();
  for (size_t i = 0; i < all.size(); ++i)
    if (!is_idempotent(all[i])) {
      idem = false;
      wit = "projector " + std::to_string(i);
      break;
    }
  rep.add(tag + "projectors-idempotent", idem, wit);

  bool orth = true;
  wit.clear();
  for (size_t i = 0; i < all.size() && orth; ++i)
    for (size_t j = 0; j < all.size() && orth; ++j) {
      if (i == j) continue;
      if (!compose(all[i], all[j]).is_zero()) {
        orth = false;
        wit = "pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      }
    }
  rep.add(tag + "projectors-orthogonal", orth, wit);

  Correspondence sum = corr_zero(th);
  for (const Correspondence& f : all) sum = sum + f;
  rep.add(tag + "projectors-sum-to-diagonal", sum == delta, corr_str(sum - delta));

  rep.add(tag + "summand-count",
          static_cast<int>(all.size()) == 2 * th->d + 2, std::to_string(all.size()));

  bool tw = true;
  wit.clear();
  for (size_t i = 0; i < pis.size(); ++i) {
    const int expect = static_cast<int>(i) % period;
    if (classify_tate(pis[i]) != expect) {
      tw = false;
      wit = "pi_" + std::to_string(i);
      break;
    }
  }
  for (size_t k = 0; tw && k < vs.varpi.size(); ++k) {
    const int expect = ((vs.kept[k] % period) + period) % period;
    if (classify_tate(vs.varpi[k]) != expect) {
      tw = false;
      wit = "varpi_" + std::to_string(vs.kept[k]);
    }
  }
  rep.add(tag + "tate-twists", tw, wit);
}

// Diagonal splitting over the whole (height, dimension) grid, plus the
// frozen canonical rendering at height 2, D = 3.
inline void checks_diagonal(Report& rep, const VerifyOptions& opt) {
  for (int n : opt.ns) {
    const int dtop = (1 << n) + 6;
    for (int D = 1; D <= dtop; ++D) {
      FormalGroupLaw law = mk_morava(MoravaSpec{n, Base::F2, true}, D + 2);
      checks_diagonal_cell(rep, make_quadric_theory(D, law));
    }
  }
  TheoryPtr th = make_quadric_theory(3, mk_morava(MoravaSpec{2, Base::F2, true}, 8));
  const std::string shown = corr_str(diagonal(th));
  rep.add("motive/K(2)/D=3/diagonal-display",
          shown == "(1 x l0) + (h x l1) + (l0 x 1) + v * (l0 x l0) + (l1 x h)", shown);
}

// Tate-projector count and the rank of the remaining summand.
inline void checks_summand_counts(Report& rep, const VerifyOptions& opt) {
  for (int n : opt.ns) {
    const int dtop = std::max(opt.dmax, (1 << n) + 6);
    for (int D = 1; D <= dtop; ++D) {
      FormalGroupLaw law = mk_morava(MoravaSpec{n, Base::F2, true}, D + 2);
      TheoryPtr th = make_quadric_theory(D, law);
      const std::string tag =
          "motive/" + detail::height_name(n) + "/D=" + std::to_string(D) + "/";
      const std::vector<Correspondence> pis = tate_projectors(th);
      if (D < (1 << n) - 1) {
        rep.add(tag + "tate-count", pis.empty(), std::to_string(pis.size()));
        continue;
      }
      rep.add(tag + "tate-count",
              static_cast<int>(pis.size()) == D - (1 << n) + 2, std::to_string(pis.size()));
      Correspondence rest = diagonal(th);
      for (const Correspondence& p : pis) rest = rest - p;
      const int expect = D % 2 == 0 ? (1 << n) : (1 << n) - 1;
      const int got = summand_rank(rest);
      rep.add(tag + "residual-rank", got == expect, std::to_string(got));
    }
  }
}

// h^{d+1} = v h^N l_d over the invertible-v mod-2 height-2 theory.
inline void checks_height_identity(Report& rep, const VerifyOptions&) {
  for (int D = 6; D <= 10; ++D) {
    FormalGroupLaw law = mk_morava(MoravaSpec{2, Base::F2, true}, D + 2);
    TheoryPtr th = make_quadric_theory(D, law);
    const HeightReport hr = verify_height_identity(th);
    const int expectN = D % 2 == 0 ? 4 : 3;
    rep.add("quadric/K(2)/" + th->ring.name() + "/D=" + std::to_string(D) + "/height-identity",
            hr.holds && hr.N == expectN,
            "N=" + std::to_string(hr.N) + ": " + qc_str(hr.lhs) + " vs " + qc_str(hr.rhs));
  }
}

// Half-projectors over the rational additive (Chow) theory: a complete
// orthogonal system whose complement vanishes exactly in odd dimensions.
inline void checks_rational_projectors(Report& rep, const VerifyOptions&) {
  FormalGroupLaw law = with_coefficients(mk_additive(10), Base::Q);
  for (int D = 1; D <= 8; ++D) {
    TheoryPtr th = make_quadric_theory(D, law);
    const std::string tag = "motive/additive/Q/D=" + std::to_string(D) + "/";
    const std::vector<Correspondence> pis = rational_half_projectors(th);
    rep.add(tag + "half-projector-count",
            static_cast<int>(pis.size()) == D + 1, std::to_string(pis.size()));

    bool idem = true;
    std::string wit;
    for (size_t i = 0; i < pis.size(); ++i)
      if (!is_idempotent(pis[i])) {
        idem = false;
        wit = "pi_" + std::to_string(i);
        break;
      }
    rep.add(tag + "half-projectors-idempotent", idem, wit);

    bool orth = true;
    wit.clear();
    for (size_t i = 0; i < pis.size() && orth; ++i)
      for (size_t j = 0; j < pis.size() && orth; ++j) {
        if (i == j) continue;
        if (!compose(pis[i], pis[j]).is_zero()) {
          orth = false;
          wit = "pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
        }
      }
    rep.add(tag + "half-projectors-orthogonal", orth, wit);

    Correspondence varpi = diagonal_from_gram(th);
    for (const Correspondence& p : pis) varpi = varpi - p;
    rep.add(tag + "varpi-idempotent", is_idempotent(varpi), corr_str(varpi));
    rep.add(tag + "varpi-symmetric", transpose(varpi) == varpi, corr_str(varpi));
    bool sidesum = true;
    wit.clear();
    for (size_t i = 0; i < pis.size(); ++i)
      if (!compose(varpi, pis[i]).is_zero() || !compose(pis[i], varpi).is_zero()) {
        sidesum = false;
        wit = "pi_" + std::to_string(i);
        break;
      }
    rep.add(tag + "varpi-orthogonal-to-halves", sidesum, wit);
    rep.add(tag + "varpi-vanishes-iff-odd", varpi.is_zero() == (D % 2 == 1), corr_str(varpi));
  }
}

namespace detail {

inline std::vector<SignedPerm> parabolic_subgroup(const RootDatum& rd,
                                                  const std::vector<int>& theta) {
  std::set<SignedPerm> seen;
  std::vector<SignedPerm> queue{sp_identity(rd.rank)};
  seen.insert(queue.front());
  for (size_t q = 0; q < queue.size(); ++q)
    for (int i : theta) {
      SignedPerm next = mult(queue[q], simple_reflection(rd, i));
      if (seen.insert(next).second) queue.push_back(next);
    }
  return std::vector<SignedPerm>(seen.begin(), seen.end());
}

}  // namespace detail

// Duality: the descending chain sends X_w to (-1)^{l(w0)-l(w)} X_{w0} and
// kills every other class of the same length. Runs over the whole group.
inline void checks_schubert_duality(Report& rep, const RootDatum& rd, const std::string& tag) {
  const std::vector<SignedPerm> all = enumerate_weyl(rd);
  const SignedPerm w0 = longest_element(rd);
  const int l0 = length(rd, w0);
  bool dual = true;
  std::string wit;
  std::map<int, std::vector<SignedPerm>> by_length;
  for (const SignedPerm& w : all) by_length[length(rd, w)].push_back(w);
  for (const SignedPerm& w : all) {
    const Int sgn = (l0 - length(rd, w)) % 2 == 0 ? 1 : -1;
    if (!(dual_chain(rd, w, sc_class(rd, w)) == sc_class(rd, w0, sgn))) {
      dual = false;
      wit = sp_str(w);
      break;
    }
  }
  rep.add(tag + "schubert-duality", dual, wit);
  bool kernel = true;
  wit.clear();
  for (const auto& [len, bucket] : by_length) {
    for (const SignedPerm& w : bucket)
      for (const SignedPerm& w2 : bucket) {
        if (w == w2) continue;
        if (!dual_chain(rd, w, sc_class(rd, w2)).is_zero()) {
          kernel = false;
          wit = sp_str(w) + " on " + sp_str(w2);
          break;
        }
      }
    if (!kernel) break;
  }
  rep.add(tag + "schubert-duality-kernel", kernel, wit);
}

// Additive operator relations: squares vanish, braid words agree, and every
// non-reduced three-letter word annihilates.
inline void checks_operator_relations(Report& rep, const RootDatum& rd, const std::string& tag,
                                      std::mt19937_64& rng) {
  const int l = rd.rank;
  BTContext ctx = make_bt_context(rd, mk_additive(8), 6);
  bool squares = true;
  std::string wit;
  for (int i = 1; i <= l && squares; ++i)
    for (int rep_i = 0; rep_i < 5 && squares; ++rep_i) {
      TruncSeries u = detail::random_poly(rng, ctx.fgl.ring, l, 6, 3);
      if (!demazure_bt(ctx, i, demazure_bt(ctx, i, u)).is_zero()) {
        squares = false;
        wit = "i=" + std::to_string(i) + " on " + series_str(u);
      }
    }
  rep.add(tag + "additive-squares-vanish", squares, wit);

  bool braid = true;
  wit.clear();
  for (int i = 1; i <= l && braid; ++i)
    for (int j = i + 1; j <= l && braid; ++j) {
      const int m = braid_order(rd, i, j);
      std::vector<int> w1, w2;
      for (int k = 0; k < m; ++k) {
        w1.push_back(k % 2 == 0 ? i : j);
        w2.push_back(k % 2 == 0 ? j : i);
      }
      for (int rep_i = 0; rep_i < 5 && braid; ++rep_i) {
        TruncSeries u = detail::random_poly(rng, ctx.fgl.ring, l, 6, 3);
        if (!(demazure_word(ctx, w1, u) == demazure_word(ctx, w2, u))) {
          braid = false;
          wit = "pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
        }
      }
    }
  rep.add(tag + "additive-braid", braid, wit);

  bool nonred = true;
  wit.clear();
  std::vector<int> word(3);
  for (word[0] = 1; word[0] <= l && nonred; ++word[0])
    for (word[1] = 1; word[1] <= l && nonred; ++word[1])
      for (word[2] = 1; word[2] <= l && nonred; ++word[2]) {
        if (is_reduced(rd, word)) continue;
        TruncSeries u = detail::random_poly(rng, ctx.fgl.ring, l, 6, 3);
        if (!demazure_word(ctx, word, u).is_zero()) {
          nonred = false;
          wit = "word (" + std::to_string(word[0]) + ", " + std::to_string(word[1]) + ", " +
                std::to_string(word[2]) + ")";
        }
      }
  rep.add(tag + "additive-non-reduced-words-vanish", nonred, wit);
}

// The characteristic map intertwines the series-level and Schubert-level
// divided differences on random homogeneous inputs of degree <= 3.
inline void checks_charmap_intertwines(Report& rep, const RootDatum& rd, const std::string& tag,
                                       std::mt19937_64& rng) {
  const int l = rd.rank;
  BTContext ctx = make_bt_context(rd, mk_additive(8), 6);
  bool inter = true;
  std::string wit;
  for (int s = 1; s <= 3 && inter; ++s)
    for (int t = 0; t < 4 && inter; ++t) {
      TruncSeries u = detail::random_homogeneous(rng, ctx.fgl.ring, l, 6, s);
      for (int i = 1; i <= l && inter; ++i) {
        const SchubertComb lhs = demazure_schubert(rd, i, char_map_chow(ctx, u));
        const SchubertComb rhs = char_map_chow(ctx, demazure_bt(ctx, i, u));
        if (!(lhs == rhs)) {
          inter = false;
          wit = "deg " + std::to_string(s) + ", i=" + std::to_string(i) + ", u=" + series_str(u);
        }
      }
    }
  rep.add(tag + "charmap-intertwines", inter, wit);
}

// Signed-permutation groups, parabolic cosets, operator relations on the
// torus side, Schubert duality, and the randomized product identities.
inline void checks_weyl(Report& rep, const VerifyOptions& opt) {
  struct GroupCase {
    LieType type;
    int rank;
    long long order;
  };
  const GroupCase cases[] = {
      {LieType::B, 2, 8}, {LieType::B, 3, 48}, {LieType::D, 4, 192}};
  std::mt19937_64 rng(opt.seed);

  for (const GroupCase& gc : cases) {
    RootDatum rd = make_root_datum(gc.type, gc.rank);
    const int l = gc.rank;
    const std::string tag =
        std::string("weyl/") + lie_type_name(gc.type) + std::to_string(l) + "/";
    const std::vector<SignedPerm> all = enumerate_weyl(rd);
    rep.add(tag + "order",
            weyl_order(rd) == gc.order && static_cast<long long>(all.size()) == gc.order,
            std::to_string(all.size()));

    // Every parabolic: minimal representatives x subgroup covers the group
    // once, with lengths adding.
    bool cosets = true;
    std::string wit;
    for (int mask = 0; mask < (1 << l) && cosets; ++mask) {
      std::vector<int> theta;
      for (int i = 1; i <= l; ++i)
        if (mask & (1 << (i - 1))) theta.push_back(i);
      const std::vector<SignedPerm> reps = coset_min_reps(rd, theta);
      const std::vector<SignedPerm> sub = detail::parabolic_subgroup(rd, theta);
      std::set<SignedPerm> seen;
      for (const SignedPerm& u : reps)
        for (const SignedPerm& x : sub) {
          const SignedPerm w = mult(u, x);
          if (length(rd, w) != length(rd, u) + length(rd, x) || !seen.insert(w).second) {
            cosets = false;
            wit = "Theta mask " + std::to_string(mask) + " at " + sp_str(u) + " * " + sp_str(x);
            break;
          }
        }
      if (cosets && seen.size() != all.size()) {
        cosets = false;
        wit = "Theta mask " + std::to_string(mask) + " covers " + std::to_string(seen.size());
      }
    }
    rep.add(tag + "parabolic-cosets", cosets, wit);

    checks_schubert_duality(rep, rd, tag);
    checks_operator_relations(rep, rd, tag, rng);
  }

  // Leibniz rule at height 2, 100 seeded pairs in rank 2.
  {
    RootDatum rd = make_root_datum(LieType::B, 2);
    BTContext ctx = make_bt_context(rd, mk_morava(MoravaSpec{2, Base::F2, true}, 8), 5);
    bool leibniz = true;
    std::string wit;
    for (int t = 0; t < 100 && leibniz; ++t) {
      const int i = 1 + static_cast<int>(rng() % 2);
      TruncSeries u = detail::random_poly(rng, ctx.fgl.ring, 2, 5, 3);
      TruncSeries v = detail::random_poly(rng, ctx.fgl.ring, 2, 5, 3);
      TruncSeries lhs = demazure_bt(ctx, i, u * v);
      TruncSeries rhs = demazure_bt(ctx, i, u) * truncate(v, 4) +
                        truncate(weyl_action_bt(ctx, i, u), 4) * demazure_bt(ctx, i, v);
      if (!(lhs == rhs)) {
        leibniz = false;
        wit = "trial " + std::to_string(t) + ", i=" + std::to_string(i);
      }
    }
    rep.add("weyl/B2/K(2)-leibniz-100-pairs", leibniz, wit);
  }

  for (int l : {2, 3}) {
    RootDatum rd = make_root_datum(LieType::B, l);
    checks_charmap_intertwines(rep, rd, "weyl/B" + std::to_string(l) + "/", rng);
  }
}

// Named suites for the command line; "all" runs everything.
inline Report run_suite(const std::string& suite, const VerifyOptions& opt) {
  Report rep;
  rep.config_kv("suite", suite);
  std::string hs;
  for (size_t i = 0; i < opt.ns.size(); ++i)
    hs += (i ? "," : "") + std::to_string(opt.ns[i]);
  rep.config_kv("heights", hs);
  rep.config_kv("dmax", std::to_string(opt.dmax));
  rep.config_kv("seed", std::to_string(opt.seed));
  bool known = false;
  const bool all = suite == "all";
  if (all || suite == "fgl") {
    checks_fgl_laws(rep, opt);
    checks_mishchenko(rep, opt);
    known = true;
  }
  if (all || suite == "quadric") {
    checks_quadric_ring(rep, opt);
    checks_pushforward(rep, opt);
    checks_height_identity(rep, opt);
    known = true;
  }
  if (all || suite == "motives") {
    checks_diagonal(rep, opt);
    checks_summand_counts(rep, opt);
    checks_rational_projectors(rep, opt);
    known = true;
  }
  if (all || suite == "weyl") {
    checks_weyl(rep, opt);
    known = true;
  }
  require(known, Errc::bad_argument, "unknown suite: " + suite);
  return rep;
}

}  // namespace mqk
