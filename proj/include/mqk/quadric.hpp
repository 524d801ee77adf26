#pragma once

// The free module A*(Q) of a split smooth quadric Q of dimension D with
// cell basis h^0..h^d, l_0..l_d (d = floor(D/2)), and its ring structure
// for an arbitrary formal group law:
//   h · l_i   = l_{i-1}            (l_{-1} = 0)
//   l_i · l_j = l_0 iff i = j = d and D ≡ 0 (mod 4), else 0
//   h^{d+1}   = sum_{i>=1} b_i · l_{D-d-i}   where [2](t) = sum b_i t^i.
// The l·l rule is encoded literally as stated above; in particular
// l_d · l_d = 0 when D ≡ 2 (mod 4).
// Pushforward to the point: chi(l_i) = [P^i],
// chi(h^k) = sum_{j=1}^{D+1-k} b_j [P^{D+1-k-j}].

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "mqk/formal_group.hpp"

namespace mqk {

struct QuadricTheory {
  int D = 0;      // quadric dimension
  int d = 0;      // floor(D/2)
  FormalGroupLaw fgl;
  RingSpec ring;  // = fgl.ring
  std::vector<GradedScalar> b;     // b[i] = coeff of t^i in [2](t), 0 <= i <= D+1
  std::vector<GradedScalar> pcls;  // [P^i] in `ring`, 0 <= i <= D+1

  // Intersection pairing, filled on first use by gram_matrix().
  mutable std::shared_ptr<const std::vector<std::vector<GradedScalar>>> gram_cache;

  int basis_size() const { return 2 * d + 2; }

  // Basis indexing: 0..d are h^0..h^d, d+1+i is l_i.
  bool is_h(int idx) const { return idx <= d; }
  int h_exp(int idx) const { return idx; }
  int l_index(int idx) const { return idx - d - 1; }
  int l_basis(int i) const { return d + 1 + i; }

  int basis_codim(int idx) const { return is_h(idx) ? idx : D - l_index(idx); }

  std::string basis_name(int idx) const {
    if (is_h(idx)) {
      if (idx == 0) return "1";
      if (idx == 1) return "h";
      return "h^" + std::to_string(idx);
    }
    return "l" + std::to_string(l_index(idx));
  }
};

using TheoryPtr = std::shared_ptr<const QuadricTheory>;

inline TheoryPtr make_quadric_theory(int D, const FormalGroupLaw& fgl) {
  require(D >= 1, Errc::precondition, "quadric dimension must be >= 1");
  require(fgl.trunc >= D + 2, Errc::precondition,
          "law truncation must be at least D + 2");
  auto th = std::make_shared<QuadricTheory>();
  th->D = D;
  th->d = D / 2;
  th->fgl = fgl;
  th->ring = fgl.ring;
  TruncSeries two = two_series(fgl);
  th->b.assign(D + 2, GradedScalar::zero(fgl.ring));
  for (int i = 1; i <= D + 1; ++i) th->b[i] = two.coeff(Exps{i});
  auto mish = mishchenko_classes(fgl, D + 1);
  th->pcls.reserve(mish.size());
  for (const auto& c : mish) th->pcls.push_back(reduce_scalar(c, fgl.ring));
  return th;
}

struct QuadricClass {
  TheoryPtr th;
  std::vector<GradedScalar> c;  // coefficients over the cell basis

  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
};

inline void check_same_theory(const QuadricClass& a, const QuadricClass& b) {
  require(a.th && b.th, Errc::bad_argument, "class without a theory");
  require(a.th == b.th || (a.th->D == b.th->D && a.th->ring == b.th->ring &&
                           a.th->fgl.name == b.th->fgl.name),
          Errc::ring_mismatch, "classes over different quadric theories");
}

inline QuadricClass qc_zero(const TheoryPtr& th) {
  return QuadricClass{th, std::vector<GradedScalar>(th->basis_size(), GradedScalar::zero(th->ring))};
}

inline QuadricClass qc_basis(const TheoryPtr& th, int idx) {
  require(0 <= idx && idx < th->basis_size(), Errc::bad_argument, "basis index out of range");
  QuadricClass r = qc_zero(th);
  r.c[idx] = GradedScalar::one(th->ring);
  return r;
}

// l_i with the zero convention for out-of-range indices.
inline QuadricClass qc_l(const TheoryPtr& th, int i) {
  if (i < 0 || i > th->d) return qc_zero(th);
  return qc_basis(th, th->l_basis(i));
}

// h^k in normal form; k > d is rewritten through the defining relation,
// h^{d+1+r} = sum_{i} b_i l_{D-d-i-r}, and k < 0 is zero.
inline QuadricClass qc_h_power(const TheoryPtr& th, int k) {
  if (k < 0) return qc_zero(th);
  if (k <= th->d) return qc_basis(th, k);
  const int r = k - th->d - 1;
  QuadricClass out = qc_zero(th);
  for (int i = 1; i <= th->D - th->d; ++i) {
    const int li = th->D - th->d - i - r;
    if (li < 0 || li > th->d) continue;
    out.c[th->l_basis(li)] += th->b[i];
  }
  return out;
}

inline QuadricClass operator+(const QuadricClass& a, const QuadricClass& b) {
  check_same_theory(a, b);
  QuadricClass r = a;
  for (int i = 0; i < static_cast<int>(r.c.size()); ++i) r.c[i] += b.c[i];
  return r;
}

inline QuadricClass operator-(const QuadricClass& a) {
  QuadricClass r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

inline QuadricClass operator-(const QuadricClass& a, const QuadricClass& b) { return a + (-b); }

inline QuadricClass operator*(const GradedScalar& s, const QuadricClass& a) {
  check_same_ring(s.ring, a.th->ring);
  QuadricClass r = a;
  for (auto& x : r.c) x = s * x;
  return r;
}

inline bool operator==(const QuadricClass& a, const QuadricClass& b) {
  check_same_theory(a, b);
  return a.c == b.c;
}

namespace detail {

// Product of two basis elements in normal form.
inline QuadricClass qc_basis_product(const TheoryPtr& th, int i, int j) {
  if (th->is_h(i) && th->is_h(j)) return qc_h_power(th, i + j);
  if (!th->is_h(i) && !th->is_h(j)) {
    const int li = th->l_index(i), lj = th->l_index(j);
    if (li == th->d && lj == th->d && th->D % 4 == 0) return qc_l(th, 0);
    return qc_zero(th);
  }
  const int k = th->is_h(i) ? th->h_exp(i) : th->h_exp(j);
  const int li = th->is_h(i) ? th->l_index(j) : th->l_index(i);
  return qc_l(th, li - k);
}

}  // namespace detail

inline QuadricClass operator*(const QuadricClass& a, const QuadricClass& b) {
  check_same_theory(a, b);
  QuadricClass out = qc_zero(a.th);
  const int B = a.th->basis_size();
  for (int i = 0; i < B; ++i) {
    if (a.c[i].is_zero()) continue;
    for (int j = 0; j < B; ++j) {
      if (b.c[j].is_zero()) continue;
      QuadricClass p = detail::qc_basis_product(a.th, i, j);
      const GradedScalar s = a.c[i] * b.c[j];
      for (int k = 0; k < B; ++k)
        if (!p.c[k].is_zero()) out.c[k] += s * p.c[k];
    }
  }
  return out;
}

// Pushforward to the point.
inline GradedScalar pushforward_point(const QuadricClass& a) {
  const auto& th = *a.th;
  GradedScalar out = GradedScalar::zero(th.ring);
  for (int idx = 0; idx < th.basis_size(); ++idx) {
    if (a.c[idx].is_zero()) continue;
    if (th.is_h(idx)) {
      const int k = th.h_exp(idx);
      GradedScalar chi = GradedScalar::zero(th.ring);
      for (int j = 1; j <= th.D + 1 - k; ++j) chi += th.b[j] * th.pcls[th.D + 1 - k - j];
      out += a.c[idx] * chi;
    } else {
      out += a.c[idx] * th.pcls[th.l_index(idx)];
    }
  }
  return out;
}

// Codimension of a homogeneous class, counting coefficient degrees.
inline std::optional<int> class_codim(const QuadricClass& a) {
  std::optional<int> codim;
  for (int idx = 0; idx < a.th->basis_size(); ++idx) {
    if (a.c[idx].is_zero()) continue;
    auto sc = scalar_codim(a.c[idx]);
    if (!sc) return std::nullopt;
    const int tc = *sc + a.th->basis_codim(idx);
    if (codim && *codim != tc) return std::nullopt;
    codim = tc;
  }
  return a.is_zero() ? std::optional<int>(0) : codim;
}

inline std::string qc_str(const QuadricClass& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int idx = 0; idx < a.th->basis_size(); ++idx) {
    if (a.c[idx].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const GradedScalar& s = a.c[idx];
    if (s.is_one()) {
      os << a.th->basis_name(idx);
    } else if (s.terms.size() == 1) {
      os << scalar_str(s) << '*' << a.th->basis_name(idx);
    } else {
      os << '(' << scalar_str(s) << ")*" << a.th->basis_name(idx);
    }
  }
  return os.str();
}

// Height identity h^{d+1} = v·h^N·l_d for the height-n mod-2 theories,
// N = 2^n for even D and 2^n - 1 for odd D. Gate: D >= 2^{n+1} - 2 (at the
// even boundary D = 2^{n+1}-2 both sides vanish and the identity is trivial).
struct HeightReport {
  int N = 0;
  bool holds = false;
  QuadricClass lhs, rhs;
};

inline HeightReport verify_height_identity(const TheoryPtr& th) {
  const RingSpec& r = th->ring;
  require(r.base == Base::F2 && r.has_v && r.v_degree <= -1 && r.v_invertible,
          Errc::precondition, "height identity needs an invertible-v mod-2 theory");
  const int twon = 1 - r.v_degree;  // v_degree = 1 - 2^n
  int n = 0;
  while ((1 << n) < twon) ++n;
  require((1 << n) == twon, Errc::precondition, "v-degree is not 1 - 2^n");
  require(th->D >= (1 << (n + 1)) - 2, Errc::precondition,
          "dimension too small for the height identity");
  HeightReport rep;
  rep.N = th->D % 2 == 0 ? (1 << n) : (1 << n) - 1;
  rep.lhs = qc_h_power(th, th->d + 1);
  rep.rhs = GradedScalar::v_power(r, 1) * (qc_h_power(th, rep.N) * qc_l(th, th->d));
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

// Coefficient change of a class into a theory over a smaller base.
inline QuadricClass reduce_class(const QuadricClass& a, const TheoryPtr& target) {
  require(a.th->D == target->D, Errc::bad_argument, "dimension mismatch");
  QuadricClass out = qc_zero(target);
  for (int i = 0; i < target->basis_size(); ++i) out.c[i] = reduce_scalar(a.c[i], target->ring);
  return out;
}

}  // namespace mqk
