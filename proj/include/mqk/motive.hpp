#pragma once

// Correspondences on Q x Q in the Kunneth basis e_i x e_j, their composition
// algebra, and the diagonal with its splitting into projectors.
//
// Conventions. A correspondence f = sum f_{ab} e_a x e_b acts on classes by
// u -> sum f_{ab} chi(e_b * u) e_a: the second factor pairs with the input.
// With G_{bc} = chi(e_b * e_c) this makes realize(f) = f * G as matrices, and
// compose(f, g) = g after f = f * G * g, so realize(compose(f, g)) =
// realize(f) * realize(g).

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "mqk/quadric.hpp"

namespace mqk {

struct Correspondence {
  TheoryPtr th;
  // Sparse coefficient matrix; zero entries are never stored.
  std::map<std::pair<int, int>, GradedScalar> m;

  bool is_zero() const { return m.empty(); }
};

inline Correspondence corr_zero(const TheoryPtr& th) { return Correspondence{th, {}}; }

inline void corr_add(Correspondence& f, int a, int b, const GradedScalar& s) {
  if (s.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = f.m.find(key);
  if (it == f.m.end()) {
    f.m.emplace(key, s);
    return;
  }
  it->second += s;
  if (it->second.is_zero()) f.m.erase(it);
}

inline void check_same_theory(const Correspondence& f, const Correspondence& g) {
  require(f.th && g.th, Errc::bad_argument, "correspondence without a theory");
  require(f.th == g.th || (f.th->D == g.th->D && f.th->ring == g.th->ring &&
                           f.th->fgl.name == g.th->fgl.name),
          Errc::ring_mismatch, "correspondences over different quadric theories");
}

inline Correspondence kunneth(const QuadricClass& x, const QuadricClass& y) {
  check_same_theory(x, y);
  Correspondence f = corr_zero(x.th);
  for (int a = 0; a < x.th->basis_size(); ++a) {
    if (x.c[a].is_zero()) continue;
    for (int b = 0; b < y.th->basis_size(); ++b) corr_add(f, a, b, x.c[a] * y.c[b]);
  }
  return f;
}

inline Correspondence operator+(const Correspondence& f, const Correspondence& g) {
  check_same_theory(f, g);
  Correspondence r = f;
  for (const auto& [key, s] : g.m) corr_add(r, key.first, key.second, s);
  return r;
}

inline Correspondence operator-(const Correspondence& f) {
  Correspondence r = f;
  for (auto& [key, s] : r.m) s = -s;
  return r;
}

inline Correspondence operator-(const Correspondence& f, const Correspondence& g) {
  return f + (-g);
}

inline Correspondence operator*(const GradedScalar& s, const Correspondence& f) {
  Correspondence r = corr_zero(f.th);
  for (const auto& [key, c] : f.m) corr_add(r, key.first, key.second, s * c);
  return r;
}

inline bool operator==(const Correspondence& f, const Correspondence& g) {
  check_same_theory(f, g);
  return f.m == g.m;
}

inline Correspondence transpose(const Correspondence& f) {
  Correspondence r = corr_zero(f.th);
  for (const auto& [key, s] : f.m) corr_add(r, key.second, key.first, s);
  return r;
}

using ScalarMatrix = std::vector<std::vector<GradedScalar>>;

// G_{bc} = chi(e_b * e_c), the intersection pairing on the cell basis.
inline const ScalarMatrix& gram_matrix(const TheoryPtr& th) {
  if (!th->gram_cache) {
    const int B = th->basis_size();
    ScalarMatrix g(B, std::vector<GradedScalar>(B, GradedScalar::zero(th->ring)));
    for (int b = 0; b < B; ++b)
      for (int c = b; c < B; ++c) {
        g[b][c] = pushforward_point(qc_basis(th, b) * qc_basis(th, c));
        g[c][b] = g[b][c];
      }
    th->gram_cache = std::make_shared<const ScalarMatrix>(std::move(g));
  }
  return *th->gram_cache;
}

// g after f: for f = sum a x b and g = sum c x e this is
// sum chi(b * c) (a x e).
inline Correspondence compose(const Correspondence& f, const Correspondence& g) {
  check_same_theory(f, g);
  const ScalarMatrix& gram = gram_matrix(f.th);
  Correspondence r = corr_zero(f.th);
  for (const auto& [fk, fs] : f.m)
    for (const auto& [gk, gs] : g.m) {
      const GradedScalar& mid = gram[fk.second][gk.first];
      if (mid.is_zero()) continue;
      corr_add(r, fk.first, gk.second, fs * mid * gs);
    }
  return r;
}

inline QuadricClass apply(const Correspondence& f, const QuadricClass& u) {
  require(static_cast<bool>(f.th), Errc::bad_argument, "correspondence without a theory");
  check_same_theory(qc_zero(f.th), u);
  QuadricClass out = qc_zero(f.th);
  std::map<int, GradedScalar> paired;  // b -> chi(e_b * u)
  for (const auto& [key, s] : f.m) {
    auto it = paired.find(key.second);
    if (it == paired.end())
      it = paired.emplace(key.second, pushforward_point(qc_basis(f.th, key.second) * u)).first;
    out.c[key.first] += s * it->second;
  }
  return out;
}

// Matrix of the action on coefficient columns: realize(f) = f * G.
inline ScalarMatrix realize(const Correspondence& f) {
  require(static_cast<bool>(f.th), Errc::bad_argument, "correspondence without a theory");
  const int B = f.th->basis_size();
  const ScalarMatrix& gram = gram_matrix(f.th);
  ScalarMatrix r(B, std::vector<GradedScalar>(B, GradedScalar::zero(f.th->ring)));
  for (const auto& [key, s] : f.m)
    for (int c = 0; c < B; ++c) {
      const GradedScalar& g = gram[key.second][c];
      if (!g.is_zero()) r[key.first][c] += s * g;
    }
  return r;
}

// Common codimension of all terms, when one exists.
inline std::optional<int> corr_codim(const Correspondence& f) {
  std::optional<int> codim;
  for (const auto& [key, s] : f.m) {
    auto sc = scalar_codim(s);
    if (!sc) return std::nullopt;
    const int tc = *sc + f.th->basis_codim(key.first) + f.th->basis_codim(key.second);
    if (codim && *codim != tc) return std::nullopt;
    codim = tc;
  }
  return f.m.empty() ? std::optional<int>(0) : codim;
}

inline bool is_idempotent(const Correspondence& f) { return compose(f, f) == f; }

namespace detail {

// 2^n recovered from deg v = 1 - 2^n; requires the mod-2 invertible-v setup.
inline int theory_two_n(const TheoryPtr& th) {
  const RingSpec& r = th->ring;
  require(r.base == Base::F2 && r.has_v && r.v_invertible, Errc::precondition,
          "operation needs an invertible-v mod-2 theory");
  const int twon = 1 - r.v_degree;
  int n = 0;
  while ((1 << n) < twon) ++n;
  require((1 << n) == twon && n >= 2, Errc::precondition,
          "v-degree is not 1 - 2^n with n >= 2");
  return twon;
}

}  // namespace detail

// The diagonal class, assembled from the closed formula
//   sum_{i=0}^d (h^i x l_i + l_i x h^i) + v sum_{i=d'}^d l_i x l_{D'-i}
//   + [D = 0 mod 4] (h^d + v l_{d'}) x (h^d + v l_{d'}),
// where D' = D - 2^n + 1, d' = D' - d, and out-of-range h^i, l_i are zero.
inline Correspondence diagonal(const TheoryPtr& th) {
  const int twon = detail::theory_two_n(th);
  const int D = th->D, d = th->d;
  const int Dp = D - twon + 1;
  const int dp = Dp - d;
  const GradedScalar v = GradedScalar::v_power(th->ring, 1);
  Correspondence delta = corr_zero(th);
  for (int i = 0; i <= d; ++i) {
    delta = delta + kunneth(qc_h_power(th, i), qc_l(th, i));
    delta = delta + kunneth(qc_l(th, i), qc_h_power(th, i));
  }
  for (int i = dp; i <= d; ++i)
    delta = delta + v * kunneth(qc_l(th, i), qc_l(th, Dp - i));
  if (D % 4 == 0) {
    QuadricClass mid = qc_h_power(th, d) + v * qc_l(th, dp);
    delta = delta + kunneth(mid, mid);
  }
  return delta;
}

namespace detail {

// Fraction-free Gauss-Jordan on [A | I]: ends as [det * I | adj], entrywise
// divisions by the previous pivot staying in the ring. Returns A^{-1}.
inline ScalarMatrix invert_matrix(const RingSpec& ring, ScalarMatrix a) {
  const int B = static_cast<int>(a.size());
  ScalarMatrix aug = std::move(a);
  for (int i = 0; i < B; ++i) {
    aug[i].resize(2 * B, GradedScalar::zero(ring));
    aug[i][B + i] = GradedScalar::one(ring);
  }
  GradedScalar prev = GradedScalar::one(ring);
  for (int k = 0; k < B; ++k) {
    int piv = -1;
    for (int s = k; s < B && piv < 0; ++s)
      if (!aug[s][k].is_zero()) piv = s;
    require(piv >= 0, Errc::precondition, "intersection pairing is degenerate");
    if (piv != k) {
      std::swap(aug[piv], aug[k]);
      // A row swap flips the determinant; negate the swapped-in row to keep
      // the final diagonal equal to one single det value.
      for (auto& x : aug[k]) x = -x;
    }
    for (int i = 0; i < B; ++i) {
      if (i == k) continue;
      for (int j = 0; j < 2 * B; ++j) {
        if (j == k) continue;
        aug[i][j] = exact_div(aug[k][k] * aug[i][j] - aug[i][k] * aug[k][j], prev);
      }
      aug[i][k] = GradedScalar::zero(ring);
    }
    prev = aug[k][k];
  }
  const GradedScalar det = aug[B - 1][B - 1];
  ScalarMatrix inv(B, std::vector<GradedScalar>(B, GradedScalar::zero(ring)));
  for (int i = 0; i < B; ++i)
    for (int j = 0; j < B; ++j) inv[i][j] = exact_div(aug[i][B + j], det);
  return inv;
}

}  // namespace detail

// The diagonal recovered with no closed formula: its realization is the
// identity, so its coefficient matrix is the inverse of the Gram matrix.
inline Correspondence diagonal_from_gram(const TheoryPtr& th) {
  ScalarMatrix inv = detail::invert_matrix(th->ring, gram_matrix(th));
  Correspondence delta = corr_zero(th);
  const int B = th->basis_size();
  for (int i = 0; i < B; ++i)
    for (int j = 0; j < B; ++j) corr_add(delta, i, j, inv[i][j]);
  return delta;
}

// pi_i = v^{-1} h^i x h^{D'-i} for 0 <= i <= D'; empty below D = 2^n - 1.
inline std::vector<Correspondence> tate_projectors(const TheoryPtr& th) {
  const int twon = detail::theory_two_n(th);
  std::vector<Correspondence> out;
  if (th->D < twon - 1) return out;
  const int Dp = th->D - twon + 1;
  const GradedScalar vinv = GradedScalar::v_power(th->ring, -1);
  for (int i = 0; i <= Dp; ++i)
    out.push_back(vinv * kunneth(qc_h_power(th, i), qc_h_power(th, Dp - i)));
  return out;
}

// The same system written without v^{-1} where the normal form collapses:
// pi_i = h^i x l_i for i < d', and pi_{D'-i} = l_i x h^i for i < d'.
inline std::vector<Correspondence> tate_projectors_simplified(const TheoryPtr& th) {
  const int twon = detail::theory_two_n(th);
  std::vector<Correspondence> out;
  if (th->D < twon - 1) return out;
  const int Dp = th->D - twon + 1;
  const int dp = Dp - th->d;
  const GradedScalar vinv = GradedScalar::v_power(th->ring, -1);
  for (int i = 0; i <= Dp; ++i) {
    if (i < dp)
      out.push_back(kunneth(qc_h_power(th, i), qc_l(th, i)));
    else if (Dp - i < dp)
      out.push_back(kunneth(qc_l(th, Dp - i), qc_h_power(th, Dp - i)));
    else
      out.push_back(vinv * kunneth(qc_h_power(th, i), qc_h_power(th, Dp - i)));
  }
  return out;
}

struct VarpiSystem {
  std::vector<Correspondence> varpi;
  std::vector<int> kept;     // the index j of each returned projector
  std::vector<int> dropped;  // indices whose formula collapsed to zero
};

// varpi_j = (h^j + v l_{D'-j}) x (l_j + v^{-1} h^{D'-j}) for d' <= j <= d-1,
// and varpi_d with the [D = 0 mod 4] correction on the second factor.
// Zero collapses (possible only below D = 2^n - 1) are dropped and recorded.
inline VarpiSystem varpi_projectors(const TheoryPtr& th) {
  const int twon = detail::theory_two_n(th);
  const int D = th->D, d = th->d;
  const int Dp = D - twon + 1;
  const int dp = Dp - d;
  const GradedScalar v = GradedScalar::v_power(th->ring, 1);
  const GradedScalar vinv = GradedScalar::v_power(th->ring, -1);
  VarpiSystem sys;
  for (int j = dp; j <= d; ++j) {
    QuadricClass left = qc_h_power(th, j) + v * qc_l(th, Dp - j);
    QuadricClass right = qc_l(th, j) + vinv * qc_h_power(th, Dp - j);
    if (j == d && D % 4 == 0) right = right + qc_h_power(th, d) + v * qc_l(th, dp);
    Correspondence p = kunneth(left, right);
    if (p.is_zero()) {
      sys.dropped.push_back(j);
    } else {
      sys.varpi.push_back(p);
      sys.kept.push_back(j);
    }
  }
  return sys;
}

// pi_i = (1/2) h^i x h^{D-i} for 0 <= i <= D, over a ring containing 1/2.
inline std::vector<Correspondence> rational_half_projectors(const TheoryPtr& th) {
  require(th->ring.has_half(), Errc::half_unavailable,
          "half-projectors need 1/2 in the coefficient ring");
  const GradedScalar half = GradedScalar::from_rational(th->ring, Rational(1, 2));
  std::vector<Correspondence> out;
  for (int i = 0; i <= th->D; ++i)
    out.push_back(half * kunneth(qc_h_power(th, i), qc_h_power(th, th->D - i)));
  return out;
}

namespace detail {

// Rank by fraction-free elimination; divisions by the previous pivot are
// exact over any integral domain.
inline int matrix_rank(const RingSpec& ring, ScalarMatrix a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  GradedScalar prev = GradedScalar::one(ring);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int s = rank; s < rows && piv < 0; ++s)
      if (!a[s][col].is_zero()) piv = s;
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        a[i][j] = exact_div(a[rank][col] * a[i][j] - a[i][col] * a[rank][j], prev);
      a[i][col] = GradedScalar::zero(ring);
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Rank of the realization over the fraction field of the coefficient ring.
inline int summand_rank(const Correspondence& p) {
  require(is_idempotent(p), Errc::not_idempotent, "summand_rank needs a projector");
  return detail::matrix_rank(p.th->ring, realize(p));
}

// Twist of a rank-one projector whose realization image is one homogeneous
// line. When v is invertible of degree -(k), twists are only defined modulo
// k and the representative in [0, k-1] is returned.
inline int classify_tate(const Correspondence& p) {
  require(is_idempotent(p), Errc::not_idempotent, "classify_tate needs a projector");
  const ScalarMatrix r = realize(p);
  const int B = p.th->basis_size();
  require(detail::matrix_rank(p.th->ring, r) == 1, Errc::not_tate,
          "realization has rank != 1");
  const int period =
      p.th->ring.has_v && p.th->ring.v_invertible ? -p.th->ring.v_degree : 0;
  std::optional<int> twist;
  for (int j = 0; j < B; ++j) {
    // Column j is a scalar multiple of the image generator; its codimension
    // equals the generator's up to the period.
    std::optional<int> col;
    for (int i = 0; i < B; ++i) {
      if (r[i][j].is_zero()) continue;
      auto sc = scalar_codim(r[i][j]);
      require(sc.has_value(), Errc::not_tate, "realization image is not homogeneous");
      const int tc = *sc + p.th->basis_codim(i);
      require(!col || *col == tc, Errc::not_tate, "realization image is not homogeneous");
      col = tc;
    }
    if (!col) continue;
    int t = *col;
    if (period > 0) t = ((t % period) + period) % period;
    require(!twist || *twist == t, Errc::not_tate, "realization image is not homogeneous");
    twist = t;
  }
  require(twist.has_value(), Errc::not_tate, "realization is zero");
  return *twist;
}

// Canonical rendering: terms ascending in the basis-index pair, formatted
// "(a x b)" with a leading "coeff * " for non-unit coefficients.
inline std::string corr_str(const Correspondence& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, s] : f.m) {
    if (!first) os << " + ";
    first = false;
    if (!s.is_one()) {
      if (s.terms.size() == 1)
        os << scalar_str(s) << " * ";
      else
        os << '(' << scalar_str(s) << ") * ";
    }
    os << '(' << f.th->basis_name(key.first) << " x " << f.th->basis_name(key.second) << ')';
  }
  return os.str();
}

}  // namespace mqk
