#pragma once
// Weyl groups of types B and D realized as signed permutations: lengths,
// lexicographically minimal reduced words, longest elements, and minimal
// coset representatives, all over the coordinate lattice Z^l.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace mqk {

enum class LieType { B, D };

inline const char* lie_type_name(LieType t) { return t == LieType::B ? "B" : "D"; }

// Window notation: win[i-1] is the signed image of i, so win = {2, -1}
// sends e_1 to e_2 and e_2 to -e_1.
struct SignedPerm {
  std::vector<int> win;

  int rank() const { return static_cast<int>(win.size()); }

  // Signed image of the signed index j (j nonzero, |j| <= rank).
  int of(int j) const { return j > 0 ? win[j - 1] : -win[-j - 1]; }

  bool is_identity() const {
    for (int i = 0; i < rank(); ++i)
      if (win[i] != i + 1) return false;
    return true;
  }

  int negative_count() const {
    return static_cast<int>(std::count_if(win.begin(), win.end(), [](int a) { return a < 0; }));
  }
};

inline bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.win == b.win; }
inline bool operator!=(const SignedPerm& a, const SignedPerm& b) { return !(a == b); }
inline bool operator<(const SignedPerm& a, const SignedPerm& b) { return a.win < b.win; }

inline SignedPerm sp_identity(int l) {
  SignedPerm w;
  w.win.resize(l);
  std::iota(w.win.begin(), w.win.end(), 1);
  return w;
}

inline void check_signed_perm(const SignedPerm& w) {
  const int l = w.rank();
  std::vector<bool> seen(l, false);
  for (int a : w.win) {
    int m = a < 0 ? -a : a;
    require(m >= 1 && m <= l && !seen[m - 1], Errc::bad_argument,
            "window is not a signed permutation");
    seen[m - 1] = true;
  }
}

// Composition of functions: (u * v)(i) = u(v(i)).
inline SignedPerm mult(const SignedPerm& u, const SignedPerm& v) {
  require(u.rank() == v.rank(), Errc::bad_argument, "rank mismatch");
  SignedPerm w;
  w.win.reserve(u.rank());
  for (int a : v.win) w.win.push_back(u.of(a));
  return w;
}

inline SignedPerm sp_inverse(const SignedPerm& w) {
  SignedPerm inv;
  inv.win.resize(w.rank());
  for (int i = 1; i <= w.rank(); ++i) {
    int a = w.win[i - 1];
    if (a > 0)
      inv.win[a - 1] = i;
    else
      inv.win[-a - 1] = -i;
  }
  return inv;
}

// Coordinate action: w sends e_i to sign(w(i)) * e_{|w(i)|}.
inline std::vector<int> act(const SignedPerm& w, const std::vector<int>& lam) {
  require(static_cast<int>(lam.size()) == w.rank(), Errc::bad_argument, "weight rank mismatch");
  std::vector<int> out(lam.size(), 0);
  for (int i = 0; i < w.rank(); ++i) {
    int a = w.win[i];
    out[(a < 0 ? -a : a) - 1] = (a < 0 ? -lam[i] : lam[i]);
  }
  return out;
}

struct RootDatum {
  LieType type;
  int rank;
};

inline RootDatum make_root_datum(LieType type, int rank) {
  require(rank >= 2, Errc::bad_argument, "rank must be at least 2");
  return RootDatum{type, rank};
}

// alpha_i = e_i - e_{i+1} for i < l; alpha_l = e_l (B) or e_{l-1} + e_l (D).
inline std::vector<int> simple_root(const RootDatum& rd, int i) {
  require(i >= 1 && i <= rd.rank, Errc::bad_argument, "simple root index out of range");
  std::vector<int> a(rd.rank, 0);
  if (i < rd.rank) {
    a[i - 1] = 1;
    a[i] = -1;
  } else if (rd.type == LieType::B) {
    a[rd.rank - 1] = 1;
  } else {
    a[rd.rank - 2] = 1;
    a[rd.rank - 1] = 1;
  }
  return a;
}

// alpha^v = 2 alpha / (alpha, alpha): doubles only the short root e_l of B.
inline std::vector<int> simple_coroot(const RootDatum& rd, int i) {
  std::vector<int> a = simple_root(rd, i);
  if (rd.type == LieType::B && i == rd.rank)
    for (int& c : a) c *= 2;
  return a;
}

inline int pair_coroot(const std::vector<int>& lam, const std::vector<int>& coroot) {
  require(lam.size() == coroot.size(), Errc::bad_argument, "pairing rank mismatch");
  int s = 0;
  for (size_t i = 0; i < lam.size(); ++i) s += lam[i] * coroot[i];
  return s;
}

// A[i-1][j-1] = <alpha_j, alpha_i^v>.
inline std::vector<std::vector<int>> cartan_matrix(const RootDatum& rd) {
  std::vector<std::vector<int>> a(rd.rank, std::vector<int>(rd.rank, 0));
  for (int i = 1; i <= rd.rank; ++i)
    for (int j = 1; j <= rd.rank; ++j)
      a[i - 1][j - 1] = pair_coroot(simple_root(rd, j), simple_coroot(rd, i));
  return a;
}

// Order of s_i s_j, read off the Cartan product: 0 -> 2, 1 -> 3, 2 -> 4.
inline int braid_order(const RootDatum& rd, int i, int j) {
  require(i != j, Errc::bad_argument, "braid order needs distinct indices");
  const auto a = cartan_matrix(rd);
  switch (a[i - 1][j - 1] * a[j - 1][i - 1]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  fail(Errc::bad_argument, "unrecognized Cartan product");
}

inline SignedPerm simple_reflection(const RootDatum& rd, int i) {
  require(i >= 1 && i <= rd.rank, Errc::bad_argument, "simple reflection index out of range");
  SignedPerm s = sp_identity(rd.rank);
  if (i < rd.rank) {
    std::swap(s.win[i - 1], s.win[i]);
  } else if (rd.type == LieType::B) {
    s.win[rd.rank - 1] = -rd.rank;
  } else {
    s.win[rd.rank - 2] = -rd.rank;
    s.win[rd.rank - 1] = -(rd.rank - 1);
  }
  return s;
}

inline void check_in_group(const RootDatum& rd, const SignedPerm& w) {
  require(w.rank() == rd.rank, Errc::bad_argument, "rank mismatch");
  check_signed_perm(w);
  if (rd.type == LieType::D)
    require(w.negative_count() % 2 == 0, Errc::bad_argument,
            "type D requires an even number of sign changes");
}

// e_i - e_j and e_i + e_j for i < j, plus e_i for type B.
inline std::vector<std::vector<int>> positive_roots(const RootDatum& rd) {
  std::vector<std::vector<int>> roots;
  const int l = rd.rank;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      std::vector<int> m(l, 0), p(l, 0);
      m[i] = 1;
      m[j] = -1;
      p[i] = 1;
      p[j] = 1;
      roots.push_back(m);
      roots.push_back(p);
    }
  if (rd.type == LieType::B)
    for (int i = 0; i < l; ++i) {
      std::vector<int> e(l, 0);
      e[i] = 1;
      roots.push_back(e);
    }
  return roots;
}

inline bool vec_positive(const std::vector<int>& v) {
  for (int c : v) {
    if (c > 0) return true;
    if (c < 0) return false;
  }
  return false;
}

inline int length(const RootDatum& rd, const SignedPerm& w) {
  check_in_group(rd, w);
  int n = 0;
  for (const auto& r : positive_roots(rd))
    if (!vec_positive(act(w, r))) ++n;
  return n;
}

// Product s_{word[0]} s_{word[1]} ... s_{word[k-1]}.
inline SignedPerm apply_word(const RootDatum& rd, const std::vector<int>& word) {
  SignedPerm w = sp_identity(rd.rank);
  for (int i : word) w = mult(w, simple_reflection(rd, i));
  return w;
}

// Lexicographically smallest reduced word: peel the smallest left descent
// (the i with w^{-1}(alpha_i) negative) until the identity remains.
inline std::vector<int> reduced_word(const RootDatum& rd, const SignedPerm& w0) {
  check_in_group(rd, w0);
  SignedPerm w = w0;
  std::vector<int> word;
  while (!w.is_identity()) {
    SignedPerm inv = sp_inverse(w);
    int pick = 0;
    for (int i = 1; i <= rd.rank; ++i)
      if (!vec_positive(act(inv, simple_root(rd, i)))) {
        pick = i;
        break;
      }
    require(pick != 0, Errc::precondition, "non-identity element with no descent");
    word.push_back(pick);
    w = mult(simple_reflection(rd, pick), w);
  }
  return word;
}

inline bool is_reduced(const RootDatum& rd, const std::vector<int>& word) {
  return length(rd, apply_word(rd, word)) == static_cast<int>(word.size());
}

// Greedy ascent from the identity; each step multiplies by the smallest
// simple reflection that still increases length.
inline SignedPerm longest_element(const RootDatum& rd) {
  SignedPerm w = sp_identity(rd.rank);
  for (;;) {
    int pick = 0;
    for (int i = 1; i <= rd.rank; ++i)
      if (vec_positive(act(w, simple_root(rd, i)))) {
        pick = i;
        break;
      }
    if (pick == 0) return w;
    w = mult(w, simple_reflection(rd, pick));
  }
}

inline long long weyl_order(const RootDatum& rd) {
  long long n = 1;
  for (int i = 2; i <= rd.rank; ++i) n *= i;
  for (int i = 0; i < (rd.type == LieType::B ? rd.rank : rd.rank - 1); ++i) n *= 2;
  return n;
}

// All elements, sorted by window. Signs run over all masks for B and over
// the even masks for D.
inline std::vector<SignedPerm> enumerate_weyl(const RootDatum& rd) {
  const int l = rd.rank;
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SignedPerm> out;
  do {
    for (int mask = 0; mask < (1 << l); ++mask) {
      int bits = 0;
      for (int i = 0; i < l; ++i) bits += (mask >> i) & 1;
      if (rd.type == LieType::D && bits % 2 != 0) continue;
      SignedPerm w;
      w.win.resize(l);
      for (int i = 0; i < l; ++i) w.win[i] = ((mask >> i) & 1) ? -perm[i] : perm[i];
      out.push_back(w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Minimal representatives of W / W_Theta: the v with v(alpha_i) positive
// for every i in Theta.
inline std::vector<SignedPerm> coset_min_reps(const RootDatum& rd, const std::vector<int>& theta) {
  for (int i : theta)
    require(i >= 1 && i <= rd.rank, Errc::bad_argument, "subset index out of range");
  std::vector<SignedPerm> out;
  for (const SignedPerm& w : enumerate_weyl(rd)) {
    bool min = true;
    for (int i : theta)
      if (!vec_positive(act(w, simple_root(rd, i)))) {
        min = false;
        break;
      }
    if (min) out.push_back(w);
  }
  return out;
}

inline std::string sp_str(const SignedPerm& w) {
  std::string s = "[";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.win[i]);
  }
  return s + "]";
}

}  // namespace mqk
