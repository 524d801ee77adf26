#include <algorithm>
#include <set>
#include <vector>

#include <mqk/weyl.hpp>

#include "test_util.hpp"

using namespace mqk;
using mqk::testutil::Rng;
using mqk::testutil::throws_code;

namespace {

RootDatum B(int l) { return make_root_datum(LieType::B, l); }
RootDatum D(int l) { return make_root_datum(LieType::D, l); }

SignedPerm random_element(Rng& rng, const RootDatum& rd) {
  std::vector<SignedPerm> all = enumerate_weyl(rd);
  return all[rng() % all.size()];
}

// The subgroup generated by the letters of theta, as a sorted set.
std::set<SignedPerm> subgroup(const RootDatum& rd, const std::vector<int>& theta) {
  std::set<SignedPerm> seen{sp_identity(rd.rank)};
  std::vector<SignedPerm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<SignedPerm> next;
    for (const SignedPerm& w : frontier)
      for (int i : theta) {
        SignedPerm ws = mult(w, simple_reflection(rd, i));
        if (seen.insert(ws).second) next.push_back(ws);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("group orders by enumeration") {
  CHECK(enumerate_weyl(B(2)).size() == 8u);
  CHECK(enumerate_weyl(B(3)).size() == 48u);
  CHECK(enumerate_weyl(B(4)).size() == 384u);
  CHECK(enumerate_weyl(D(3)).size() == 24u);
  CHECK(enumerate_weyl(D(4)).size() == 192u);
  for (const RootDatum& rd : {B(2), B(3), B(4), D(2), D(3), D(4)}) {
    std::vector<SignedPerm> all = enumerate_weyl(rd);
    CHECK(static_cast<long long>(all.size()) == weyl_order(rd));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("group axioms and the coordinate action") {
  Rng rng(2024);
  for (const RootDatum& rd : {B(3), D(4)}) {
    const SignedPerm e = sp_identity(rd.rank);
    for (int trial = 0; trial < 30; ++trial) {
      SignedPerm u = random_element(rng, rd);
      SignedPerm v = random_element(rng, rd);
      SignedPerm w = random_element(rng, rd);
      CHECK(mult(mult(u, v), w) == mult(u, mult(v, w)));
      CHECK(mult(u, sp_inverse(u)) == e);
      CHECK(mult(sp_inverse(u), u) == e);
      CHECK(mult(u, e) == u);
      std::vector<int> lam(rd.rank);
      for (int& c : lam) c = static_cast<int>(rng() % 7) - 3;
      CHECK(act(mult(u, v), lam) == act(u, act(v, lam)));
      CHECK(act(sp_inverse(u), act(u, lam)) == lam);
    }
  }
}

TEST_CASE("type D windows need an even number of sign changes") {
  SignedPerm odd{{-1, 2, 3, 4}};
  CHECK_THROWS_MATCHES(length(D(4), odd), Error, throws_code(Errc::bad_argument));
  // In type B the same window is the reflection in e_1, of length 2l - 1.
  CHECK(length(B(4), odd) == 7);
  CHECK(length(B(4), SignedPerm{{1, 2, 3, -4}}) == 1);
  SignedPerm bad{{1, 1}};
  CHECK_THROWS_MATCHES(length(B(2), bad), Error, throws_code(Errc::bad_argument));
}

TEST_CASE("cartan matrices and braid orders") {
  using M = std::vector<std::vector<int>>;
  CHECK(cartan_matrix(B(2)) == M{{2, -1}, {-2, 2}});
  CHECK(cartan_matrix(B(3)) == M{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  CHECK(cartan_matrix(D(4)) == M{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
  CHECK(braid_order(B(2), 1, 2) == 4);
  CHECK(braid_order(B(3), 1, 2) == 3);
  CHECK(braid_order(B(3), 2, 3) == 4);
  CHECK(braid_order(B(3), 1, 3) == 2);
  CHECK(braid_order(D(4), 2, 4) == 3);
  CHECK(braid_order(D(4), 3, 4) == 2);
}

TEST_CASE("simple reflections move exactly one positive root negative") {
  for (const RootDatum& rd : {B(2), B(3), B(4), D(3), D(4)})
    for (int i = 1; i <= rd.rank; ++i) {
      SignedPerm s = simple_reflection(rd, i);
      CHECK(length(rd, s) == 1);
      CHECK(mult(s, s) == sp_identity(rd.rank));
      std::vector<int> neg = simple_root(rd, i);
      for (int& c : neg) c = -c;
      CHECK(act(s, simple_root(rd, i)) == neg);
    }
}

TEST_CASE("reflections act by the coroot pairing") {
  for (const RootDatum& rd : {B(3), D(4)})
    for (int i = 1; i <= rd.rank; ++i) {
      Rng rng(77 * i);
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> lam(rd.rank);
        for (int& c : lam) c = static_cast<int>(rng() % 9) - 4;
        int pairing = pair_coroot(lam, simple_coroot(rd, i));
        std::vector<int> expect = lam;
        std::vector<int> alpha = simple_root(rd, i);
        for (int k = 0; k < rd.rank; ++k) expect[k] -= pairing * alpha[k];
        CHECK(act(simple_reflection(rd, i), lam) == expect);
      }
    }
}

TEST_CASE("lengths, reduced words, and lexicographic minimality") {
  for (const RootDatum& rd : {B(2), B(3), D(3)}) {
    for (const SignedPerm& w : enumerate_weyl(rd)) {
      std::vector<int> word = reduced_word(rd, w);
      CHECK(static_cast<int>(word.size()) == length(rd, w));
      CHECK(apply_word(rd, word) == w);
      CHECK(is_reduced(rd, word));
      // No reduced word is lexicographically smaller: peeling any strictly
      // smaller left descent first is impossible by construction.
      if (!word.empty())
        for (int i = 1; i < word[0]; ++i)
          CHECK(length(rd, mult(simple_reflection(rd, i), w)) == length(rd, w) + 1);
    }
  }
  CHECK_FALSE(is_reduced(B(2), {1, 1}));
  CHECK_FALSE(is_reduced(B(2), {2, 1, 2, 1, 2}));
  CHECK(is_reduced(B(2), {2, 1, 2, 1}));
  CHECK(reduced_word(B(2), longest_element(B(2))) == std::vector<int>{1, 2, 1, 2});
}

TEST_CASE("longest elements") {
  for (const RootDatum& rd : {B(2), B(3), B(4), D(3), D(4)}) {
    SignedPerm w0 = longest_element(rd);
    int max_len = 0;
    for (const SignedPerm& w : enumerate_weyl(rd)) max_len = std::max(max_len, length(rd, w));
    CHECK(length(rd, w0) == max_len);
    CHECK(static_cast<size_t>(max_len) == positive_roots(rd).size());
    CHECK(mult(w0, w0).is_identity());
    // w0 is the unique element of maximal length.
    int count = 0;
    for (const SignedPerm& w : enumerate_weyl(rd))
      if (length(rd, w) == max_len) ++count;
    CHECK(count == 1);
  }
  for (int l : {2, 3, 4}) {
    SignedPerm w0 = longest_element(B(l));
    for (int i = 0; i < l; ++i) CHECK(w0.win[i] == -(i + 1));
  }
  SignedPerm d4 = longest_element(D(4));
  for (int i = 0; i < 4; ++i) CHECK(d4.win[i] == -(i + 1));
  CHECK(longest_element(D(3)).win == std::vector<int>{-1, -2, 3});
}

TEST_CASE("minimal coset representatives and the product bijection") {
  CHECK(coset_min_reps(B(2), {2}).size() == 4u);
  CHECK(coset_min_reps(B(3), {2, 3}).size() == 6u);
  for (const RootDatum& rd : {B(2), B(3), D(4)}) {
    std::vector<int> all_idx(rd.rank);
    for (int i = 0; i < rd.rank; ++i) all_idx[i] = i + 1;
    CHECK(coset_min_reps(rd, all_idx).size() == 1u);
    CHECK(coset_min_reps(rd, all_idx)[0].is_identity());
    CHECK(coset_min_reps(rd, {}).size() == static_cast<size_t>(weyl_order(rd)));
    for (int mask = 0; mask < (1 << rd.rank); ++mask) {
      std::vector<int> theta;
      for (int i = 0; i < rd.rank; ++i)
        if ((mask >> i) & 1) theta.push_back(i + 1);
      std::vector<SignedPerm> reps = coset_min_reps(rd, theta);
      std::set<SignedPerm> sub = subgroup(rd, theta);
      CHECK(reps.size() * sub.size() == static_cast<size_t>(weyl_order(rd)));
      // Each w factors as u * v with u minimal, v in the subgroup, and
      // additive lengths; the factorization is unique.
      for (const SignedPerm& w : enumerate_weyl(rd)) {
        int hits = 0;
        for (const SignedPerm& u : reps) {
          SignedPerm v = mult(sp_inverse(u), w);
          if (sub.count(v)) {
            ++hits;
            CHECK(length(rd, w) == length(rd, u) + length(rd, v));
          }
        }
        CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("minimal representatives match the quadric cell count") {
  // Removing the first node leaves Theta = {2..l}; the quotient then
  // counts the 2l cells of a split quadric of dimension 2l - 1 (type B)
  // or 2l - 2 (type D).
  for (int l : {2, 3, 4}) {
    std::vector<int> theta;
    for (int i = 2; i <= l; ++i) theta.push_back(i);
    CHECK(coset_min_reps(B(l), theta).size() == static_cast<size_t>(2 * l));
    if (l >= 3) CHECK(coset_min_reps(D(l), theta).size() == static_cast<size_t>(2 * l));
  }
}

TEST_CASE("window printing") {
  CHECK(sp_str(longest_element(B(2))) == "[-1,-2]");
  CHECK(sp_str(sp_identity(3)) == "[1,2,3]");
  CHECK(sp_str(simple_reflection(D(4), 4)) == "[1,2,-4,-3]");
}
