#pragma once

// Graded coefficient scalars: finite Laurent polynomials in the ring
// generator v with base-ring coefficients, i.e. elements of base[v] or
// base[v^{±1}]. For rings without v only the exponent-0 term may appear.
// Invariants: no explicitly stored zero coefficients; every coefficient is
// a canonical member of the base ring; negative exponents only when v is
// invertible.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "mqk/error.hpp"
#include "mqk/numeric.hpp"
#include "mqk/ring.hpp"

namespace mqk {

struct GradedScalar {
  RingSpec ring;
  std::map<int, Rational> terms;  // v-exponent -> nonzero coefficient

  static GradedScalar zero(const RingSpec& r) { return GradedScalar{r, {}}; }
  static GradedScalar one(const RingSpec& r) { return from_rational(r, 1); }

  static GradedScalar from_rational(const RingSpec& r, const Rational& c) {
    GradedScalar s{r, {}};
    s.add_term(0, c);
    return s;
  }

  static GradedScalar v_power(const RingSpec& r, int exp, const Rational& c = Rational(1)) {
    GradedScalar s{r, {}};
    s.add_term(exp, c);
    return s;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_one() const { return terms.size() == 1 && terms.count(0) && terms.at(0) == 1; }

  void add_term(int exp, const Rational& c) {
    if (exp != 0) {
      require(ring.has_v, Errc::bad_argument, "scalar ring has no generator v");
      require(exp > 0 || ring.v_invertible, Errc::bad_argument,
              "negative v-exponent over a non-invertible ring");
    }
    Rational nc = normalize_base(ring.base, c);
    if (nc == 0) return;
    auto it = terms.find(exp);
    if (it == terms.end()) {
      terms.emplace(exp, nc);
      return;
    }
    Rational sum = normalize_base(ring.base, it->second + nc);
    if (sum == 0)
      terms.erase(it);
    else
      it->second = sum;
  }

  bool operator==(const GradedScalar& o) const { return ring == o.ring && terms == o.terms; }
};

inline void check_same_ring(const RingSpec& a, const RingSpec& b) {
  require(a == b, Errc::ring_mismatch, "scalars over " + a.name() + " vs " + b.name());
}

inline GradedScalar operator+(const GradedScalar& a, const GradedScalar& b) {
  check_same_ring(a.ring, b.ring);
  GradedScalar r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

inline GradedScalar operator-(const GradedScalar& a) {
  GradedScalar r{a.ring, {}};
  for (const auto& [e, c] : a.terms) r.add_term(e, -c);
  return r;
}

inline GradedScalar operator-(const GradedScalar& a, const GradedScalar& b) { return a + (-b); }

inline GradedScalar operator*(const GradedScalar& a, const GradedScalar& b) {
  check_same_ring(a.ring, b.ring);
  GradedScalar r{a.ring, {}};
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) r.add_term(ea + eb, ca * cb);
  return r;
}

inline GradedScalar& operator+=(GradedScalar& a, const GradedScalar& b) { return a = a + b; }
inline GradedScalar& operator-=(GradedScalar& a, const GradedScalar& b) { return a = a - b; }
inline GradedScalar& operator*=(GradedScalar& a, const GradedScalar& b) { return a = a * b; }

// Codimension of the term v^e is e * v_degree.
inline int term_codim(const RingSpec& ring, int v_exp) { return v_exp * ring.v_degree; }

// Codimension when all terms agree (zero is homogeneous of every codimension).
inline std::optional<int> scalar_codim(const GradedScalar& a) {
  std::optional<int> c;
  for (const auto& [e, _] : a.terms) {
    int tc = term_codim(a.ring, e);
    if (c && *c != tc) return std::nullopt;
    c = tc;
  }
  return a.is_zero() ? std::optional<int>(0) : c;
}

inline bool scalar_homogeneous(const GradedScalar& a) {
  return a.is_zero() || scalar_codim(a).has_value();
}

// Units are monomials u*v^k with u a base-ring unit (k = 0 unless v invertible).
inline bool is_unit(const GradedScalar& a) {
  if (a.terms.size() != 1) return false;
  const auto& [e, c] = *a.terms.begin();
  if (e != 0 && !a.ring.v_invertible) return false;
  return base_unit(a.ring.base, c);
}

inline GradedScalar inverse(const GradedScalar& a) {
  require(!a.is_zero(), Errc::non_divisible, "inverse of zero");
  require(a.terms.size() == 1, Errc::non_divisible, "inverse of a non-monomial scalar");
  const auto& [e, c] = *a.terms.begin();
  require(e == 0 || a.ring.v_invertible, Errc::non_divisible,
          "v is not invertible in " + a.ring.name());
  require(base_unit(a.ring.base, c), Errc::not_integral,
          "coefficient " + rat_str(c) + " is not a unit in " + std::string(base_name(a.ring.base)));
  return GradedScalar::v_power(a.ring, -e, Rational(1) / c);
}

// Exact division of Laurent polynomials in v; NonDivisible when no quotient
// exists over the ring (including coefficient-level failures).
inline GradedScalar exact_div(const GradedScalar& a, const GradedScalar& b) {
  check_same_ring(a.ring, b.ring);
  require(!b.is_zero(), Errc::non_divisible, "division by zero scalar");
  if (a.is_zero()) return GradedScalar::zero(a.ring);
  const int amin = a.terms.begin()->first, bmin = b.terms.begin()->first;
  const int shift = amin - bmin;  // lowest exponent of the quotient
  if (shift < 0 && !a.ring.v_invertible)
    fail(Errc::non_divisible, "quotient needs negative v-exponents");
  // Long division by ascending exponents; an exact quotient has top
  // exponent amax - bmax, so running past that proves non-divisibility.
  GradedScalar rem = a;
  GradedScalar q = GradedScalar::zero(a.ring);
  const Rational blead = b.terms.begin()->second;
  const int qmax = a.terms.rbegin()->first - b.terms.rbegin()->first;
  while (!rem.is_zero()) {
    const int re = rem.terms.begin()->first;
    const Rational rc = rem.terms.begin()->second;
    const int qe = re - bmin;
    if (qe > qmax) fail(Errc::non_divisible, "remainder after scalar division");
    if (qe < 0 && !a.ring.v_invertible)
      fail(Errc::non_divisible, "quotient needs negative v-exponents");
    Rational qc = rc / blead;
    if (!base_value_ok(a.ring.base, qc)) fail(Errc::non_divisible, "coefficient not divisible");
    GradedScalar t = GradedScalar::v_power(a.ring, qe, qc);
    q += t;
    rem -= t * b;
  }
  return q;
}

inline GradedScalar reduce_scalar(const GradedScalar& a, const RingSpec& target) {
  require(a.ring.has_v == target.has_v || !a.ring.has_v, Errc::no_ring_map,
          "cannot introduce or drop the generator v");
  if (a.ring.has_v) {
    require(a.ring.v_degree == target.v_degree, Errc::no_ring_map, "v-degree mismatch");
  }
  GradedScalar r{target, {}};
  for (const auto& [e, c] : a.terms) {
    if (e < 0 && !target.v_invertible)
      fail(Errc::not_integral, "negative v-exponent outside " + target.name());
    r.add_term(e, map_base(a.ring.base, target.base, c));
  }
  return r;
}

// "2 + v", "v^-1", "-3/2*v^4"; zero prints "0". Exponents ascending.
inline std::string scalar_str(const GradedScalar& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.terms) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << rat_str(c);
    } else {
      if (c == -1)
        os << '-';
      else if (c != 1)
        os << rat_str(c) << '*';
      os << 'v';
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

}  // namespace mqk
