#pragma once

// Coefficient rings. A RingSpec is a base ring (F2, Z_(2), Q, Z) optionally
// extended by one graded generator v: base[v] or base[v^{±1}]. The generator
// carries a fixed integer degree (1-2^n for the n-th Morava theory, -1 for
// the multiplicative Bott-style unit); variables of series always have
// degree 1, so the codimension of v^a * monomial is a*v_degree + |monomial|.

#include <string>

#include "mqk/error.hpp"
#include "mqk/numeric.hpp"

namespace mqk {

enum class Base { F2, Zloc2, Q, Z };

inline const char* base_name(Base b) {
  switch (b) {
    case Base::F2: return "F2";
    case Base::Zloc2: return "Z(2)";
    case Base::Q: return "Q";
    case Base::Z: return "Z";
  }
  return "?";
}

struct RingSpec {
  Base base = Base::Z;
  bool has_v = false;
  int v_degree = 0;
  bool v_invertible = false;

  bool operator==(const RingSpec&) const = default;

  static RingSpec plain(Base b) { return RingSpec{b, false, 0, false}; }
  static RingSpec with_v(Base b, int degree, bool invertible) {
    return RingSpec{b, true, degree, invertible};
  }

  // Same v-structure, base enlarged to Q. Logarithms live here.
  RingSpec rationalized() const { return RingSpec{Base::Q, has_v, v_degree, v_invertible}; }

  bool has_half() const { return base == Base::Q; }

  std::string name() const {
    std::string s = base_name(base);
    if (has_v) s += v_invertible ? "[v^±1]" : "[v]";
    return s;
  }
};

// Membership test for base-ring values (represented as exact rationals).
inline bool base_value_ok(Base b, const Rational& r) {
  switch (b) {
    case Base::F2: return r == 0 || r == 1;
    case Base::Zloc2: return odd_denominator(r);
    case Base::Q: return true;
    case Base::Z: return is_integer(r);
  }
  return false;
}

// Canonical representative of r in base b; rejects values outside b.
inline Rational normalize_base(Base b, Rational r) {
  switch (b) {
    case Base::F2:
      require(odd_denominator(r), Errc::not_integral,
              "even denominator has no image in F2: " + rat_str(r));
      return Rational(mod2(r));
    case Base::Zloc2:
      require(odd_denominator(r), Errc::not_integral,
              "even denominator is not 2-integral: " + rat_str(r));
      return r;
    case Base::Q:
      return r;
    case Base::Z:
      require(is_integer(r), Errc::not_integral, "not an integer: " + rat_str(r));
      return r;
  }
  return r;
}

// Which coefficient maps exist. Maps out of Q and Z_(2) into smaller rings
// are partial: values are checked term by term (NotIntegral on failure).
inline bool has_base_map(Base from, Base to) {
  if (from == to) return true;
  switch (from) {
    case Base::Z: return true;
    case Base::Zloc2: return to == Base::Q || to == Base::F2;
    // Partial maps: defined on the subring of elements that satisfy the
    // target's membership test, rejected via NotIntegral otherwise.
    case Base::Q: return true;
    case Base::F2: return false;
  }
  return false;
}

inline Rational map_base(Base from, Base to, const Rational& r) {
  require(has_base_map(from, to),
          Errc::no_ring_map,
          std::string("no coefficient map ") + base_name(from) + " -> " + base_name(to));
  return normalize_base(to, r);
}

// Units of the base ring (needed for scalar inversion).
inline bool base_unit(Base b, const Rational& r) {
  if (r == 0) return false;
  switch (b) {
    case Base::F2: return r == 1;
    case Base::Zloc2: return is_odd(num(r));  // odd/odd
    case Base::Q: return true;
    case Base::Z: return r == 1 || r == -1;
  }
  return false;
}

}  // namespace mqk
