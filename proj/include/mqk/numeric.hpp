#pragma once

// Exact integer and rational arithmetic used throughout the library.
// cpp_int/cpp_rational are header-only and arbitrary precision; rationals
// are kept reduced with positive denominator by boost itself.

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace mqk {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline bool is_odd(const Int& n) { return n % 2 != 0; }

inline bool odd_denominator(const Rational& r) { return is_odd(den(r)); }

// Value mod 2 of a 2-integral rational: a/b with b odd reduces to a mod 2.
inline int mod2(const Rational& r) { return is_odd(num(r)) ? 1 : 0; }

inline Int pow_int(Int base, unsigned exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

inline std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << num(r);
  if (den(r) != 1) os << '/' << den(r);
  return os.str();
}

}  // namespace mqk
