#pragma once

// Truncated multivariate power series with GradedScalar coefficients.
// Truncation is by total degree in the series variables only: terms of
// total degree <= trunc are stored, everything above is unknown (not zero).
// The generator v inside coefficients is never truncated. Binary operations
// demand identical rings, variable counts and truncation orders; callers
// widen or truncate explicitly.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mqk/error.hpp"
#include "mqk/graded_scalar.hpp"

namespace mqk {

using Exps = std::vector<int>;

inline int total_degree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lexicographic order: total degree first, then lex on exponents.
struct GradedLexLess {
  bool operator()(const Exps& a, const Exps& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

struct TruncSeries {
  RingSpec ring;
  int nvars = 1;
  int trunc = 0;
  std::map<Exps, GradedScalar, GradedLexLess> terms;  // no zero values stored

  static TruncSeries zero(const RingSpec& r, int nvars, int trunc) {
    require(nvars >= 0 && trunc >= 0, Errc::bad_argument, "nvars and trunc must be >= 0");
    return TruncSeries{r, nvars, trunc, {}};
  }

  static TruncSeries constant(const RingSpec& r, int nvars, int trunc, const GradedScalar& c) {
    TruncSeries s = zero(r, nvars, trunc);
    s.add_term(Exps(nvars, 0), c);
    return s;
  }

  static TruncSeries constant(const RingSpec& r, int nvars, int trunc, const Rational& c) {
    return constant(r, nvars, trunc, GradedScalar::from_rational(r, c));
  }

  // Variable x_{i+1} (0-based index i).
  static TruncSeries var(const RingSpec& r, int nvars, int trunc, int i) {
    require(0 <= i && i < nvars, Errc::bad_argument, "variable index out of range");
    TruncSeries s = zero(r, nvars, trunc);
    Exps e(nvars, 0);
    e[i] = 1;
    s.add_term(e, GradedScalar::one(r));
    return s;
  }

  void add_term(const Exps& e, const GradedScalar& c) {
    require(static_cast<int>(e.size()) == nvars, Errc::bad_argument, "exponent arity mismatch");
    check_same_ring(c.ring, ring);
    for (int x : e) require(x >= 0, Errc::bad_argument, "negative variable exponent");
    if (total_degree(e) > trunc || c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }

  void add_term(const Exps& e, const Rational& c) {
    add_term(e, GradedScalar::from_rational(ring, c));
  }

  bool is_zero() const { return terms.empty(); }

  GradedScalar coeff(const Exps& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? GradedScalar::zero(ring) : it->second;
  }

  GradedScalar constant_term() const { return coeff(Exps(nvars, 0)); }

  // Minimal total degree of a stored term; zero series reports trunc + 1.
  int order() const {
    if (terms.empty()) return trunc + 1;
    return total_degree(terms.begin()->first);
  }

  bool operator==(const TruncSeries& o) const {
    return ring == o.ring && nvars == o.nvars && trunc == o.trunc && terms == o.terms;
  }
};

inline void check_compatible(const TruncSeries& a, const TruncSeries& b) {
  check_same_ring(a.ring, b.ring);
  require(a.nvars == b.nvars, Errc::bad_argument, "variable count mismatch");
  require(a.trunc == b.trunc, Errc::trunc_mismatch, "truncation orders differ");
}

inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  check_compatible(a, b);
  TruncSeries r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

inline TruncSeries operator-(const TruncSeries& a) {
  TruncSeries r = TruncSeries::zero(a.ring, a.nvars, a.trunc);
  for (const auto& [e, c] : a.terms) r.add_term(e, -c);
  return r;
}

inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  check_compatible(a, b);
  TruncSeries r = TruncSeries::zero(a.ring, a.nvars, a.trunc);
  for (const auto& [ea, ca] : a.terms) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms) {
      if (da + total_degree(eb) > a.trunc) continue;
      Exps e(a.nvars);
      for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

inline TruncSeries operator*(const GradedScalar& c, const TruncSeries& a) {
  check_same_ring(c.ring, a.ring);
  TruncSeries r = TruncSeries::zero(a.ring, a.nvars, a.trunc);
  for (const auto& [e, ac] : a.terms) r.add_term(e, c * ac);
  return r;
}

inline TruncSeries& operator+=(TruncSeries& a, const TruncSeries& b) { return a = a + b; }
inline TruncSeries& operator-=(TruncSeries& a, const TruncSeries& b) { return a = a - b; }
inline TruncSeries& operator*=(TruncSeries& a, const TruncSeries& b) { return a = a * b; }

inline TruncSeries truncate(const TruncSeries& a, int new_trunc) {
  require(new_trunc <= a.trunc, Errc::trunc_mismatch, "cannot widen a truncated series");
  TruncSeries r = TruncSeries::zero(a.ring, a.nvars, new_trunc);
  for (const auto& [e, c] : a.terms) r.add_term(e, c);
  return r;
}

// Homogeneous part of total degree k, kept at the same truncation.
inline TruncSeries homogeneous_part(const TruncSeries& a, int k) {
  TruncSeries r = TruncSeries::zero(a.ring, a.nvars, a.trunc);
  for (const auto& [e, c] : a.terms)
    if (total_degree(e) == k) r.add_term(e, c);
  return r;
}

// Codimension when homogeneous (variables have degree 1, v its ring degree).
inline std::optional<int> series_codim(const TruncSeries& a) {
  std::optional<int> codim;
  for (const auto& [e, c] : a.terms) {
    auto sc = scalar_codim(c);
    if (!sc) return std::nullopt;
    const int tc = *sc + total_degree(e);
    if (codim && *codim != tc) return std::nullopt;
    codim = tc;
  }
  return a.is_zero() ? std::optional<int>(0) : codim;
}

inline bool series_homogeneous(const TruncSeries& a) {
  return a.is_zero() || series_codim(a).has_value();
}

// Substitution f(args[0], ..., args[k-1]) where f has k variables. All args
// share one ring/arity/truncation and have zero constant term; f may have a
// constant term and must be known at least to the args' truncation.
inline TruncSeries series_substitute(const TruncSeries& f, const std::vector<TruncSeries>& args) {
  require(!args.empty(), Errc::bad_argument, "substitution needs at least one argument");
  require(static_cast<int>(args.size()) == f.nvars, Errc::bad_argument,
          "substitution arity mismatch");
  const TruncSeries& a0 = args.front();
  for (const auto& a : args) {
    check_compatible(a0, a);
    check_same_ring(a.ring, f.ring);
    require(a.constant_term().is_zero(), Errc::bad_argument,
            "substituted series must have zero constant term");
  }
  require(f.trunc >= a0.trunc, Errc::trunc_mismatch,
          "outer series truncated below the requested precision");
  const int T = a0.trunc;
  TruncSeries result = TruncSeries::zero(a0.ring, a0.nvars, T);
  // pow[i][k] = args[i]^k, built on demand.
  std::vector<std::vector<TruncSeries>> pow(args.size());
  for (size_t i = 0; i < args.size(); ++i)
    pow[i].push_back(TruncSeries::constant(a0.ring, a0.nvars, T, Rational(1)));
  auto power = [&](size_t i, int k) -> const TruncSeries& {
    while (static_cast<int>(pow[i].size()) <= k) pow[i].push_back(pow[i].back() * args[i]);
    return pow[i][k];
  };
  for (const auto& [e, c] : f.terms) {
    // Each args[i] has order >= 1, so degree-e terms of f contribute only
    // when the total degree fits under the truncation.
    if (total_degree(e) > T) continue;
    TruncSeries term = TruncSeries::constant(a0.ring, a0.nvars, T, Rational(1));
    for (int i = 0; i < f.nvars; ++i)
      if (e[i] > 0) term *= power(i, e[i]);
    result += c * term;
  }
  return result;
}

namespace detail {

// Exact division of homogeneous polynomials (same total degree difference),
// by long division on the graded-lex greatest terms. Single-divisor long
// division finds the quotient whenever one exists over the ring.
inline TruncSeries divide_homogeneous(const TruncSeries& num, const TruncSeries& den) {
  TruncSeries q = TruncSeries::zero(num.ring, num.nvars, num.trunc);
  TruncSeries rem = num;
  const auto& dlead = *den.terms.rbegin();  // graded-lex greatest term
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms.rbegin();
    Exps qe(num.nvars);
    for (int i = 0; i < num.nvars; ++i) {
      qe[i] = rlead.first[i] - dlead.first[i];
      if (qe[i] < 0) fail(Errc::non_divisible, "monomial not divisible by divisor lead");
    }
    GradedScalar qc = exact_div(rlead.second, dlead.second);
    TruncSeries t = TruncSeries::zero(num.ring, num.nvars, num.trunc);
    t.add_term(qe, qc);
    q += t;
    rem -= t * den;
  }
  return q;
}

}  // namespace detail

// Exact division of series. The quotient is returned at truncation
// num.trunc - order(den): beyond that the quotient is not determined by the
// known part of the numerator. Exactness is verified by re-multiplication.
inline TruncSeries series_exact_div(const TruncSeries& num, const TruncSeries& den) {
  check_compatible(num, den);
  require(!den.is_zero(), Errc::non_divisible, "division by zero series");
  const int r = den.order();
  const int qtrunc = num.trunc - r;
  require(qtrunc >= 0, Errc::non_divisible, "divisor order exceeds numerator truncation");
  if (num.is_zero()) return TruncSeries::zero(num.ring, num.nvars, qtrunc);
  if (num.order() < r) fail(Errc::non_divisible, "numerator order below divisor order");
  const TruncSeries dlow = homogeneous_part(den, r);
  // Solve den * q = num degree by degree: the degree-k part of q satisfies
  // dlow * q_k = num_{k+r} - sum_{j<k} den_{k+r-j} * q_j.
  std::vector<TruncSeries> qparts;
  TruncSeries q = TruncSeries::zero(num.ring, num.nvars, num.trunc);
  for (int k = 0; k <= qtrunc; ++k) {
    TruncSeries target = homogeneous_part(num, k + r);
    for (int j = 0; j < k; ++j)
      target -= homogeneous_part(homogeneous_part(den, k + r - j) * qparts[j], k + r);
    qparts.push_back(detail::divide_homogeneous(target, dlow));
    q += qparts.back();
  }
  // Verify: den * q must reproduce num through its full known precision.
  require(truncate(den * q, num.trunc) == num, Errc::non_divisible,
          "inexact quotient past the divisor's lowest form");
  return truncate(q, qtrunc);
}

inline TruncSeries reduce_coefficients(const TruncSeries& a, const RingSpec& target) {
  TruncSeries r = TruncSeries::zero(target, a.nvars, a.trunc);
  for (const auto& [e, c] : a.terms) r.add_term(e, reduce_scalar(c, target));
  return r;
}

// ---- canonical text form ------------------------------------------------
//
// One line per (monomial, v-exponent) pair in graded-lex monomial order,
// v-exponents ascending within a monomial:
//   <rational> [* v[^a]] [* x1[^e1] x2[^e2] ...]
// The zero series prints a single "0".

inline std::string monomial_str(const Exps& e) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << 'x' << (i + 1);
    if (e[i] > 1) os << '^' << e[i];
  }
  return os.str();
}

inline std::string series_str(const TruncSeries& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first_line = true;
  for (const auto& [e, c] : a.terms) {
    for (const auto& [vexp, coeff] : c.terms) {
      if (!first_line) os << '\n';
      first_line = false;
      os << rat_str(coeff);
      if (vexp != 0) {
        os << " * v";
        if (vexp != 1) os << '^' << vexp;
      }
      const std::string mon = monomial_str(e);
      if (!mon.empty()) os << " * " << mon;
    }
  }
  return os.str();
}

// Parser for the canonical form plus '+'/'-' separated one-line input.
inline TruncSeries parse_series(const std::string& text, const RingSpec& ring, int nvars,
                                int trunc) {
  TruncSeries out = TruncSeries::zero(ring, nvars, trunc);
  // Split into signed terms on newlines and top-level +/-.
  std::vector<std::pair<int, std::string>> items;  // sign, body
  std::string cur;
  int sign = 1;
  auto flush = [&]() {
    // Whitespace separates factors exactly like '*' does.
    std::string t;
    for (char ch : cur) t += isspace(static_cast<unsigned char>(ch)) ? '*' : ch;
    if (t.find_first_not_of('*') != std::string::npos) items.emplace_back(sign, t);
    cur.clear();
  };
  for (size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '\n' || ch == '+') {
      flush();
      sign = 1;
      continue;
    }
    if (ch == '-') {
      // A minus starts a new term unless it spells a negative exponent.
      char prev = 0;
      for (size_t j = i; j > 0; --j) {
        if (!isspace(static_cast<unsigned char>(text[j - 1]))) {
          prev = text[j - 1];
          break;
        }
      }
      if (prev == '^') {
        cur += ch;
      } else {
        flush();
        sign = -1;
      }
      continue;
    }
    cur += ch;
  }
  flush();
  require(!items.empty(), Errc::bad_argument, "empty series text");
  for (const auto& [sgn, body] : items) {
    Rational coeff(sgn);
    int vexp = 0;
    Exps e(nvars, 0);
    size_t pos = 0;
    bool saw_factor = false;
    while (pos < body.size()) {
      size_t next = body.find('*', pos);
      std::string f = body.substr(pos, next == std::string::npos ? next : next - pos);
      pos = next == std::string::npos ? body.size() : next + 1;
      if (f.empty()) continue;
      saw_factor = true;
      auto to_int = [&](const std::string& s) {
        require(!s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) ==
                                  std::string::npos,
                Errc::bad_argument, "bad factor: " + f);
        return std::stoi(s);
      };
      if (f[0] == 'v') {
        int a = 1;
        if (f.size() > 1) {
          require(f[1] == '^', Errc::bad_argument, "bad factor: " + f);
          a = to_int(f.substr(2));
        }
        vexp += a;
      } else if (f[0] == 'x') {
        size_t caret = f.find('^');
        const std::string idx = f.substr(1, caret == std::string::npos ? caret : caret - 1);
        const int i = to_int(idx) - 1;
        require(0 <= i && i < nvars, Errc::bad_argument, "variable out of range: " + f);
        e[i] += caret == std::string::npos ? 1 : to_int(f.substr(caret + 1));
      } else {
        size_t slash = f.find('/');
        if (slash == std::string::npos)
          coeff *= Rational(Int(f));
        else
          coeff *= Rational(Int(f.substr(0, slash)), Int(f.substr(slash + 1)));
      }
    }
    require(saw_factor, Errc::bad_argument, "empty term in series text");
    if (total_degree(e) > trunc)
      fail(Errc::bad_argument, "term exceeds truncation: " + body);
    out.add_term(e, GradedScalar::v_power(ring, vexp, coeff));
  }
  return out;
}

}  // namespace mqk
