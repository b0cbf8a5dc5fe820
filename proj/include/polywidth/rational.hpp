#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "polywidth/error.hpp"

namespace polywidth {

using Rational = mpq_class;
using Point = std::vector<Rational>;
using IntVec = std::vector<std::int64_t>;

/// Parses "p/q" or "p" (optional sign). Decimal notation is rejected: every
/// value entering the library must be exact.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorKind::Usage, "not an exact rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class p(n, 10), q(std::string(den), 10);
  if (q == 0) throw Error(ErrorKind::Usage, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// p/q in lowest terms; q > 0.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Canonical "p/q" form; integers print without a denominator.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational pow(Rational base, unsigned long e) {
  Rational out = 1;
  for (; e > 0; e >>= 1, base *= base)
    if (e & 1) out *= base;
  return out;
}

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Rational dot(const IntVec& u, const Point& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) s += Rational(static_cast<long>(u[i])) * x[i];
  return s;
}

inline std::int64_t gcd_of(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

inline bool is_primitive(const IntVec& v) { return gcd_of(v) == 1; }

inline IntVec primitive(IntVec v) {
  const auto g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// Scales a rational direction to the unique primitive integer vector with the
/// same orientation.
inline IntVec primitive_from(const Point& dir) {
  mpz_class l = 1;
  for (const auto& x : dir) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& x : dir) {
    z.push_back(x.get_num() * (l / x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  IntVec out;
  for (auto& v : z) {
    if (g != 0) v /= g;
    ensure(v.fits_slong_p(), "lattice vector entry overflows 64 bits");
    out.push_back(v.get_si());
  }
  return out;
}

inline Point to_point(const IntVec& v) {
  Point p;
  p.reserve(v.size());
  for (auto x : v) p.emplace_back(static_cast<long>(x));
  return p;
}

}  // namespace polywidth
