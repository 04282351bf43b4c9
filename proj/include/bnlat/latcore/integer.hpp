#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <string>
#include <vector>

#include "bnlat/latcore/errors.hpp"

namespace bnlat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

/// Floor division, rounding toward negative infinity.
inline Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw InputError("floor_div: division by zero");
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// Remainder in [0, |m|).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

inline Integer floor(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q),
                   boost::multiprecision::denominator(q));
}

inline Integer ceil(const Rational& q) { return -floor(Rational(-q)); }

/// Largest s with s*s <= n, n >= 0.
inline Integer isqrt(const Integer& n) {
  if (n < 0) throw InputError("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Integer to_integer(const Rational& q) {
  if (!is_integer(q)) throw InvariantError("rational value is not integral");
  return boost::multiprecision::numerator(q);
}

/// Representative of q modulo m in [0, m).
inline Rational mod(const Rational& q, const Integer& m) {
  Rational r = q - Rational(floor(q / Rational(m)) * m);
  return r;
}

inline std::string to_string(const Integer& a) { return a.str(); }

inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

/// Deterministic primality for the magnitudes that show up as lattice
/// discriminants; falls back to Miller-Rabin with fixed bases beyond 10^12.
inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  if (n < Integer(1000000000000LL)) {
    for (Integer d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }
  return boost::multiprecision::miller_rabin_test(n, 40);
}

}  // namespace bnlat
