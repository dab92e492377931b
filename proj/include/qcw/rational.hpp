#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "qcw/errors.hpp"

namespace qcw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

/// Serializes as "p/q" ("p" when q == 1); the report format for exact values.
inline std::string to_pq_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad rational literal: " + s);
  }
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline int rat_ceil_log2(const Rational& r) {
  // least k with 2^k >= r, for r >= 1
  int k = 0;
  Rational pow = 1;
  while (pow < r) {
    pow *= 2;
    ++k;
  }
  return k;
}

}  // namespace qcw
