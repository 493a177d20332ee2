#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "gradalg/error.hpp"

namespace gradalg {

/* All scalar arithmetic is exact. No floating point anywhere. */
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

/* Accepts "p", "-p", "p/q". */
inline Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) raise(ErrorKind::DivisionByZero, "rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    raise(ErrorKind::ParseError, "bad rational literal: " + s);
  }
}

/* Floor-positive remainder, works for negative a. */
inline int mod_nonneg(long long a, int n) {
  long long r = a % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

}  // namespace gradalg
