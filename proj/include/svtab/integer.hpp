#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "svtab/error.hpp"

namespace svtab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& value) { return value.str(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& value) {
  const Integer& num = boost::multiprecision::numerator(value);
  const Integer& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// a / b, throwing DivisionNotExact when b does not divide a.
inline Integer divide_exact(const Integer& a, const Integer& b) {
  if (b == 0) throw Error(Errc::DivisionNotExact, "division by zero");
  Integer q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) {
    throw Error(Errc::DivisionNotExact, a.str() + " is not divisible by " + b.str());
  }
  return q;
}

/// Integral value of a rational, throwing DivisionNotExact if it has a
/// nontrivial denominator.
inline Integer require_integral(const Rational& value) {
  if (boost::multiprecision::denominator(value) != 1) {
    throw Error(Errc::DivisionNotExact, to_string(value) + " is not an integer");
  }
  return boost::multiprecision::numerator(value);
}

}  // namespace svtab
