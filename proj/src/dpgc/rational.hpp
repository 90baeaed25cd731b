#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace dpgc {

using Rational = boost::multiprecision::cpp_rational;

// exact: doubles are dyadic rationals
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw validation_error("probability is not finite");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);
  long long mant = std::llround(std::ldexp(m, 53));
  exp -= 53;
  Rational r(mant);
  boost::multiprecision::cpp_int two(1);
  if (exp >= 0) {
    two <<= exp;
    r *= Rational(two);
  } else {
    two <<= -exp;
    r /= Rational(two);
  }
  return r;
}

inline std::string rational_to_string(const Rational& r) {
  std::string num = numerator(r).str();
  if (denominator(r) == 1) return num;
  return num + "/" + denominator(r).str();
}

}  // namespace dpgc
