#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chromspec {

// Arbitrary-precision exact rational.
using Rational = boost::multiprecision::cpp_rational;

inline Rational ratio(std::int64_t num, std::int64_t den = 1) {
  return Rational(num) / Rational(den);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace chromspec
