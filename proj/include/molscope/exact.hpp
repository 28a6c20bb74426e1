#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace molscope {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const ExactInt& v) { return v.str(); }

// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const ExactRational& v) {
  const ExactInt num = boost::multiprecision::numerator(v);
  const ExactInt den = boost::multiprecision::denominator(v);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline ExactInt factorial(int n) {
  ExactInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace molscope
