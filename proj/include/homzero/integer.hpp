#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace homzero {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Least nonnegative residue; modulus 0 means a free coordinate and leaves x untouched.
inline Integer reduce_mod(const Integer& x, const Integer& modulus) {
  if (modulus == 0) return x;
  Integer r = x % modulus;
  if (r < 0) r += modulus;
  return r;
}

inline Integer gcd(Integer a, Integer b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace homzero
