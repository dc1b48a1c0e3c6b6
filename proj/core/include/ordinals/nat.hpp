#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ord {

/// Arbitrary-precision natural number. Operations in this library never
/// produce negative values; callers must not construct them either.
using Nat = boost::multiprecision::cpp_int;

/// base^exponent by binary exponentiation.
inline Nat nat_pow(Nat base, Nat exponent) {
  Nat result = 1;
  while (exponent > 0) {
    if ((exponent & 1) != 0) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

}  // namespace ord
