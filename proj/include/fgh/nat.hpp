#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

namespace fgh {

// Unbounded natural number. All coefficients, registers and counts in this
// library are non-negative by construction; nothing here ever subtracts below
// zero.
using Nat = boost::multiprecision::cpp_int;

// Decimal digit count estimated from the bit length. Used by the register
// guard; one digit of slack either way is fine there.
inline std::size_t decimal_digits(const Nat& n) {
  if (n == 0) return 1;
  std::size_t bits = boost::multiprecision::msb(n) + 1;
  return bits * 30103u / 100000u + 1;
}

}  // namespace fgh
