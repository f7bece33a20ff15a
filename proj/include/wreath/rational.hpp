#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wreath {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when two values from incompatible cyclotomic fields are combined.
struct FieldMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when an enumeration would exceed its configured resource budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt int_pow(BigInt base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace wreath
