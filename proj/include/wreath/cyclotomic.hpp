#pragma once

#include <complex>
#include <vector>

#include "wreath/rational.hpp"

namespace wreath {

// Default ceiling on the cyclotomic order k.  Desk-scale verification needs
// k <= 4; the cap guards against accidental huge Phi_k computations.
int max_cyclotomic_order();
void set_max_cyclotomic_order(int k);

// Euler's totient, the degree of Phi_k.
int totient(int k);

// Coefficients of the k-th cyclotomic polynomial Phi_k, ascending degree.
// Computed by dividing x^k - 1 by Phi_d over every proper divisor d | k,
// then memoized.
const std::vector<Rational>& cyclotomic_polynomial(int k);

/// An element of Q(zeta_k) in canonical form modulo Phi_k.
///
/// The coefficient vector always has length totient(k), so two elements are
/// equal iff their coefficient sequences are equal.  Working modulo Phi_k
/// rather than x^k - 1 keeps the representation a field (x^k - 1 has zero
/// divisors and breaks the root-sum cancellations this library relies on).
class Cyclotomic {
 public:
  explicit Cyclotomic(int order);  // zero of Q(zeta_order)
  Cyclotomic(int order, const Rational& value);

  static Cyclotomic zero(int order) { return Cyclotomic(order); }
  static Cyclotomic one(int order) { return Cyclotomic(order, 1); }
  // zeta_order^j, j taken mod order.
  static Cyclotomic root(int order, long long j);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws unless the element lies in Q.
  Rational to_rational() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic scaled(const Rational& r) const;
  // Complex conjugation: zeta |-> zeta^(k-1).
  Cyclotomic conj() const;
  // Nonnegative exponents only; roots of unity invert via conj or pow(k-1).
  Cyclotomic pow(long long e) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Numeric embedding zeta_k -> exp(2*pi*i/k), for sanity tests only.
  std::complex<double> to_complex() const;

  // Text form over the basis 1, zk, zk^2, ..., e.g. "-1-z3" or "1/2*z4".
  std::string str() const;

 private:
  void check_same_field(const Cyclotomic& o) const;

  int order_;
  std::vector<Rational> c_;  // length totient(order_)
};

// Root power sum u_r^s + (u_1 u_r)^s + ... + (u_1^{k-1} u_r)^s,
// evaluated literally by field arithmetic.  Equals k when s = 0 mod k and 0
// otherwise; summing the powers rather than short-circuiting doubles as a
// self-test of the arithmetic.
Cyclotomic root_power_sum(int k, long long r, long long s);

}  // namespace wreath
