#pragma once

#include <map>
#include <string>
#include <vector>

#include "wreath/cyclotomic.hpp"

namespace wreath {

/// Sparse multivariate Laurent polynomial over Q(zeta_k).
///
/// The variable list is explicit and ordered; binary operations demand
/// identical lists so exponent vectors can never silently misalign.  No zero
/// coefficient is ever stored, and terms are kept in lexicographic order of
/// their exponent vectors.
class Laurent {
 public:
  using Exps = std::vector<int>;

  Laurent(int order, std::vector<std::string> vars);

  static Laurent constant(int order, std::vector<std::string> vars, const Cyclotomic& c);
  static Laurent constant(int order, std::vector<std::string> vars, const Rational& c);
  static Laurent monomial(int order, std::vector<std::string> vars, const Exps& e,
                          const Cyclotomic& c);
  static Laurent monomial(int order, std::vector<std::string> vars, const Exps& e,
                          const Rational& c);
  // Convenience: x^e in a one-variable ring.
  static Laurent var_power(int order, const std::string& var, int e);

  int order() const { return order_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exps, Cyclotomic>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  bool operator==(const Laurent& o) const;
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent scaled(const Cyclotomic& c) const;
  Laurent scaled(const Rational& r) const;
  // Nonnegative exponents.
  Laurent pow(int e) const;

  // Coefficient of a full exponent vector; absent terms give 0.
  Cyclotomic coeff(const Exps& e) const;
  // Collects all terms with the given exponent of `var` and strips that
  // variable's slot from the result (partial coefficient extraction).
  Laurent coeff_of(const std::string& var, int e) const;
  // Keeps exactly the terms whose exponent of `var` is <= bound.
  Laurent truncate(const std::string& var, int bound) const;
  // Largest exponent of `var` among stored terms (0 for the zero polynomial).
  int max_exponent(const std::string& var) const;

  // Conjugates the cyclotomic coefficients; formal variables stay real.
  Laurent conj_coeffs() const;
  // Substitutes var -> var^m by scaling that exponent slot.
  Laurent stretch(const std::string& var, int m) const;
  // Substitutes var -> 1.
  Laurent set_var_to_one(const std::string& var) const;
  // Re-embeds into a superset variable list (explicit, never implicit).
  Laurent with_vars(const std::vector<std::string>& newvars) const;

  // Requires every coefficient to be rational (used after inner products).
  bool all_coeffs_rational() const;
  // True when every coefficient is a nonnegative integer.
  bool is_nonneg_integer_poly() const;

  std::string str() const;

 private:
  void insert(const Exps& e, const Cyclotomic& c);
  int var_index(const std::string& var) const;
  void check_compatible(const Laurent& o) const;

  int order_;
  std::vector<std::string> vars_;
  std::map<Exps, Cyclotomic> terms_;
};

// Parses the textual form produced by Laurent::str against a fixed variable
// list and cyclotomic order; parse(render(p)) == p.
Laurent parse_laurent(const std::string& text, int order, std::vector<std::string> vars);

}  // namespace wreath
