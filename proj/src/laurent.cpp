#include "wreath/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wreath {

Laurent::Laurent(int order, std::vector<std::string> vars)
    : order_(order), vars_(std::move(vars)) {}

Laurent Laurent::constant(int order, std::vector<std::string> vars, const Cyclotomic& c) {
  Laurent p(order, std::move(vars));
  p.insert(Exps(p.vars_.size(), 0), c);
  return p;
}

Laurent Laurent::constant(int order, std::vector<std::string> vars, const Rational& c) {
  return constant(order, std::move(vars), Cyclotomic(order, c));
}

Laurent Laurent::monomial(int order, std::vector<std::string> vars, const Exps& e,
                          const Cyclotomic& c) {
  Laurent p(order, std::move(vars));
  if (e.size() != p.vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
  p.insert(e, c);
  return p;
}

Laurent Laurent::monomial(int order, std::vector<std::string> vars, const Exps& e,
                          const Rational& c) {
  return monomial(order, std::move(vars), e, Cyclotomic(order, c));
}

Laurent Laurent::var_power(int order, const std::string& var, int e) {
  return monomial(order, {var}, {e}, Rational(1));
}

bool Laurent::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Exps(vars_.size(), 0);
}

void Laurent::insert(const Exps& e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Laurent::var_index(const std::string& var) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) return static_cast<int>(i);
  throw std::invalid_argument("unknown variable: " + var);
}

void Laurent::check_compatible(const Laurent& o) const {
  if (order_ != o.order_) throw FieldMismatchError("Laurent coefficient fields differ");
  if (vars_ != o.vars_) throw std::invalid_argument("Laurent variable lists differ");
}

Laurent Laurent::operator+(const Laurent& o) const {
  check_compatible(o);
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.insert(e, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  check_compatible(o);
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.insert(e, -c);
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r(order_, vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  check_compatible(o);
  Laurent r(order_, vars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exps e = e1;
      for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.insert(e, c1 * c2);
    }
  }
  return r;
}

bool Laurent::operator==(const Laurent& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

Laurent Laurent::scaled(const Cyclotomic& c) const {
  Laurent r(order_, vars_);
  for (const auto& [e, v] : terms_) r.insert(e, v * c);
  return r;
}

Laurent Laurent::scaled(const Rational& s) const {
  Laurent r(order_, vars_);
  if (s == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v.scaled(s));
  return r;
}

Laurent Laurent::pow(int e) const {
  if (e < 0) throw std::domain_error("Laurent::pow requires nonnegative exponent");
  Laurent r = constant(order_, vars_, Rational(1));
  Laurent base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base = e > 1 ? base * base : base;
    e >>= 1;
  }
  return r;
}

Cyclotomic Laurent::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyclotomic(order_) : it->second;
}

Laurent Laurent::coeff_of(const std::string& var, int e) const {
  int idx = var_index(var);
  std::vector<std::string> rest;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (static_cast<int>(i) != idx) rest.push_back(vars_[i]);
  Laurent r(order_, rest);
  for (const auto& [exps, c] : terms_) {
    if (exps[idx] != e) continue;
    Exps re;
    for (size_t i = 0; i < exps.size(); ++i)
      if (static_cast<int>(i) != idx) re.push_back(exps[i]);
    r.insert(re, c);
  }
  return r;
}

Laurent Laurent::truncate(const std::string& var, int bound) const {
  int idx = var_index(var);
  Laurent r(order_, vars_);
  for (const auto& [e, c] : terms_)
    if (e[idx] <= bound) r.terms_.emplace(e, c);
  return r;
}

int Laurent::max_exponent(const std::string& var) const {
  int idx = var_index(var);
  int m = 0;
  bool any = false;
  for (const auto& [e, c] : terms_) {
    if (!any || e[idx] > m) m = e[idx];
    any = true;
  }
  return m;
}

Laurent Laurent::conj_coeffs() const {
  Laurent r(order_, vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
  return r;
}

Laurent Laurent::stretch(const std::string& var, int m) const {
  int idx = var_index(var);
  Laurent r(order_, vars_);
  for (const auto& [e, c] : terms_) {
    Exps ne = e;
    ne[idx] *= m;
    r.insert(ne, c);
  }
  return r;
}

Laurent Laurent::set_var_to_one(const std::string& var) const {
  int idx = var_index(var);
  Laurent r(order_, vars_);
  for (const auto& [e, c] : terms_) {
    Exps ne = e;
    ne[idx] = 0;
    r.insert(ne, c);
  }
  return r;
}

Laurent Laurent::with_vars(const std::vector<std::string>& newvars) const {
  std::vector<int> where(vars_.size(), -1);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(newvars.begin(), newvars.end(), vars_[i]);
    if (it == newvars.end())
      throw std::invalid_argument("with_vars: new list must contain " + vars_[i]);
    where[i] = static_cast<int>(it - newvars.begin());
  }
  Laurent r(order_, newvars);
  for (const auto& [e, c] : terms_) {
    Exps ne(newvars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    r.insert(ne, c);
  }
  return r;
}

bool Laurent::all_coeffs_rational() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

bool Laurent::is_nonneg_integer_poly() const {
  for (const auto& [e, c] : terms_) {
    if (!c.is_rational()) return false;
    Rational r = c.to_rational();
    if (denominator(r) != 1 || r < 0) return false;
  }
  return true;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    // Render the coefficient, deciding whether it needs parentheses and
    // whether a bare leading sign can be pulled out.
    std::string cs = c.str();
    bool multi = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
    bool negative = !multi && !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (multi) {
      factors.push_back("(" + cs + ")");
    } else if (cs != "1") {
      factors.push_back(cs);
    }
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(vars_[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty()) factors.push_back("1");
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

namespace {

// Recursive-descent parser for the textual Laurent form.
class Parser {
 public:
  Parser(const std::string& s, int order, std::vector<std::string> vars)
      : s_(s), order_(order), vars_(std::move(vars)) {}

  Laurent parse() {
    Laurent r = expression();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Laurent expression() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Laurent r = term();
    if (neg) r = -r;
    while (true) {
      skip_ws();
      if (eat('+')) {
        r += term();
      } else if (eat('-')) {
        r -= term();
      } else {
        break;
      }
    }
    return r;
  }

  Laurent term() {
    Laurent r = factor();
    while (eat('*')) r *= factor();
    return r;
  }

  long long integer() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    long long v = std::stoll(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  Laurent factor() {
    skip_ws();
    if (eat('(')) {
      Laurent r = expression();
      if (!eat(')')) fail("expected ')'");
      return maybe_power_of(r);
    }
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      BigInt num(s_.substr(start, pos_ - start));
      Rational value(num);
      if (eat('/')) {
        skip_ws();
        size_t d0 = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == d0) fail("expected denominator");
        value /= Rational(BigInt(s_.substr(d0, pos_ - d0)));
      }
      return Laurent::constant(order_, vars_, value);
    }
    // identifier: a variable name or the root symbol z<order>
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected factor");
    std::string name = s_.substr(start, pos_ - start);
    if (name == "z" + std::to_string(order_)) {
      long long e = 1;
      if (eat('^')) e = integer();
      return Laurent::constant(order_, vars_, Cyclotomic::root(order_, e));
    }
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) {
        int e = 1;
        if (eat('^')) e = static_cast<int>(integer());
        Laurent::Exps exps(vars_.size(), 0);
        exps[i] = e;
        return Laurent::monomial(order_, vars_, exps, Rational(1));
      }
    }
    fail("unknown symbol '" + name + "'");
  }

  Laurent maybe_power_of(Laurent base) {
    if (eat('^')) {
      long long e = integer();
      if (e < 0) fail("negative power of compound expression");
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  const std::string& s_;
  int order_;
  std::vector<std::string> vars_;
  size_t pos_ = 0;
};

}  // namespace

Laurent parse_laurent(const std::string& text, int order, std::vector<std::string> vars) {
  return Parser(text, order, std::move(vars)).parse();
}

}  // namespace wreath
