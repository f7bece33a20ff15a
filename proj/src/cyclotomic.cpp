#include "wreath/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wreath {

namespace {

int g_max_order = 12;

// Dense polynomial over Q, ascending degree, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division; the caller guarantees divisibility.
Poly poly_div_exact(Poly num, const Poly& den) {
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
  while (num.size() >= den.size()) {
    Rational lead = num.back() / den.back();
    size_t shift = num.size() - den.size();
    q[shift] = lead;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
    trim(num);
    if (num.empty()) break;
  }
  if (!num.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

}  // namespace

int max_cyclotomic_order() { return g_max_order; }
void set_max_cyclotomic_order(int k) { g_max_order = k; }

int totient(int k) {
  int result = k;
  int m = k;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

const Poly& cyclotomic_polynomial_locked(int k, std::map<int, Poly>& cache) {
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  Poly num(k + 1, Rational(0));
  num[0] = -1;
  num[k] = 1;  // x^k - 1
  for (int d = 1; d < k; ++d) {
    if (k % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial_locked(d, cache));
  }
  return cache.emplace(k, std::move(num)).first->second;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(int k) {
  static std::mutex mutex;
  static std::map<int, Poly> cache;
  std::lock_guard<std::mutex> lock(mutex);
  return cyclotomic_polynomial_locked(k, cache);
}

Cyclotomic::Cyclotomic(int order) : order_(order), c_(totient(order), Rational(0)) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  if (order > g_max_order) throw BudgetError("cyclotomic order cap exceeded");
}

Cyclotomic::Cyclotomic(int order, const Rational& value) : Cyclotomic(order) {
  c_[0] = value;
}

Cyclotomic Cyclotomic::root(int order, long long j) {
  long long e = ((j % order) + order) % order;
  // Root powers are requested constantly during enumeration; keep the k
  // reduced forms per order around.
  thread_local std::map<std::pair<int, long long>, Cyclotomic> cache;
  auto it = cache.find({order, e});
  if (it != cache.end()) return it->second;

  Cyclotomic r(order);
  const Poly& phi = cyclotomic_polynomial(order);
  int deg = static_cast<int>(phi.size()) - 1;  // = totient(order)
  // Reduce x^e modulo Phi_order.
  Poly p(e + 1, Rational(0));
  p[e] = 1;
  for (int i = static_cast<int>(p.size()) - 1; i >= deg; --i) {
    if (p[i] == 0) continue;
    Rational lead = p[i];
    for (int t = 0; t <= deg; ++t) p[i - deg + t] -= lead * phi[t];
  }
  for (int i = 0; i < deg; ++i) r.c_[i] = i < static_cast<int>(p.size()) ? p[i] : Rational(0);
  cache.emplace(std::make_pair(order, e), r);
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
  return c_[0];
}

void Cyclotomic::check_same_field(const Cyclotomic& o) const {
  if (order_ != o.order_)
    throw FieldMismatchError("incompatible cyclotomic fields: Q(zeta_" + std::to_string(order_) +
                             ") vs Q(zeta_" + std::to_string(o.order_) + ")");
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  check_same_field(o);
  Cyclotomic r(order_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  check_same_field(o);
  Cyclotomic r(order_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(order_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_same_field(o);
  int deg = static_cast<int>(c_.size());
  Poly prod(2 * deg - 1, Rational(0));
  for (int i = 0; i < deg; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  const Poly& phi = cyclotomic_polynomial(order_);
  for (int i = static_cast<int>(prod.size()) - 1; i >= deg; --i) {
    if (prod[i] == 0) continue;
    Rational lead = prod[i];
    for (int t = 0; t <= deg; ++t) prod[i - deg + t] -= lead * phi[t];
  }
  Cyclotomic r(order_);
  for (int i = 0; i < deg; ++i) r.c_[i] = prod[i];
  return r;
}

Cyclotomic Cyclotomic::scaled(const Rational& s) const {
  Cyclotomic r(order_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  // zeta^i |-> zeta^{(k-i) mod k}
  Cyclotomic r(order_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long long e = (order_ - static_cast<long long>(i)) % order_;
    r += root(order_, e).scaled(c_[i]);
  }
  return r;
}

Cyclotomic Cyclotomic::pow(long long e) const {
  if (e < 0) throw std::domain_error("Cyclotomic::pow requires nonnegative exponent");
  Cyclotomic r = one(order_);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  check_same_field(o);
  return c_ == o.c_;
}

std::complex<double> Cyclotomic::to_complex() const {
  const double pi = 3.14159265358979323846;
  std::complex<double> zeta = std::polar(1.0, 2.0 * pi / order_);
  std::complex<double> acc = 0.0, p = 1.0;
  for (size_t i = 0; i < c_.size(); ++i) {
    acc += static_cast<double>(c_[i]) * p;
    p *= zeta;
  }
  return acc;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational a = c_[i];
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? "-" : "+");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit_coeff = (a == 1) && i > 0;
    if (!unit_coeff) out << to_string(a);
    if (i > 0) {
      if (!unit_coeff) out << "*";
      out << "z" << order_;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

Cyclotomic root_power_sum(int k, long long r, long long s) {
  Cyclotomic total(k);
  for (int j = 0; j < k; ++j) {
    Cyclotomic u = Cyclotomic::root(k, j) * Cyclotomic::root(k, r);
    Cyclotomic term = Cyclotomic::one(k);
    if (s >= 0) {
      for (long long t = 0; t < s; ++t) term *= u;
    } else {
      // u is a root of unity, so u^{-1} = u^{k-1}; verified as we go.
      Cyclotomic inv = u.pow(k - 1);
      if (u * inv != Cyclotomic::one(k)) throw std::logic_error("root inverse check failed");
      for (long long t = 0; t < -s; ++t) term *= inv;
    }
    total += term;
  }
  return total;
}

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

Rational parse_rational(const std::string& s) {
  return Rational(s);
}

}  // namespace wreath
