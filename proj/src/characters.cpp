#include "wreath/characters.hpp"

#include <algorithm>

#include "wreath/parallel.hpp"

namespace wreath {

const Laurent& ClassFunction::at(const PartitionTuple& lambda) const {
  auto it = values.find(lambda);
  if (it == values.end()) throw std::invalid_argument("class function has no value at " + lambda.str());
  return it->second;
}

Cyclotomic irreducible_value_ordered(const PartitionTuple& gamma, const std::vector<int>& lengths,
                                     const std::vector<int>& ctypes) {
  Cyclotomic total(gamma.k);
  for (const auto& [rht, w] : enumerate_rht(gamma, lengths, ctypes)) total += w;
  return total;
}

Cyclotomic irreducible_value(const PartitionTuple& gamma, const PartitionTuple& lambda) {
  if (gamma.size() != lambda.size() || gamma.k != lambda.k)
    throw std::invalid_argument("irreducible_value: size or order mismatch");
  auto cycles = cycles_decreasing(class_representative(lambda));
  std::vector<int> lengths, ctypes;
  for (const auto& c : cycles) {
    lengths.push_back(c.length());
    ctypes.push_back(c.ctype);
  }
  return irreducible_value_ordered(gamma, lengths, ctypes);
}

CharacterTable::CharacterTable(int n, int k) : n_(n), k_(k), labels_(enumerate_tuples(n, k)) {
  // Slots first, then values: workers fill disjoint preallocated entries.
  for (const auto& gamma : labels_) {
    auto& row = values_[gamma];
    for (const auto& lambda : labels_) row.emplace(lambda, Cyclotomic(k));
  }
  cyclotomic_polynomial(k);
  size_t size = labels_.size();
  parallel_for(size * size, [&](size_t i) {
    const auto& gamma = labels_[i / size];
    const auto& lambda = labels_[i % size];
    values_.at(gamma).at(lambda) = irreducible_value(gamma, lambda);
  });
}

const Cyclotomic& CharacterTable::value(const PartitionTuple& gamma,
                                        const PartitionTuple& lambda) const {
  return values_.at(gamma).at(lambda);
}

BigInt CharacterTable::dimension(const PartitionTuple& gamma) const {
  std::vector<Partition> identity_comps(k_);
  identity_comps[0] = Partition(std::vector<int>(n_, 1));
  Rational d = value(gamma, PartitionTuple(k_, identity_comps)).to_rational();
  return numerator(d);
}

Laurent inner_product(const ClassFunction& phi, const ClassFunction& psi) {
  if (phi.n != psi.n || phi.k != psi.k)
    throw std::invalid_argument("inner_product: mismatched class functions");
  const Laurent& probe = phi.values.begin()->second;
  Laurent total(probe.order(), probe.vars());
  for (const auto& [lambda, value] : phi.values) {
    Laurent term = value * psi.at(lambda).conj_coeffs();
    total += term.scaled(Rational(class_size(lambda)));
  }
  Rational group_order(factorial(phi.n) * int_pow(phi.k, phi.n));
  return total.scaled(Rational(1) / group_order);
}

ClassFunction irreducible_class_function(const PartitionTuple& gamma,
                                         const std::vector<std::string>& vars) {
  ClassFunction f;
  f.n = gamma.size();
  f.k = gamma.k;
  for (const auto& lambda : enumerate_tuples(f.n, f.k))
    f.values.emplace(lambda, Laurent::constant(gamma.k, vars, irreducible_value(gamma, lambda)));
  return f;
}

ClassFunction regular_character(int n, int k, const std::vector<std::string>& vars) {
  ClassFunction f;
  f.n = n;
  f.k = k;
  std::vector<Partition> identity_comps(k);
  identity_comps[0] = Partition(std::vector<int>(n, 1));
  PartitionTuple identity(k, identity_comps);
  for (const auto& lambda : enumerate_tuples(n, k)) {
    Rational v = lambda == identity ? Rational(factorial(n) * int_pow(k, n)) : Rational(0);
    f.values.emplace(lambda, Laurent::constant(k, vars, v));
  }
  return f;
}

namespace {

// Border-strip removals of length m expressed on beta numbers.
long long sn_char_rec(std::vector<int> beta, const std::vector<int>& mu, size_t pos,
                      std::map<std::pair<std::vector<int>, size_t>, long long>& memo) {
  if (pos == mu.size()) return 1;
  auto key = std::make_pair(beta, pos);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int m = mu[pos];
  long long total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - m;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    int crossings = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++crossings;
    std::sort(nb.rbegin(), nb.rend());
    long long sign = crossings % 2 == 0 ? 1 : -1;
    total += sign * sn_char_rec(std::move(nb), mu, pos + 1, memo);
  }
  memo[key] = total;
  return total;
}

}  // namespace

long long sn_character_recursive(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("sizes must agree");
  int L = std::max(lambda.length(), 1);
  std::vector<int> beta;
  for (int i = 1; i <= L; ++i) beta.push_back(lambda.row(i) + (L - i));
  std::map<std::pair<std::vector<int>, size_t>, long long> memo;
  return sn_char_rec(std::move(beta), mu.parts, 0, memo);
}

bool verify_multischur(int n, int k, int vars_per_alphabet) {
  if (n * k * vars_per_alphabet > 24) throw BudgetError("multischur expansion too large");
  std::vector<std::string> vars;
  for (int i = 0; i < k; ++i)
    for (int j = 1; j <= vars_per_alphabet; ++j)
      vars.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
  auto var_monomial = [&](int i, int j) {
    Laurent::Exps e(vars.size(), 0);
    e[i * vars_per_alphabet + (j - 1)] = 1;
    return Laurent::monomial(k, vars, e, Rational(1));
  };

  auto tuples = enumerate_tuples(n, k);

  // P_lambda[X^0..X^{k-1}]: a C_r-cycle of length m contributes
  // sum_j Psi^j(u_r) p_m[X^j], the root character scaling the power sum
  // lambda-ring style (it is not raised to the m-th power; a cycle's weight
  // carries u_r^{p(f)} once, only rho is taken per cell).
  auto p_lambda = [&](const PartitionTuple& lambda) {
    Laurent prod = Laurent::constant(k, vars, Rational(1));
    for (int r = 0; r < k; ++r) {
      for (int part : lambda.comps[r].parts) {
        Laurent p(k, vars);
        for (int j = 0; j < k; ++j) {
          std::vector<Laurent> alphabet;
          for (int s = 1; s <= vars_per_alphabet; ++s) alphabet.push_back(var_monomial(j, s));
          p += powersum_poly(part, alphabet).scaled(Cyclotomic::root(k, (long long)r * j));
        }
        prod *= p;
      }
    }
    return prod;
  };

  std::map<PartitionTuple, Laurent> p_cache;
  for (const auto& lambda : tuples) p_cache.emplace(lambda, p_lambda(lambda));

  for (const auto& gamma : tuples) {
    Laurent lhs = Laurent::constant(k, vars, Rational(1));
    for (int i = 0; i < k; ++i) {
      std::vector<Laurent> alphabet;
      for (int s = 1; s <= vars_per_alphabet; ++s) alphabet.push_back(var_monomial(i, s));
      lhs *= schur_poly(gamma.comps[i], alphabet);
    }
    Laurent rhs(k, vars);
    for (const auto& lambda : tuples) {
      Cyclotomic chi_bar = irreducible_value(gamma, lambda).conj();
      Rational inv_z = Rational(1) / class_normalizer(lambda);
      rhs += p_cache.at(lambda).scaled(chi_bar).scaled(inv_z);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace wreath
