#pragma once

#include <map>

#include "wreath/colored_perm.hpp"

namespace wreath {

/// Class function of Z_k wr S_n with Laurent polynomial values, stored
/// classwise: one value per lambda |-_k n.
struct ClassFunction {
  int n = 0, k = 1;
  std::map<PartitionTuple, Laurent> values;

  const Laurent& at(const PartitionTuple& lambda) const;
};

// Irreducible character value chi^gamma(C_lambda) by the wreath
// Murnaghan-Nakayama rule: weights summed over rim hook tableaux fed the
// cycles of a class representative in decreasing cycle notation.
Cyclotomic irreducible_value(const PartitionTuple& gamma, const PartitionTuple& lambda);

// Same, but feeding the cycles in a caller-chosen order (the value is
// order-independent; tests exercise this).
Cyclotomic irreducible_value_ordered(const PartitionTuple& gamma, const std::vector<int>& lengths,
                                     const std::vector<int>& ctypes);

/// Cached table of all irreducible character values for one (n, k).
class CharacterTable {
 public:
  CharacterTable(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<PartitionTuple>& labels() const { return labels_; }
  const Cyclotomic& value(const PartitionTuple& gamma, const PartitionTuple& lambda) const;
  // chi^gamma(identity) = #SYT(gamma).
  BigInt dimension(const PartitionTuple& gamma) const;

 private:
  int n_, k_;
  std::vector<PartitionTuple> labels_;
  std::map<PartitionTuple, std::map<PartitionTuple, Cyclotomic>> values_;
};

// <phi, psi> = (1/(n! k^n)) sum_lambda |C_lambda| phi(lambda) conj(psi(lambda));
// conj touches cyclotomic coefficients only, q and t stay fixed.
Laurent inner_product(const ClassFunction& phi, const ClassFunction& psi);

// chi^gamma as a constant-coefficient class function over given variables.
ClassFunction irreducible_class_function(const PartitionTuple& gamma,
                                         const std::vector<std::string>& vars);

// Regular character: n! k^n at the identity class, zero elsewhere.
ClassFunction regular_character(int n, int k, const std::vector<std::string>& vars);

// Classical S_n character chi^lambda(mu) by the recursive border-strip rule
// over beta numbers; an oracle independent of enumerate_rht.
long long sn_character_recursive(const Partition& lambda, const Partition& mu);

// Exact check of the multi-Schur Murnaghan-Nakayama identity
//   s_{gamma^0}[X^0] ... s_{gamma^{k-1}}[X^{k-1}]
//     = sum_lambda conj(chi^gamma)(C_lambda) P_lambda[X] / Z_lambda
// with each alphabet X^i instantiated as `vars_per_alphabet` fresh variables.
bool verify_multischur(int n, int k, int vars_per_alphabet);

}  // namespace wreath
