#pragma once

#include <cstdint>
#include <vector>

#include "wreath/shapes.hpp"

namespace wreath {

/// Element of Z_k wr S_n: i maps to zeta^{colors[i-1]} * images[i-1].
struct ColoredPermutation {
  int n = 0, k = 1;
  std::vector<int> images;  // permutation of 1..n, images[i-1] = sigma_i
  std::vector<int> colors;  // exponents a_i in 0..k-1

  ColoredPermutation() = default;
  ColoredPermutation(int n_, int k_, std::vector<int> images_, std::vector<int> colors_);

  static ColoredPermutation identity(int n, int k);

  bool operator==(const ColoredPermutation& o) const {
    return n == o.n && k == o.k && images == o.images && colors == o.colors;
  }
  bool operator<(const ColoredPermutation& o) const;

  ColoredPermutation inverse() const;
  std::string str() const;        // one-line cycle form, e.g. "u3 6 | u0 1"
  std::string json_str() const;   // {"n":..,"k":..,"images":[..],"colors":[..]}
};

// (sigma2 * sigma1)(i) applies sigma1 first.
ColoredPermutation compose(const ColoredPermutation& sigma2, const ColoredPermutation& sigma1);

struct Cycle {
  // (index, root exponent) pairs; the exponent shown with index i is the one
  // on the arrow into i, i.e. u(sigma, i).  First index is the cycle minimum.
  std::vector<std::pair<int, int>> entries;
  int ctype = 0;  // sum of exponents mod k
  int length() const { return static_cast<int>(entries.size()); }
};

// Decreasing cycle notation: every cycle starts at its smallest index and
// cycles are ordered by decreasing smallest index, left to right.
std::vector<Cycle> cycles_decreasing(const ColoredPermutation& sigma);

// Erase parentheses, then re-cut at left-to-right minima; a bijection on the
// group.  flatten returns the concatenated (index, exponent) word.
std::vector<std::pair<int, int>> flatten_cycles(const std::vector<Cycle>& cycles);
std::vector<Cycle> cut_at_minima(const std::vector<std::pair<int, int>>& word, int k);

// Conjugacy class type: component j holds the lengths of C_j-cycles.
PartitionTuple class_type(const ColoredPermutation& sigma);

// Representative of the class C_lambda built from consecutive index blocks.
ColoredPermutation class_representative(const PartitionTuple& lambda);

// Whole group, n! k^n elements; refuses above the budget.
std::vector<ColoredPermutation> enumerate_group(int n, int k,
                                                long long budget = 1'000'000);

// |C_lambda| by direct count over the enumerated group.
long long class_size_brute_force(const PartitionTuple& lambda, long long budget = 1'000'000);

// |C_lambda| = n! k^n / Z_lambda via the validated normalizer formula.
BigInt class_size(const PartitionTuple& lambda);

// Generalized permutation matrix of sigma over Q(zeta_k): the entry in row
// sigma_j, column j is zeta^{colors[j-1]}.
std::vector<std::vector<Cyclotomic>> defining_matrix(const ColoredPermutation& sigma);

ColoredPermutation parse_colored_permutation(const std::string& text, int n, int k);

}  // namespace wreath
