#pragma once

#include <string>
#include <vector>

#include "wreath/laurent.hpp"

namespace wreath {

/// Integer partition, parts weakly decreasing, French convention throughout
/// (row 1 is the bottom row).
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  int row(int r) const { return r <= length() ? parts[r - 1] : 0; }  // 1-based

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return parts != o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }

  std::string str() const;
};

/// Sequence of k partitions of total size n, drawn corner to corner: the
/// south-east corner of component i meets the north-west corner of component
/// i+1, and an empty component contributes a single placeholder cell that
/// nothing may occupy.
struct PartitionTuple {
  int k = 1;
  std::vector<Partition> comps;

  PartitionTuple() = default;
  PartitionTuple(int k_, std::vector<Partition> comps_);

  int size() const;
  bool operator==(const PartitionTuple& o) const { return k == o.k && comps == o.comps; }
  bool operator!=(const PartitionTuple& o) const { return !(*this == o); }
  bool operator<(const PartitionTuple& o) const;

  // Width a component contributes to global column offsets (1 when empty).
  int comp_width(int i) const;
  // Height of a component's row band (1 when empty).
  int comp_height(int i) const;
  // Global column of (component, 1-based col): col + widths of earlier comps.
  int global_col(int comp, int col) const;
  // Global row of (component, 1-based row): row + heights of later comps.
  int global_row(int comp, int row) const;

  std::string str() const;       // e.g. ((3,1),(),(2,2))
  std::string json_str() const;  // e.g. [[3,1],[],[2,2]]
};

PartitionTuple parse_partition_tuple_json(const std::string& text, int k);

// All partitions of n, each exactly once, in lexicographically decreasing
// part order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

// All k-tuples summing to n; component sizes iterate with the earlier
// component taking the larger share first, partitions per component in the
// enumerate_partitions order.
std::vector<PartitionTuple> enumerate_tuples(int n, int k);

// z_lambda = prod_i i^{m_i} m_i!.
Rational z_factor(const Partition& p);
// Z_lambda = prod_i z_{lambda^i} * k^{len(lambda^i)} = n! k^n / |C_lambda|.
Rational class_normalizer(const PartitionTuple& t);

/// Filling of a tuple shape; entries are indices into an ordered alphabet.
struct Tableau {
  PartitionTuple shape;
  // entries[comp][row-1][col-1]
  std::vector<std::vector<std::vector<int>>> entries;

  bool operator==(const Tableau& o) const { return shape == o.shape && entries == o.entries; }
  bool operator<(const Tableau& o) const;
  int at(int comp, int row, int col) const { return entries[comp][row - 1][col - 1]; }
  std::string str() const;
};

// Throws unless rows weakly increase and columns strictly increase in every
// component (alphabet order = integer order on entries).
bool is_semistandard(const Tableau& t);

// All semistandard fillings of a single partition shape with letters
// 0..len(multiplicity)-1, letter i used at most multiplicity[i] times.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const std::vector<int>& multiplicity);

// Tuple-shape variant with one shared multiplicity pool across components.
std::vector<Tableau> enumerate_ssyt_tuple(const PartitionTuple& shape,
                                          const std::vector<int>& multiplicity);

// Entries become their rank in the reading order: all cells holding the
// smallest letter are renumbered left to right by global column, then the
// next letter, and so on.
Tableau standardize(const Tableau& t);

// Standard Young tableaux: entries 1..n each once (stored as 1..n).
std::vector<Tableau> enumerate_syt(const PartitionTuple& shape);

/// One rim hook: a contiguous boundary path inside a single component,
/// recorded as (row, col) cells ordered northwest to southeast.
struct RimHook {
  int comp = 0;
  std::vector<std::pair<int, int>> cells;  // 1-based (row, col), path order
  int south_steps = 0;
};

struct RimHookTableau {
  PartitionTuple shape;
  std::vector<RimHook> hooks;  // in placement order
};

// All rim hook tableaux of the given shape and type: hook i has
// lengths[i] cells and C-type exponent ctypes[i]; hooks are peeled from the
// shape in order.  The weight of a tableau is
//   prod_i (zeta_k^{ctypes[i]})^{component(i)} * (-1)^{south steps}.
std::vector<std::pair<RimHookTableau, Cyclotomic>> enumerate_rht(const PartitionTuple& shape,
                                                                 const std::vector<int>& lengths,
                                                                 const std::vector<int>& ctypes);

// Rim hooks of length `len` removable from a single partition.
std::vector<RimHook> rim_hooks_of(const Partition& p, int len);
Partition remove_hook(const Partition& p, const RimHook& h);

// Schur polynomial of shape over a finite alphabet of monomials, summed over
// semistandard fillings (letters usable unboundedly).
Laurent schur_poly(const Partition& shape, const std::vector<Laurent>& alphabet);
// Power sum p_r = sum of r-th powers of the alphabet.
Laurent powersum_poly(int r, const std::vector<Laurent>& alphabet);

}  // namespace wreath
