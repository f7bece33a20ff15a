#pragma once

#include "wreath/color_rule.hpp"

namespace wreath {

/// Lattice polytope in half-space form: rows a.x <= b, dilated as a.x <= d b.
class HPolytope {
 public:
  HPolytope(int dim, std::vector<std::pair<std::vector<Rational>, Rational>> rows,
            std::string tag = "custom");

  static HPolytope simplex(int m);  // conv{0, e_1, ..., e_m}
  static HPolytope cross(int m);    // conv{+-e_i}
  static HPolytope cube(int m);     // [0,1]^m
  static HPolytope segment() { return simplex(1); }

  int dim() const { return dim_; }
  const std::string& tag() const { return tag_; }

  // Coordinate bounds of the d-th dilation scale linearly with d; computed
  // once by Fourier-Motzkin elimination.  Throws for unbounded input.
  std::pair<Rational, Rational> coordinate_bounds(int i) const;

  bool contains(const std::vector<long long>& v, int d) const;

 private:
  int dim_;
  std::vector<std::pair<std::vector<Rational>, Rational>> rows_;
  std::string tag_;
  std::vector<std::pair<Rational, Rational>> bounds_;  // per coordinate, at d = 1
};

// All integer points of the d-th dilation, by bounding-box scan, in
// lexicographic order.
std::vector<std::vector<long long>> lattice_points(const HPolytope& p, int d);

// L_{P,d}^{a'}(q) = sum over points q^{a'.v}.
Laurent refined_ehrhart(const HPolytope& p, const std::vector<long long>& weight, int d);

// Gaussian binomial [top, bottom]_q through the product formula with exact
// polynomial division.
Laurent q_binomial(int top, int bottom);

// chi^{K[P^{x n}]}(C_lambda) truncated at t^D: for each cycle of length l
// and C-type j, a factor sum_v zeta^{j|v|} q^{l (a'.v)} per dilation level.
Laurent module_character(const HPolytope& p, int n, int k, const std::vector<long long>& weight,
                         const PartitionTuple& lambda, int tmax);

// F_d = [v^n : v in dP] with p(v) = |v| and rho(v) = q^{a'.v}.
ColorRule polytope_rule(const HPolytope& p, int n, int k, const std::vector<long long>& weight,
                        int d);

// Sum_d t^d decompose(F_d), each multiplicity a polynomial in q and t.
Decomposition frobenius_decompose(const HPolytope& p, int n, int k,
                                  const std::vector<long long>& weight, int tmax);

struct WreathStats {
  long long wdes = 0;
  long long wcomaj = 0;
  std::vector<long long> labels;  // the weakly increasing W-sequence a_1..a_n
};

// Wreath descent statistics of a standard tableau of tuple shape, via the
// weakly increasing relabeling W; left/right comparisons use global columns.
WreathStats wreath_stats_tableau(const Tableau& t);

// Wreath descent statistics of a colored permutation, via the r-descent
// sets D^1..D^k with the boundary convention a_0 = 0 (position 0 can be an
// r-descent but never a k-descent); RSK preserves both statistics under
// exactly this convention.
WreathStats wreath_stats_perm(const ColoredPermutation& sigma);

// Colored RSK: sigma_i is row-inserted into component a_i; Q records the
// insertion order at the new cell.  Returns standard tableaux (P, Q) of a
// common shape.
std::pair<Tableau, Tableau> colored_rsk(const ColoredPermutation& sigma);

struct EulerMahonianReport {
  bool smoothing_ok = false;   // (1-t) sum_d t^d SSYT_k(N_d) sums = max-graded sum
  bool telescope_ok = false;   // prod (1-t^k q^{kj}) * series = SYT statistic sum
  bool positive = false;       // numerator lies in N[t,q]
  Laurent numerator;           // sum over SYT of t^wdes q^wcomaj

  EulerMahonianReport() : numerator(1, {"q", "t"}) {}
  bool ok() const { return smoothing_ok && telescope_ok && positive; }
};

// Verifies both halves of the equivariant Euler-Mahonian identity for one
// shape as truncated series in t up to degree tmax.
EulerMahonianReport verify_euler_mahonian(const PartitionTuple& gamma, int tmax);

// Series of SSYT_k(gamma, N) with entries bounded by max_entry, graded
// t^{max T} q^{|T|}; and the per-dilation sums q^{|T|} for entries <= d.
Laurent ssyt_max_graded_series(const PartitionTuple& gamma, int max_entry);
Laurent ssyt_dilation_sum(const PartitionTuple& gamma, int d);

}  // namespace wreath
