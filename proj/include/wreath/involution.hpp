#pragma once

#include "wreath/color_rule.hpp"

namespace wreath {

/// One decorated cell of a sign-reversing-involution object: the index and
/// root of unity written in the cell plus the color over it.
struct ObjectCell {
  int comp = 0, row = 0, col = 0;  // 1-based within the component
  int grow = 0, gcol = 0;          // corner-to-corner drawing coordinates
  int index = 0;                   // 1..n
  int root = 0;                    // exponent in 0..k-1
  ColorRule::Color color;
};

/// A rim hook tableau filling with colors: cells in a fixed canonical order
/// and a segmentation of them into hook paths (cell ids, northwest to
/// southeast).  The placement order of hooks is derived, not stored: colors
/// decreasing, then smallest index increasing.
struct InvolutionObject {
  PartitionTuple shape;
  std::vector<ObjectCell> cells;
  std::vector<std::vector<int>> hooks;

  int hook_of(int cell_id) const;
  int south_steps() const;  // d(T), summed over hooks

  bool operator==(const InvolutionObject& o) const;
  bool operator<(const InvolutionObject& o) const;
};

// All (sigma, coloring, rim hook tableau) objects for the shape and rule;
// budgets guard the blowup (intended for n <= 4, refused above max_n and
// past max_objects).
std::vector<InvolutionObject> enumerate_objects(const PartitionTuple& gamma, const ColorRule& rule,
                                                long long group_budget = 1'000'000, int max_n = 5,
                                                long long max_objects = 10'000'000);

// w(P) = (-1)^{d(T)} prod_i (u_{r_i})^{p(f_{s_i}) - b_i} rho(f_{s_i}).
Laurent object_weight(const InvolutionObject& obj, const ColorRule& rule);

// Structural check: hooks are contiguous paths starting at their smallest
// index, one color per hook, the derived placement order peels legally, and
// the coloring respects multiplicities.
bool is_valid_object(const InvolutionObject& obj, const ColorRule& rule);

// The weight-preserving, sign-reversing involution: scans the southernmost
// row left to right (then upwards) for the first cell whose upper neighbour
// is in the same hook (case a) or holds the end of a same-colored hook
// (case b), and reconnects hooks there.
InvolutionObject psi(const InvolutionObject& obj);
bool is_psi_fixed(const InvolutionObject& obj);

// The order-k map on psi-fixed points: bumps the root of unity in the first
// cell (bottom to top, left to right) whose color value does not match its
// component mod k.  Throws if the input is not psi-fixed.
InvolutionObject psi_prime(const InvolutionObject& obj, const ColorRule& rule);
bool is_psi_prime_fixed(const InvolutionObject& obj, const ColorRule& rule);

std::vector<InvolutionObject> final_fixed_points(const PartitionTuple& gamma,
                                                 const ColorRule& rule,
                                                 long long group_budget = 1'000'000);

// Final fixed point from a tableau in SSYT_k(gamma, rule) (colors in the
// canonical cell order) and a group element in one-line notation: entries
// are written top to bottom, left to right, and each same-colored row run is
// cut into hooks at its left-to-right index minima.
InvolutionObject reconstruct(const PartitionTuple& gamma, const ColorRule& rule,
                             const std::vector<ColorRule::Color>& tableau_colors,
                             const ColoredPermutation& sigma);

// Inverse of reconstruct on final fixed points.
std::pair<std::vector<ColorRule::Color>, ColoredPermutation> deconstruct(
    const InvolutionObject& obj, const ColorRule& rule);

// ASCII grid with hook paths, entries, and colors, for golden tests.
std::string render_object(const InvolutionObject& obj, const ColorRule& rule);

}  // namespace wreath
