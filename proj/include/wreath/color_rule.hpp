#pragma once

#include <functional>
#include <random>

#include "wreath/characters.hpp"

namespace wreath {

/// One color of a rule: `multiplicity` copies available, integer value p(f)
/// and ring weight rho(f).
struct ColorSpec {
  std::string id;
  int multiplicity = 1;
  long long value = 0;
  Laurent weight;

  ColorSpec(std::string id_, int mult, long long value_, Laurent weight_);
};

/// A color rule for Z_k wr S_n.
///
/// Stored as a list of factors, each an ordered multiset of ColorSpecs; the
/// rule's colors are tuples with one spec per factor, ordered
/// lexicographically by spec position.  A plain rule has one factor; the
/// product rule F x G concatenates factor lists, which keeps the pair-coloring
/// constraint joint: the projection to each factor must respect that factor's
/// multiplicities.
struct ColorRule {
  int n = 0, k = 1;
  std::vector<std::string> vars;                // weight variable list
  std::vector<std::vector<ColorSpec>> factors;  // at least one factor

  ColorRule(int n_, int k_, std::vector<std::string> vars_, std::vector<ColorSpec> colors);
  ColorRule(int n_, int k_, std::vector<std::string> vars_,
            std::vector<std::vector<ColorSpec>> factors_);

  using Color = std::vector<int>;  // one spec index per factor

  int num_factors() const { return static_cast<int>(factors.size()); }
  long long value(const Color& c) const;
  Laurent weight(const Color& c) const;
  std::string color_id(const Color& c) const;

  // Re-embeds every weight into a superset variable list.
  ColorRule with_vars(const std::vector<std::string>& newvars) const;

  std::string json_str() const;  // single-factor rules only
};

ColorRule parse_color_rule_json(const std::string& text);

// Pointwise product of class functions as a single rule (values add,
// weights multiply, colorings pair up).
ColorRule product(const ColorRule& f, const ColorRule& g);

// --- evaluation ------------------------------------------------------------

// Class function value of the rule on the class C_lambda: assignments of one
// color per cycle, a length-l cycle consuming l copies, each cycle of C-type
// j contributing zeta^{j p(f)} rho(f)^l.
Laurent evaluate(const ColorRule& rule, const PartitionTuple& lambda);

// Test-only path: the per-element definition, computed cellwise on sigma.
Laurent evaluate_element(const ColorRule& rule, const ColoredPermutation& sigma);

// All multiplicity-respecting assignments of one color per cycle, where
// cycle i consumes lengths[i] copies of its color.
std::vector<std::vector<ColorRule::Color>> enumerate_cycle_colorings(
    const ColorRule& rule, const std::vector<int>& lengths);

// --- decomposition ----------------------------------------------------------

struct Decomposition {
  int n = 0, k = 1;
  std::map<PartitionTuple, Laurent> multiplicities;

  const Laurent& at(const PartitionTuple& gamma) const;
  bool operator==(const Decomposition& o) const;
  std::string str() const;
};

// Canonical cell order used for SSYT_k fillings: components in order, rows
// bottom to top, columns left to right.
std::vector<std::tuple<int, int, int>> cell_order(const PartitionTuple& shape);

// Streams every T in SSYT_k(gamma, rule) as (colors per cell, rho(T)).
void for_each_ssyt_k(const PartitionTuple& gamma, const ColorRule& rule,
                     const std::function<void(const std::vector<ColorRule::Color>&,
                                              const Laurent&)>& fn);

// Materialized variant for small cases.
std::vector<std::pair<std::vector<ColorRule::Color>, Laurent>> enumerate_ssyt_k(
    const PartitionTuple& gamma, const ColorRule& rule);

// sum of rho(T) over SSYT_k(gamma, rule).
Laurent ssyt_k_sum(const PartitionTuple& gamma, const ColorRule& rule);

// Validity check for a proposed filling in the canonical cell order.
bool is_valid_ssyt_k(const PartitionTuple& gamma, const ColorRule& rule,
                     const std::vector<ColorRule::Color>& colors);

// Irreducible decomposition through the semistandard-tableau rule.
Decomposition decompose(const ColorRule& rule);

// Oracle: multiplicities as inner products of evaluate(rule, .) against the
// character table; must agree with decompose exactly.
Decomposition brute_force_decompose(const ColorRule& rule, const CharacterTable* table = nullptr);

// --- named constructors -----------------------------------------------------

ColorRule trivial_rule(int n, int k);
// [1, empty^{n-1}] with p(1) = 1: the defining character.
ColorRule defining_rule(int n, int k);
// m-fold product of the defining rule; colors behave as subsets of {1..m}.
ColorRule defining_power(int n, int k, int m);
// Young tabloid rule [mu] = [1^{mu_1}, ..., l^{mu_l}], trivial p and rho (k=1).
ColorRule tabloid_rule(int n, const Partition& mu);
// Multiset colors over {1..m} capped at d componentwise, weight t_1^{a_1}...
ColorRule monomial_rule(int n, int m, const std::vector<int>& d);
// N_d = [0^n, 1^n, ..., d^n], p(i) = i, rho(i) = q^i.
ColorRule natural_rule(int n, int k, int d);
// F^lambda: color f_{i,j} with multiplicity lambda^i_j, p = i, rho = 1.
ColorRule basis_rule(const PartitionTuple& lambda);

// Smallest tensor power of the defining representation containing gamma.
long long N_of(const PartitionTuple& gamma);
// Whether chi^gamma appears in the m-th defining tensor power.
bool tensor_support(const PartitionTuple& gamma, int m);

// Random single-factor rule with values in 0..k-1 and monomial q-weights.
ColorRule random_rule(int n, int k, std::mt19937& rng);

}  // namespace wreath
