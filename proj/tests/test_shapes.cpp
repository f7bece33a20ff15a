#include "doctest.h"
#include "wreath/characters.hpp"
#include "wreath/shapes.hpp"

using namespace wreath;

namespace {

PartitionTuple fig_shape() {
  return PartitionTuple(3, {Partition({3, 1}), Partition{}, Partition({2, 2})});
}

}  // namespace

TEST_CASE("shape enumeration") {
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(0).size() == 1);

  auto tuples = enumerate_tuples(2, 2);
  REQUIRE(tuples.size() == 5);
  CHECK(tuples[0] == PartitionTuple(2, {Partition({2}), Partition{}}));
  CHECK(tuples[1] == PartitionTuple(2, {Partition({1, 1}), Partition{}}));
  CHECK(tuples[2] == PartitionTuple(2, {Partition({1}), Partition({1})}));
  CHECK(tuples[3] == PartitionTuple(2, {Partition{}, Partition({2})}));
  CHECK(tuples[4] == PartitionTuple(2, {Partition{}, Partition({1, 1})}));

  CHECK(enumerate_tuples(0, 3).size() == 1);
}

TEST_CASE("corner-to-corner geometry") {
  auto shape = fig_shape();
  // The empty middle component contributes width 1 to global columns.
  CHECK(shape.global_col(0, 1) == 1);
  CHECK(shape.global_col(0, 3) == 3);
  CHECK(shape.global_col(2, 1) == 5);
  CHECK(shape.global_col(2, 2) == 6);
  // Later components sit below earlier ones.
  CHECK(shape.global_row(2, 1) == 1);
  CHECK(shape.global_row(1, 1) == 3);
  CHECK(shape.global_row(0, 1) == 4);
  CHECK(shape.json_str() == "[[3,1],[],[2,2]]");
  CHECK(parse_partition_tuple_json("[[3,1],[],[2,2]]", 3) == shape);
}

TEST_CASE("z factors and class normalizers") {
  CHECK(z_factor(Partition(std::vector<int>(5, 1))) == Rational(factorial(5)));
  CHECK(z_factor(Partition({3, 1})) == Rational(3));
  CHECK(class_normalizer(PartitionTuple(2, {Partition({1}), Partition({1})})) == Rational(4));
  CHECK(class_normalizer(PartitionTuple(2, {Partition({1, 1}), Partition{}})) == Rational(8));

  // class equation: sum over classes of n! k^n / Z equals n! k^n
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= 3; ++k) {
      Rational total = 0;
      Rational order(factorial(n) * int_pow(k, n));
      for (const auto& t : enumerate_tuples(n, k)) total += order / class_normalizer(t);
      CHECK(total == order);
    }
  }
}

TEST_CASE("semistandard tableau enumeration") {
  // content equal to the shape: the unique superstandard filling
  CHECK(enumerate_ssyt(Partition({3, 2}), {3, 2}).size() == 1);
  // column strictness kills repeated letters in a column
  CHECK(enumerate_ssyt(Partition({1, 1}), {2}).empty());

  // Figure-style tuple filling with a shared content pool across components
  auto shape = fig_shape();
  Tableau fig3;
  fig3.shape = shape;
  fig3.entries = {{{0, 0, 2}, {2}}, {}, {{0, 2}, {1, 3}}};
  CHECK(is_semistandard(fig3));
  auto all = enumerate_ssyt_tuple(shape, {3, 1, 6, 1});
  CHECK(std::find(all.begin(), all.end(), fig3) != all.end());

  // standardization of the figure filling
  Tableau st = standardize(fig3);
  Tableau expected;
  expected.shape = shape;
  expected.entries = {{{1, 2, 6}, {5}}, {}, {{3, 7}, {4, 8}}};
  CHECK(st == expected);

  // a standard tableau standardizes to itself (after the 1..n relabel)
  for (const auto& t : enumerate_syt(shape)) {
    Tableau zero_based = t;
    for (auto& comp : zero_based.entries)
      for (auto& row : comp)
        for (auto& e : row) e -= 1;
    CHECK(standardize(zero_based) == t);
  }

  // single row
  Tableau row;
  row.shape = PartitionTuple(1, {Partition({3})});
  row.entries = {{{1, 1, 4}}};
  Tableau srow = standardize(row);
  CHECK(srow.entries[0][0] == std::vector<int>{1, 2, 3});
}

TEST_CASE("standard tableau counts") {
  CHECK(enumerate_syt(PartitionTuple(2, {Partition({1}), Partition({1})})).size() == 2);
  CHECK(enumerate_syt(PartitionTuple(2, {Partition({2}), Partition{}})).size() == 1);

  auto shape = fig_shape();
  Tableau fig7;
  fig7.shape = shape;
  fig7.entries = {{{1, 2, 6}, {5}}, {}, {{3, 7}, {4, 8}}};
  auto all = enumerate_syt(shape);
  CHECK(std::find(all.begin(), all.end(), fig7) != all.end());

  // every SSYT standardizes to an SYT of the same shape
  for (const auto& t : enumerate_ssyt_tuple(shape, {3, 1, 6, 1})) {
    Tableau st = standardize(t);
    CHECK(std::find(all.begin(), all.end(), st) != all.end());
  }
}

TEST_CASE("standard tableau counts match the hook length formula") {
  auto hook_count = [](const Partition& p) {
    BigInt hooks = 1;
    for (int r = 1; r <= p.length(); ++r)
      for (int c = 1; c <= p.row(r); ++c) {
        int arm = p.row(r) - c;
        int leg = 0;
        for (int rr = r + 1; rr <= p.length(); ++rr)
          if (p.row(rr) >= c) leg++;
        hooks *= arm + leg + 1;
      }
    return factorial(p.size()) / hooks;
  };
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= 3; ++k) {
      for (const auto& gamma : enumerate_tuples(n, k)) {
        BigInt expect = factorial(n);
        for (const auto& comp : gamma.comps) {
          expect /= factorial(comp.size());
          expect *= hook_count(comp);
        }
        CHECK(BigInt(enumerate_syt(gamma).size()) == expect);
      }
    }
  }
}

TEST_CASE("rim hook tableaux") {
  // tableaux of shape ((3,1),(2,2)) for the cycle data of the class
  // ((3,1),(2,2)): five of them, three positive and two negative
  PartitionTuple shape(2, {Partition({3, 1}), Partition({2, 2})});
  auto rhts = enumerate_rht(shape, {2, 2, 1, 3}, {1, 1, 0, 0});
  REQUIRE(rhts.size() == 5);
  int plus = 0, minus = 0;
  for (const auto& [t, w] : rhts) {
    if (w == Cyclotomic::one(2)) plus++;
    if (w == Cyclotomic(2, -1)) minus++;
  }
  CHECK(plus == 3);
  CHECK(minus == 2);

  // misprint guard: the type ((1,3,1,3),(u0,u1,u1,u0)) belongs to the class
  // ((3,1),(3,1)) and admits six tableaux whose weights cancel to 0
  auto other = enumerate_rht(shape, {1, 3, 1, 3}, {0, 1, 1, 0});
  CHECK(other.size() == 6);
  Cyclotomic total(2);
  for (const auto& [t, w] : other) total += w;
  CHECK(total.is_zero());

  // single row takes one flat hook of weight +1
  auto single = enumerate_rht(PartitionTuple(3, {Partition({4}), Partition{}, Partition{}}), {4}, {0});
  REQUIRE(single.size() == 1);
  CHECK(single[0].second == Cyclotomic::one(3));

  // a domino standing upright has one South step
  auto dom = enumerate_rht(PartitionTuple(1, {Partition({1, 1})}), {2}, {0});
  REQUIRE(dom.size() == 1);
  CHECK(dom[0].second == Cyclotomic(1, -1));

  // all lengths 1, ctypes 0: #SYT tableaux, each of weight +1
  for (const auto& gamma : enumerate_tuples(4, 2)) {
    auto all = enumerate_rht(gamma, std::vector<int>(4, 1), std::vector<int>(4, 0));
    CHECK(all.size() == enumerate_syt(gamma).size());
    for (const auto& [t, w] : all) CHECK(w == Cyclotomic::one(2));
  }
}

TEST_CASE("rim hook sums match the classical Murnaghan-Nakayama recursion") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      for (const auto& mu : enumerate_partitions(n)) {
        PartitionTuple shape(1, {lambda});
        Cyclotomic total(1);
        for (const auto& [t, w] : enumerate_rht(shape, mu.parts, std::vector<int>(mu.length(), 0)))
          total += w;
        CHECK(total.to_rational() == Rational(sn_character_recursive(lambda, mu)));
      }
    }
  }
}

TEST_CASE("schur and power sum polynomials") {
  std::vector<Laurent> alphabet = {
      Laurent::constant(1, {"q"}, Rational(1)), Laurent::var_power(1, "q", 1),
      Laurent::var_power(1, "q", 1), Laurent::var_power(1, "q", -1),
      Laurent::var_power(1, "q", -1)};
  Laurent e2 = schur_poly(Partition({1, 1}), alphabet);
  CHECK(e2 == parse_laurent("q^-2 + 2*q^-1 + 4 + 2*q^1 + q^2", 1, {"q"}));

  std::vector<Laurent> x = {Laurent::var_power(1, "x", 1)};
  CHECK(schur_poly(Partition({4}), x) == Laurent::var_power(1, "x", 4));

  std::vector<Laurent> pm = {Laurent::var_power(1, "q", 1), Laurent::var_power(1, "q", -1)};
  CHECK(powersum_poly(2, pm) == parse_laurent("q^-2 + q^2", 1, {"q"}));
}
