#include <random>

#include "doctest.h"
#include "wreath/colored_perm.hpp"

using namespace wreath;

namespace {

// The Z_4 wr S_6 element used throughout the group-theory sections.
ColoredPermutation tau() {
  return ColoredPermutation(6, 4, {1, 5, 2, 4, 3, 6}, {0, 2, 3, 1, 0, 3});
}

ColoredPermutation random_element(int n, int k, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  std::vector<int> col(n);
  std::uniform_int_distribution<int> cd(0, k - 1);
  for (auto& c : col) c = cd(rng);
  return ColoredPermutation(n, k, img, col);
}

std::vector<std::vector<Cyclotomic>> matmul(const std::vector<std::vector<Cyclotomic>>& a,
                                            const std::vector<std::vector<Cyclotomic>>& b, int k) {
  size_t n = a.size();
  std::vector<std::vector<Cyclotomic>> out(n, std::vector<Cyclotomic>(n, Cyclotomic(k)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < n; ++l)
      for (size_t j = 0; j < n; ++j) out[i][j] += a[i][l] * b[l][j];
  return out;
}

}  // namespace

TEST_CASE("composition basics") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto sigma = random_element(5, 3, rng);
    auto id = ColoredPermutation::identity(5, 3);
    CHECK(compose(sigma, id) == sigma);
    CHECK(compose(id, sigma) == sigma);
    CHECK(compose(sigma, sigma.inverse()) == id);
    CHECK(compose(sigma.inverse(), sigma) == id);
  }
}

TEST_CASE("composition agrees with generalized permutation matrices") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 4;  // up to 5
    int k = 1 + trial % 4;
    auto a = random_element(n, k, rng);
    auto b = random_element(n, k, rng);
    CHECK(defining_matrix(compose(a, b)) == matmul(defining_matrix(a), defining_matrix(b), k));
  }
  // and specifically in Z_4 wr S_6
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_element(6, 4, rng);
    auto b = random_element(6, 4, rng);
    CHECK(defining_matrix(compose(a, b)) == matmul(defining_matrix(a), defining_matrix(b), 4));
  }
}

TEST_CASE("decreasing cycle notation") {
  auto t = tau();
  CHECK(t.str() == "u3 6 | u1 4 | u3 2 u2 5 u0 3 | u0 1");

  auto id = ColoredPermutation::identity(4, 3);
  auto cycles = cycles_decreasing(id);
  REQUIRE(cycles.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(cycles[i].length() == 1);
    CHECK(cycles[i].ctype == 0);
    CHECK(cycles[i].entries[0].first == 4 - static_cast<int>(i));
  }

  // flatten/unflatten round trip over a whole small group
  for (const auto& sigma : enumerate_group(3, 3)) {
    auto cycles2 = cycles_decreasing(sigma);
    auto word = flatten_cycles(cycles2);
    auto cut = cut_at_minima(word, 3);
    REQUIRE(cut.size() == cycles2.size());
    for (size_t i = 0; i < cut.size(); ++i) {
      CHECK(cut[i].entries == cycles2[i].entries);
      CHECK(cut[i].ctype == cycles2[i].ctype);
    }
  }
}

TEST_CASE("class types") {
  PartitionTuple expected(4, {Partition({1}), Partition({3, 1}), Partition{}, Partition({1})});
  CHECK(class_type(tau()) == expected);

  auto id = ColoredPermutation::identity(3, 2);
  CHECK(class_type(id) == PartitionTuple(2, {Partition({1, 1, 1}), Partition{}}));

  ColoredPermutation ncycle(4, 3, {2, 3, 4, 1}, {0, 0, 0, 0});
  CHECK(class_type(ncycle) ==
        PartitionTuple(3, {Partition({4}), Partition{}, Partition{}}));

  // class_representative lands in its own class
  for (const auto& lambda : enumerate_tuples(5, 3))
    CHECK(class_type(class_representative(lambda)) == lambda);
}

TEST_CASE("group enumeration and class sizes") {
  CHECK(enumerate_group(2, 2).size() == 8);
  CHECK_THROWS_AS(enumerate_group(10, 4), BudgetError);

  long long total = 0;
  std::map<PartitionTuple, long long> counts;
  for (const auto& sigma : enumerate_group(3, 2)) {
    counts[class_type(sigma)]++;
    total++;
  }
  CHECK(total == 48);

  CHECK(class_size_brute_force(PartitionTuple(2, {Partition({1}), Partition({1})})) == 2);

  // formula class size matches brute force on every class, n <= 4, k <= 3
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 3; ++k) {
      std::map<PartitionTuple, long long> brute;
      for (const auto& sigma : enumerate_group(n, k)) brute[class_type(sigma)]++;
      for (const auto& lambda : enumerate_tuples(n, k)) {
        CHECK(class_size(lambda) == BigInt(brute[lambda]));
        // n! k^n / |C| = Z
        Rational order(factorial(n) * int_pow(k, n));
        CHECK(order / Rational(brute[lambda]) == class_normalizer(lambda));
      }
    }
  }
}

TEST_CASE("class type is conjugation invariant") {
  std::mt19937 rng(9);
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= 3; ++k) {
      for (int trial = 0; trial < 30; ++trial) {
        auto g = random_element(n, k, rng);
        auto sigma = random_element(n, k, rng);
        auto conj = compose(compose(g, sigma), g.inverse());
        CHECK(class_type(conj) == class_type(sigma));
      }
    }
  }
}

TEST_CASE("text and json forms") {
  auto t = tau();
  CHECK(parse_colored_permutation(t.str(), 6, 4) == t);
  CHECK(parse_colored_permutation(t.json_str(), 6, 4) == t);

  // round trip across a whole small group
  for (const auto& sigma : enumerate_group(3, 3)) {
    CHECK(parse_colored_permutation(sigma.str(), 3, 3) == sigma);
    CHECK(parse_colored_permutation(sigma.json_str(), 3, 3) == sigma);
  }
}
