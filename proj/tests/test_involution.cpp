#include <set>

#include "doctest.h"
#include "wreath/involution.hpp"

using namespace wreath;

namespace {

ColorRule simple_rule(int n, int k, std::vector<std::tuple<std::string, int, long long>> specs) {
  Laurent one = Laurent::constant(k, {}, Rational(1));
  std::vector<ColorSpec> colors;
  for (auto& [id, mult, value] : specs) colors.push_back(ColorSpec(id, mult, value, one));
  return ColorRule(n, k, {}, std::move(colors));
}

Laurent side_by_inner_product(const PartitionTuple& gamma, const ColorRule& rule) {
  // sum over sigma of chi(sigma) conj(chi^gamma(sigma))
  Laurent total(rule.k, rule.vars);
  for (const auto& sigma : enumerate_group(rule.n, rule.k)) {
    Cyclotomic chi_bar = irreducible_value(gamma, class_type(sigma)).conj();
    total += evaluate_element(rule, sigma).scaled(chi_bar);
  }
  return total;
}

}  // namespace

TEST_CASE("single cell object") {
  auto rule = ColorRule(1, 1, {"x"}, {ColorSpec("f", 1, 0, Laurent::var_power(1, "x", 1))});
  PartitionTuple gamma(1, {Partition({1})});
  auto objects = enumerate_objects(gamma, rule);
  REQUIRE(objects.size() == 1);
  CHECK(object_weight(objects[0], rule) == Laurent::var_power(1, "x", 1));
  CHECK(is_psi_fixed(objects[0]));
  CHECK(is_psi_prime_fixed(objects[0], rule));
}

TEST_CASE("object sums reproduce the inner product") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 3}}) {
    auto rule = simple_rule(n, k, {{"a", n, 1}, {"b", n - 1, 0}});
    for (const auto& gamma : enumerate_tuples(n, k)) {
      Laurent total(rule.k, rule.vars);
      for (const auto& obj : enumerate_objects(gamma, rule))
        total += object_weight(obj, rule);
      CHECK(total == side_by_inner_product(gamma, rule));
    }
  }
}

TEST_CASE("psi is a sign-reversing involution") {
  std::vector<ColorRule> rules = {
      simple_rule(3, 2, {{"a", 2, 0}, {"b", 1, 1}}),
      simple_rule(3, 2, {{"a", 3, 1}, {"b", 2, 0}}),
      simple_rule(2, 3, {{"a", 2, 2}, {"b", 1, 1}}),
      simple_rule(3, 3, {{"a", 2, 1}, {"b", 1, 0}, {"c", 1, 2}}),
      simple_rule(3, 1, {{"a", 2, 0}, {"b", 2, 0}}),
  };
  for (const auto& rule : rules) {
    for (const auto& gamma : enumerate_tuples(rule.n, rule.k)) {
      auto objects = enumerate_objects(gamma, rule);
      std::set<InvolutionObject> universe(objects.begin(), objects.end());
      CHECK(universe.size() == objects.size());  // enumeration has no repeats
      for (const auto& obj : objects) {
        CHECK(is_valid_object(obj, rule));
        auto image = psi(obj);
        CHECK(is_valid_object(image, rule));
        CHECK(universe.count(image) == 1);
        CHECK(psi(image) == obj);
        if (!(image == obj))
          CHECK(object_weight(image, rule) == -object_weight(obj, rule));
      }
    }
  }
}

TEST_CASE("psi-prime orbits cancel") {
  auto rule = simple_rule(3, 3, {{"a", 2, 1}, {"b", 1, 0}, {"c", 1, 2}});
  for (const auto& gamma : enumerate_tuples(3, 3)) {
    for (const auto& obj : enumerate_objects(gamma, rule)) {
      if (!is_psi_fixed(obj)) continue;
      if (is_psi_prime_fixed(obj, rule)) {
        CHECK(psi_prime(obj, rule) == obj);
        continue;
      }
      // non-fixed orbits have size exactly k and weight sum zero
      std::vector<InvolutionObject> orbit = {obj};
      Laurent total = object_weight(obj, rule);
      InvolutionObject cur = obj;
      for (int step = 1; step < rule.k; ++step) {
        cur = psi_prime(cur, rule);
        CHECK(std::find(orbit.begin(), orbit.end(), cur) == orbit.end());
        orbit.push_back(cur);
        total += object_weight(cur, rule);
      }
      CHECK(psi_prime(cur, rule) == obj);
      CHECK(total.is_zero());
    }
  }
  // feeding a non-fixed object violates the contract
  for (const auto& obj :
       enumerate_objects(PartitionTuple(3, {Partition({2, 1}), Partition{}, Partition{}}), rule)) {
    if (is_psi_fixed(obj)) continue;
    CHECK_THROWS_AS(psi_prime(obj, rule), std::invalid_argument);
    break;
  }
}

TEST_CASE("telescoping down to the final fixed points") {
  std::vector<ColorRule> rules = {
      simple_rule(2, 2, {{"a", 1, 0}, {"b", 1, 1}}),
      simple_rule(3, 2, {{"a", 2, 0}, {"b", 1, 1}}),
      simple_rule(2, 3, {{"a", 2, 2}, {"b", 2, 1}}),
      simple_rule(4, 1, {{"a", 3, 0}, {"b", 2, 0}}),
      simple_rule(4, 2, {{"a", 3, 0}, {"b", 2, 1}}),
  };
  for (const auto& rule : rules) {
    Rational group_order(factorial(rule.n) * int_pow(rule.k, rule.n));
    for (const auto& gamma : enumerate_tuples(rule.n, rule.k)) {
      Laurent everything(rule.k, rule.vars), after_psi(rule.k, rule.vars),
          after_psi_prime(rule.k, rule.vars);
      for (const auto& obj : enumerate_objects(gamma, rule)) {
        Laurent w = object_weight(obj, rule);
        everything += w;
        if (!is_psi_fixed(obj)) continue;
        after_psi += w;
        if (is_psi_prime_fixed(obj, rule)) after_psi_prime += w;
      }
      Laurent target = ssyt_k_sum(gamma, rule).scaled(group_order);
      CHECK(everything == target);
      CHECK(after_psi == target);
      CHECK(after_psi_prime == target);
    }
  }
}

namespace {

// The worked n = 8, k = 3 object on shape ((2,1),(2,2),(1)).
struct WorkedExample {
  ColorRule rule;
  PartitionTuple gamma;
  InvolutionObject object;

  WorkedExample()
      : rule(8, 3, {"x", "y", "z"},
             {ColorSpec("f1", 6, 1, Laurent::monomial(3, {"x", "y", "z"}, {1, 0, 0}, Rational(1))),
              ColorSpec("f2", 1, 2, Laurent::monomial(3, {"x", "y", "z"}, {0, 1, 0}, Rational(1))),
              ColorSpec("f3", 1, 0, Laurent::monomial(3, {"x", "y", "z"}, {0, 0, 1}, Rational(1)))}),
        gamma(3, {Partition({2, 1}), Partition({2, 2}), Partition({1})}) {
    object.shape = gamma;
    // canonical cell order: comp0 (1,1),(1,2),(2,1); comp1 (1,1),(1,2),(2,1),(2,2); comp2 (1,1)
    struct Fill {
      int index, root, color;
    };
    std::vector<Fill> fills = {{7, 2, 0}, {8, 1, 0}, {5, 1, 1}, {3, 2, 0},
                               {4, 0, 0}, {2, 0, 0}, {6, 1, 0}, {1, 0, 2}};
    int id = 0;
    for (int c = 0; c < gamma.k; ++c)
      for (int r = 1; r <= gamma.comps[c].length(); ++r)
        for (int j = 1; j <= gamma.comps[c].row(r); ++j) {
          ObjectCell cell;
          cell.comp = c;
          cell.row = r;
          cell.col = j;
          cell.grow = gamma.global_row(c, r);
          cell.gcol = gamma.global_col(c, j);
          cell.index = fills[id].index;
          cell.root = fills[id].root;
          cell.color = {fills[id].color};
          object.cells.push_back(cell);
          id++;
        }
    object.hooks = {{0, 1}, {2}, {3}, {5, 6, 4}, {7}};
  }
};

}  // namespace

TEST_CASE("worked example: weight and involution image") {
  WorkedExample ex;
  REQUIRE(is_valid_object(ex.object, ex.rule));

  // (-1)^1 u_2 x^6 y z, assembled from the per-cell formula by hand
  Laurent expected =
      -Laurent::monomial(3, {"x", "y", "z"}, {6, 1, 1}, Cyclotomic::root(3, 2));
  CHECK(object_weight(ex.object, ex.rule) == expected);

  // psi disconnects the hook through 4 from above and joins it to u_2 3
  auto image = psi(ex.object);
  CHECK_FALSE(image == ex.object);
  InvolutionObject target = ex.object;
  target.hooks = {{0, 1}, {2}, {3, 4}, {5, 6}, {7}};
  CHECK(image == target);
  CHECK(object_weight(image, ex.rule) == -expected);
  CHECK(psi(image) == ex.object);

  // frozen grid rendering: one bracketed cell per entry, '-' joining
  // east steps of a hook and '|' marking its south steps
  auto strip_trailing = [](const std::string& text) {
    std::string out;
    std::string line;
    for (char ch : text) {
      if (ch == '\n') {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
        line.clear();
      } else {
        line += ch;
      }
    }
    return out;
  };
  std::string expected_art =
      "[u1 5/f2  ]\n"
      "\n"
      "[u2 7/f1  -[u1 8/f1  ]\n"
      "\n"
      "                      [u0 2/f1  -[u1 6/f1  ]\n"
      "                                      |\n"
      "                      [u2 3/f1  ][u0 4/f1  ]\n"
      "\n"
      "                                            [u0 1/f3  ]\n";
  CHECK(strip_trailing(render_object(ex.object, ex.rule)) == expected_art);
  std::string flipped_art =
      "[u1 5/f2  ]\n"
      "\n"
      "[u2 7/f1  -[u1 8/f1  ]\n"
      "\n"
      "                      [u0 2/f1  -[u1 6/f1  ]\n"
      "\n"
      "                      [u2 3/f1  -[u0 4/f1  ]\n"
      "\n"
      "                                            [u0 1/f3  ]\n";
  CHECK(strip_trailing(render_object(image, ex.rule)) == flipped_art);
}

TEST_CASE("order-3 orbit of the root-bumping map") {
  // shape ((2,1),(),()) with colors [f1^2, f2], p(f_i) = i
  ColorRule rule = simple_rule(3, 3, {{"f1", 2, 1}, {"f2", 1, 2}});
  PartitionTuple gamma(3, {Partition({2, 1}), Partition{}, Partition{}});
  InvolutionObject obj;
  obj.shape = gamma;
  struct Fill {
    int index, root, color;
  };
  std::vector<Fill> fills = {{1, 0, 0}, {3, 0, 0}, {2, 1, 1}};
  int id = 0;
  for (int r = 1; r <= 2; ++r)
    for (int j = 1; j <= gamma.comps[0].row(r); ++j) {
      ObjectCell cell;
      cell.comp = 0;
      cell.row = r;
      cell.col = j;
      cell.grow = gamma.global_row(0, r);
      cell.gcol = gamma.global_col(0, j);
      cell.index = fills[id].index;
      cell.root = fills[id].root;
      cell.color = {fills[id].color};
      obj.cells.push_back(cell);
      id++;
    }
  obj.hooks = {{0, 1}, {2}};
  REQUIRE(is_valid_object(obj, rule));
  REQUIRE(is_psi_fixed(obj));

  auto u = [](int j) { return Laurent::constant(3, {}, Cyclotomic::root(3, j)); };
  CHECK(object_weight(obj, rule) == u(2));
  auto second = psi_prime(obj, rule);
  CHECK(second.cells[0].root == 1);
  CHECK(object_weight(second, rule) == u(2) * u(1));
  auto third = psi_prime(second, rule);
  CHECK(third.cells[0].root == 2);
  CHECK(object_weight(third, rule) == u(2) * u(1) * u(1));
  CHECK(psi_prime(third, rule) == obj);
  CHECK((object_weight(obj, rule) + object_weight(second, rule) + object_weight(third, rule))
            .is_zero());
}

TEST_CASE("large involution example with iterated merges and cuts") {
  // single-component shape (8,6,3) at k = 6, seventeen cells; the scan finds
  // the cell holding 12 below the end of the hook (3,14,16), absorbs it and
  // then swallows (5,7) and (4,6) eastwards; the inverse re-cuts at the
  // left-to-right minima 5 and 4
  int k = 6;
  Laurent one = Laurent::constant(k, {}, Rational(1));
  ColorRule rule(17, k, {},
                 {ColorSpec("f1", 1, 0, one), ColorSpec("f2", 13, 0, one),
                  ColorSpec("f3", 3, 0, one)});
  std::vector<Partition> comps(k);
  comps[0] = Partition({8, 6, 3});
  PartitionTuple shape(k, comps);

  InvolutionObject obj;
  obj.shape = shape;
  struct Fill {
    int row, col, index, root, color;
  };
  std::vector<Fill> fills = {
      {1, 1, 8, 5, 0},  {1, 2, 10, 3, 1}, {1, 3, 13, 0, 1}, {1, 4, 12, 1, 1}, {1, 5, 5, 0, 1},
      {1, 6, 7, 0, 1},  {1, 7, 4, 2, 1},  {1, 8, 6, 0, 1},  {2, 1, 9, 1, 1},  {2, 2, 3, 2, 1},
      {2, 3, 14, 0, 1}, {2, 4, 16, 3, 1}, {2, 5, 2, 1, 1},  {2, 6, 11, 3, 1}, {3, 1, 1, 1, 2},
      {3, 2, 17, 0, 2}, {3, 3, 15, 2, 2}};
  std::map<std::pair<int, int>, int> id_at;
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= shape.comps[0].row(r); ++c) {
      ObjectCell cell;
      cell.comp = 0;
      cell.row = r;
      cell.col = c;
      cell.grow = shape.global_row(0, r);
      cell.gcol = shape.global_col(0, c);
      for (const auto& f : fills)
        if (f.row == r && f.col == c) {
          cell.index = f.index;
          cell.root = f.root;
          cell.color = {f.color};
        }
      id_at[{r, c}] = static_cast<int>(obj.cells.size());
      obj.cells.push_back(cell);
    }
  auto ids = [&](std::vector<std::pair<int, int>> cells) {
    std::vector<int> out;
    for (auto rc : cells) out.push_back(id_at.at(rc));
    return out;
  };
  obj.hooks = {ids({{3, 1}, {3, 2}, {3, 3}}),
               ids({{2, 1}}),
               ids({{2, 2}, {2, 3}, {2, 4}}),
               ids({{2, 5}, {2, 6}}),
               ids({{1, 1}}),
               ids({{1, 2}, {1, 3}, {1, 4}}),
               ids({{1, 5}, {1, 6}}),
               ids({{1, 7}, {1, 8}})};
  std::sort(obj.hooks.begin(), obj.hooks.end());
  REQUIRE(is_valid_object(obj, rule));

  InvolutionObject target = obj;
  target.hooks = {ids({{3, 1}, {3, 2}, {3, 3}}),
                  ids({{2, 1}}),
                  ids({{2, 2}, {2, 3}, {2, 4}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}}),
                  ids({{2, 5}, {2, 6}}),
                  ids({{1, 1}}),
                  ids({{1, 2}, {1, 3}})};
  std::sort(target.hooks.begin(), target.hooks.end());

  auto image = psi(obj);
  CHECK(image == target);
  CHECK(is_valid_object(image, rule));
  CHECK(psi(image) == obj);
  CHECK(object_weight(image, rule) == -object_weight(obj, rule));
}

TEST_CASE("final fixed points biject with tableaux times the group") {
  auto rule = simple_rule(2, 2, {{"f1", 1, 0}, {"f2", 1, 1}});
  PartitionTuple gamma(2, {Partition({1}), Partition({1})});
  auto finals = final_fixed_points(gamma, rule);
  auto tableaux = enumerate_ssyt_k(gamma, rule);
  REQUIRE(tableaux.size() == 1);
  CHECK(finals.size() == 8);  // 2! * 2^2 * 1

  std::set<InvolutionObject> final_set(finals.begin(), finals.end());
  std::set<InvolutionObject> produced;
  for (const auto& sigma : enumerate_group(2, 2)) {
    auto obj = reconstruct(gamma, rule, tableaux[0].first, sigma);
    CHECK(final_set.count(obj) == 1);
    // weight only depends on the colors
    CHECK(object_weight(obj, rule) == tableaux[0].second);
    auto [colors, back] = deconstruct(obj, rule);
    CHECK(colors == tableaux[0].first);
    CHECK(back == sigma);
    produced.insert(obj);
  }
  CHECK(produced.size() == finals.size());
}

TEST_CASE("reconstruction round trip across rules and shapes") {
  std::vector<ColorRule> rules = {
      simple_rule(3, 2, {{"a", 2, 0}, {"b", 2, 1}}),
      simple_rule(3, 1, {{"a", 2, 0}, {"b", 1, 0}}),
      simple_rule(2, 3, {{"a", 1, 1}, {"b", 1, 2}}),
  };
  for (const auto& rule : rules) {
    auto group = enumerate_group(rule.n, rule.k);
    for (const auto& gamma : enumerate_tuples(rule.n, rule.k)) {
      auto tableaux = enumerate_ssyt_k(gamma, rule);
      auto finals = final_fixed_points(gamma, rule);
      CHECK(finals.size() == tableaux.size() * group.size());
      std::set<InvolutionObject> produced;
      for (const auto& [colors, rho] : tableaux) {
        for (const auto& sigma : group) {
          auto obj = reconstruct(gamma, rule, colors, sigma);
          CHECK(is_valid_object(obj, rule));
          CHECK(is_psi_fixed(obj));
          CHECK(is_psi_prime_fixed(obj, rule));
          CHECK(object_weight(obj, rule) == rho);
          auto [c2, s2] = deconstruct(obj, rule);
          CHECK(c2 == colors);
          CHECK(s2 == sigma);
          produced.insert(obj);
        }
      }
      CHECK(produced.size() == finals.size());
    }
  }
}
