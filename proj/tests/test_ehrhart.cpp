#include <map>
#include <set>

#include "doctest.h"
#include "wreath/ehrhart.hpp"

using namespace wreath;

namespace {

// classical descent statistics of a standard tableau, French convention
std::pair<long long, long long> des_comaj(const Tableau& t) {
  int n = t.shape.size();
  std::map<int, int> row_of;
  for (size_t r = 0; r < t.entries[0].size(); ++r)
    for (int e : t.entries[0][r]) row_of[e] = static_cast<int>(r);
  long long des = 0, comaj = 0;
  for (int i = 1; i < n; ++i) {
    if (row_of[i + 1] > row_of[i]) {
      des++;
      comaj += n - i;
    }
  }
  return {des, comaj};
}

ColoredPermutation nth_element_of(int n, int k, const std::vector<int>& img,
                                  const std::vector<int>& col) {
  return ColoredPermutation(n, k, img, col);
}

}  // namespace

TEST_CASE("lattice point scans") {
  auto d2 = lattice_points(HPolytope::simplex(2), 1);
  CHECK(d2 == std::vector<std::vector<long long>>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(lattice_points(HPolytope::cross(2), 1).size() == 5);
  for (int d = 0; d <= 6; ++d) CHECK(lattice_points(HPolytope::simplex(1), d).size() == d + 1);
  CHECK(lattice_points(HPolytope::cube(2), 2).size() == 9);
  // unbounded input is rejected
  CHECK_THROWS(HPolytope(1, {{{Rational(1)}, Rational(1)}}));
}

TEST_CASE("refined Ehrhart polynomials of simplices are q-binomials") {
  for (int m = 1; m <= 3; ++m) {
    std::vector<long long> weight;
    for (int i = 1; i <= m; ++i) weight.push_back(i);
    auto p = HPolytope::simplex(m);
    for (int i = 0; i <= 5; ++i)
      CHECK(refined_ehrhart(p, weight, i) == q_binomial(i + m, m));
  }
  CHECK(q_binomial(4, 2) == parse_laurent("1 + q + 2*q^2 + q^3 + q^4", 1, {"q"}));
}

TEST_CASE("cross polytope recurrence") {
  auto p = HPolytope::cross(2);
  std::vector<long long> w = {1, 1};
  CHECK(refined_ehrhart(p, w, 1) == parse_laurent("2*q^-1 + 1 + 2*q", 1, {"q"}));
  for (int d = 1; d <= 6; ++d) {
    Laurent rhs = refined_ehrhart(p, w, d - 1);
    rhs += (Laurent::var_power(1, "q", -d) + Laurent::var_power(1, "q", d))
               .scaled(Rational(d + 1));
    for (int e = -d + 2; e <= d - 2; e += 2)
      rhs += Laurent::var_power(1, "q", e).scaled(Rational(2));
    CHECK(refined_ehrhart(p, w, d) == rhs);
  }
}

TEST_CASE("q = 1 specialisation counts points") {
  std::vector<HPolytope> ps = {HPolytope::simplex(2), HPolytope::cross(2), HPolytope::cube(2),
                               HPolytope::simplex(3)};
  for (const auto& p : ps) {
    std::vector<long long> w(p.dim());
    for (int i = 0; i < p.dim(); ++i) w[i] = i + 1;
    for (int d = 0; d <= 4; ++d) {
      Laurent at1 = refined_ehrhart(p, w, d).set_var_to_one("q");
      CHECK(at1 == Laurent::constant(1, {"q"}, Rational(lattice_points(p, d).size())));
    }
  }
}

TEST_CASE("module characters") {
  // k = 1, identity class: the t^d coefficient is L_{P,d}(q)^n
  auto p = HPolytope::cross(2);
  std::vector<long long> w = {1, 1};
  int n = 2, tmax = 3;
  PartitionTuple identity(1, {Partition({1, 1})});
  Laurent chi = module_character(p, n, 1, w, identity, tmax);
  for (int d = 0; d <= tmax; ++d) {
    Laurent expect = refined_ehrhart(p, w, d).pow(n);
    CHECK(chi.coeff_of("t", d) == expect);
  }

  // P = Delta_1, n = 1, k = 2, class ((),(1)): sum_v u_1^v q^v
  auto seg = HPolytope::segment();
  PartitionTuple neg(2, {Partition{}, Partition({1})});
  Laurent chi2 = module_character(seg, 1, 2, {1}, neg, 4);
  for (int d = 0; d <= 4; ++d) {
    Laurent expect(2, {"q"});
    for (int v = 0; v <= d; ++v)
      expect += Laurent::monomial(2, {"q"}, {v}, Cyclotomic::root(2, v));
    CHECK(chi2.coeff_of("t", d) == expect);
  }

  // the module character is the generating series of the polytope rules
  for (const auto& lambda : enumerate_tuples(2, 2)) {
    Laurent lhs = module_character(seg, 2, 2, {1}, lambda, 3);
    for (int d = 0; d <= 3; ++d)
      CHECK(lhs.coeff_of("t", d) == evaluate(polytope_rule(seg, 2, 2, {1}, d), lambda));
  }
}

TEST_CASE("frobenius decomposition against schur expansions") {
  // P = Delta_1, k = 1: multiplicity of s_lambda at t^i is s_lambda[[i+1]_q]
  auto seg = HPolytope::segment();
  int n = 3, tmax = 4;
  auto dec = frobenius_decompose(seg, n, 1, {1}, tmax);
  for (const auto& lambda : enumerate_partitions(n)) {
    const Laurent& mult = dec.at(PartitionTuple(1, {lambda}));
    for (int i = 0; i <= tmax; ++i) {
      std::vector<Laurent> alphabet;
      for (int v = 0; v <= i; ++v) alphabet.push_back(Laurent::var_power(1, "q", v));
      CHECK(mult.coeff_of("t", i) == schur_poly(lambda, alphabet));
    }
  }

  // the trivial shape appears once at t^0
  auto cross = frobenius_decompose(HPolytope::cross(2), 2, 1, {1, 1}, 1);
  CHECK(cross.at(PartitionTuple(1, {Partition({2})})).coeff({0, 0}) == Cyclotomic::one(1));
}

TEST_CASE("graded dimension counts") {
  // summing multiplicities against character dimensions recovers the t^d
  // coefficient of the identity-class module character, L_{P,d}(q)^n
  auto seg = HPolytope::segment();
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    int tmax = 3;
    auto dec = frobenius_decompose(seg, n, k, {1}, tmax);
    CharacterTable table(n, k);
    for (int d = 0; d <= tmax; ++d) {
      Laurent total(k, {"q"});
      for (const auto& [gamma, mult] : dec.multiplicities)
        total += mult.coeff_of("t", d).scaled(Rational(table.dimension(gamma)));
      Laurent expect = refined_ehrhart(seg, {1}, d).pow(n);
      // the k = 1 Ehrhart ring re-embeds into the k-th cyclotomic field
      Laurent expect_k(k, {"q"});
      for (const auto& [e, c] : expect.terms())
        expect_k += Laurent::monomial(k, {"q"}, e, c.to_rational());
      CHECK(total == expect_k);
    }
  }
}

TEST_CASE("misprint guard: the cross polytope s_{1,1} coefficient") {
  // a published variant of this value has constant term 6; both independent
  // routes here give 4
  auto dec = frobenius_decompose(HPolytope::cross(2), 2, 1, {1, 1}, 2);
  Laurent coeff = dec.at(PartitionTuple(1, {Partition({1, 1})})).coeff_of("t", 1);
  Laurent derived = parse_laurent("q^-2 + 2*q^-1 + 4 + 2*q + q^2", 1, {"q"});
  CHECK(coeff == derived);

  // route 1: e_2 over the five lattice-point monomials
  std::vector<Laurent> alphabet;
  for (const auto& v : lattice_points(HPolytope::cross(2), 1))
    alphabet.push_back(Laurent::var_power(1, "q", static_cast<int>(v[0] + v[1])));
  CHECK(schur_poly(Partition({1, 1}), alphabet) == derived);

  // route 2: the h_d[2(q + 1/q - eps) - 1] formula with eps evaluated at -1,
  // expanded as h_d[X] + h_{d-1}[X] - h_{d-2}[X] - h_{d-3}[X] over
  // X = {q, q, 1/q, 1/q}
  std::vector<Laurent> X = {Laurent::var_power(1, "q", 1), Laurent::var_power(1, "q", 1),
                            Laurent::var_power(1, "q", -1), Laurent::var_power(1, "q", -1)};
  auto h = [&](int d) {
    if (d < 0) return Laurent(1, {"q"});
    if (d == 0) return Laurent::constant(1, {"q"}, Rational(1));
    return schur_poly(Partition({d}), X);
  };
  auto L_eps = [&](int d) { return h(d) + h(d - 1) - h(d - 2) - h(d - 3); };
  for (int d = 0; d <= 4; ++d) CHECK(L_eps(d) == refined_ehrhart(HPolytope::cross(2), {1, 1}, d));
  Laurent formula = (L_eps(1) * L_eps(1) - L_eps(1).stretch("q", 2)).scaled(Rational(1) / 2);
  CHECK(formula == derived);
}

TEST_CASE("wreath statistics on tableaux") {
  // the k = 3 figure-shape tableau with W = (0,0,2,5,6,6,8,11)
  Tableau t;
  t.shape = PartitionTuple(3, {Partition({3, 1}), Partition{}, Partition({2, 2})});
  t.entries = {{{1, 2, 6}, {5}}, {}, {{3, 7}, {4, 8}}};
  auto stats = wreath_stats_tableau(t);
  CHECK(stats.labels == std::vector<long long>{0, 0, 2, 5, 6, 6, 8, 11});
  CHECK(stats.wcomaj == 38);
  CHECK(stats.wdes == 11);

  // k = 1 single row: all zero
  Tableau row;
  row.shape = PartitionTuple(1, {Partition({4})});
  row.entries = {{{1, 2, 3, 4}}};
  CHECK(wreath_stats_tableau(row).wdes == 0);
  CHECK(wreath_stats_tableau(row).wcomaj == 0);

  // k = 1 single column: W = (0,1,...,n-1)
  Tableau col;
  col.shape = PartitionTuple(1, {Partition({1, 1, 1, 1})});
  col.entries = {{{1}, {2}, {3}, {4}}};
  auto cs = wreath_stats_tableau(col);
  CHECK(cs.labels == std::vector<long long>{0, 1, 2, 3});
  CHECK(cs.wdes == 3);
  CHECK(cs.wcomaj == 6);

  // W is weakly increasing on every standard tableau
  for (const auto& gamma : enumerate_tuples(4, 2))
    for (const auto& syt : enumerate_syt(gamma)) {
      auto w = wreath_stats_tableau(syt).labels;
      CHECK(std::is_sorted(w.begin(), w.end()));
    }
}

TEST_CASE("wreath statistics on colored permutations") {
  // k = 1 reduces to classical des and comaj
  for (const auto& sigma : enumerate_group(4, 1)) {
    auto stats = wreath_stats_perm(sigma);
    long long des = 0, comaj = 0;
    for (int i = 1; i < 4; ++i)
      if (sigma.images[i - 1] > sigma.images[i]) {
        des++;
        comaj += 4 - i;
      }
    CHECK(stats.wdes == des);
    CHECK(stats.wcomaj == comaj);
  }

  CHECK(wreath_stats_perm(ColoredPermutation::identity(3, 3)).wdes == 0);
  CHECK(wreath_stats_perm(ColoredPermutation::identity(3, 3)).wcomaj == 0);

  // joint distribution matches tableau pairs via SYT counts
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}}) {
    std::map<std::pair<long long, long long>, long long> group_side, tableau_side;
    for (const auto& sigma : enumerate_group(n, k)) {
      auto stats = wreath_stats_perm(sigma);
      group_side[{stats.wdes, stats.wcomaj}]++;
    }
    for (const auto& gamma : enumerate_tuples(n, k)) {
      auto syts = enumerate_syt(gamma);
      for (const auto& q : syts) {
        auto stats = wreath_stats_tableau(q);
        tableau_side[{stats.wdes, stats.wcomaj}] += static_cast<long long>(syts.size());
      }
    }
    CHECK(group_side == tableau_side);
  }
}

TEST_CASE("colored RSK") {
  // k = 1: classical row insertion; spot check a known pair
  auto [p, q] = colored_rsk(nth_element_of(4, 1, {3, 1, 4, 2}, {0, 0, 0, 0}));
  CHECK(p.entries[0] == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK(q.entries[0] == std::vector<std::vector<int>>{{1, 3}, {2, 4}});

  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}, {4, 2}}) {
    std::set<std::pair<Tableau, Tableau>> images;
    long long count = 0;
    for (const auto& sigma : enumerate_group(n, k)) {
      auto [P, Q] = colored_rsk(sigma);
      CHECK(P.shape == Q.shape);
      CHECK(is_semistandard(P));
      CHECK(is_semistandard(Q));
      // statistic preservation, pointwise
      auto perm_stats = wreath_stats_perm(sigma);
      auto q_stats = wreath_stats_tableau(Q);
      CHECK(perm_stats.wdes == q_stats.wdes);
      CHECK(perm_stats.wcomaj == q_stats.wcomaj);
      images.insert({P, Q});
      count++;
    }
    CHECK(static_cast<long long>(images.size()) == count);  // injective

    // shape statistics: sum over gamma of |SYT(gamma)|^2 = |group|
    long long sq = 0;
    for (const auto& gamma : enumerate_tuples(n, k)) {
      long long s = static_cast<long long>(enumerate_syt(gamma).size());
      sq += s * s;
    }
    CHECK(sq == count);
  }
}

TEST_CASE("equivariant Euler-Mahonian identities") {
  // n = 1, k = 1: numerator 1
  auto r1 = verify_euler_mahonian(PartitionTuple(1, {Partition({1})}), 5);
  CHECK(r1.ok());
  CHECK(r1.numerator == Laurent::constant(1, {"q", "t"}, Rational(1)));

  // n = 2, k = 1, gamma = (1,1): numerator t q
  auto r2 = verify_euler_mahonian(PartitionTuple(1, {Partition({1, 1})}), 4);
  CHECK(r2.ok());
  CHECK(r2.numerator == Laurent::monomial(1, {"q", "t"}, {1, 1}, Rational(1)));

  // all shapes at n <= 3, k <= 3 (the acceptance suite runs n <= 4, t^8)
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 3; ++k) {
      for (const auto& gamma : enumerate_tuples(n, k)) {
        auto report = verify_euler_mahonian(gamma, 6);
        CHECK(report.ok());
        if (k == 1) {
          // the numerator is the classical descent/comajor generating sum
          Laurent classical(1, {"q", "t"});
          for (const auto& t : enumerate_syt(gamma)) {
            auto [des, comaj] = des_comaj(t);
            classical += Laurent::monomial(1, {"q", "t"},
                                           {static_cast<int>(comaj), static_cast<int>(des)},
                                           Rational(1));
          }
          CHECK(report.numerator == classical);
        }
      }
    }
  }
}
