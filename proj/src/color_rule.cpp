#include "wreath/color_rule.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "json.hpp"
#include "wreath/parallel.hpp"

namespace wreath {

ColorSpec::ColorSpec(std::string id_, int mult, long long value_, Laurent weight_)
    : id(std::move(id_)), multiplicity(mult), value(value_), weight(std::move(weight_)) {
  if (multiplicity < 1) throw std::invalid_argument("color multiplicity must be >= 1");
}

ColorRule::ColorRule(int n_, int k_, std::vector<std::string> vars_, std::vector<ColorSpec> colors)
    : ColorRule(n_, k_, std::move(vars_), std::vector<std::vector<ColorSpec>>{std::move(colors)}) {}

ColorRule::ColorRule(int n_, int k_, std::vector<std::string> vars_,
                     std::vector<std::vector<ColorSpec>> factors_)
    : n(n_), k(k_), vars(std::move(vars_)), factors(std::move(factors_)) {
  if (n < 0 || k < 1) throw std::invalid_argument("bad rule parameters");
  if (factors.empty()) throw std::invalid_argument("rule needs at least one factor");
  for (const auto& f : factors) {
    if (f.empty()) throw std::invalid_argument("factor needs at least one color");
    for (const auto& c : f)
      if (c.weight.vars() != vars || c.weight.order() != k)
        throw std::invalid_argument("color weight ring mismatch");
  }
}

long long ColorRule::value(const Color& c) const {
  long long v = 0;
  for (size_t f = 0; f < factors.size(); ++f) v += factors[f][c[f]].value;
  return v;
}

Laurent ColorRule::weight(const Color& c) const {
  Laurent w = Laurent::constant(k, vars, Rational(1));
  for (size_t f = 0; f < factors.size(); ++f) w *= factors[f][c[f]].weight;
  return w;
}

std::string ColorRule::color_id(const Color& c) const {
  if (factors.size() == 1) return factors[0][c[0]].id;
  std::string s = "(";
  for (size_t f = 0; f < factors.size(); ++f) {
    if (f) s += ",";
    s += factors[f][c[f]].id;
  }
  return s + ")";
}

ColorRule ColorRule::with_vars(const std::vector<std::string>& newvars) const {
  std::vector<std::vector<ColorSpec>> nf = factors;
  for (auto& f : nf)
    for (auto& c : f) c.weight = c.weight.with_vars(newvars);
  return ColorRule(n, k, newvars, std::move(nf));
}

std::string ColorRule::json_str() const {
  if (factors.size() != 1)
    throw std::invalid_argument("JSON form covers single-factor rules only");
  nlohmann::json j;
  j["n"] = n;
  j["k"] = k;
  j["vars"] = vars;
  j["colors"] = nlohmann::json::array();
  for (const auto& c : factors[0])
    j["colors"].push_back({{"id", c.id},
                           {"mult", c.multiplicity},
                           {"value", c.value},
                           {"weight", c.weight.str()}});
  return j.dump();
}

ColorRule parse_color_rule_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  int n = j.at("n").get<int>();
  int k = j.at("k").get<int>();
  std::vector<std::string> vars = j.value("vars", std::vector<std::string>{"q"});
  std::vector<ColorSpec> colors;
  for (const auto& c : j.at("colors")) {
    colors.push_back(ColorSpec(c.at("id").get<std::string>(), c.at("mult").get<int>(),
                               c.at("value").get<long long>(),
                               parse_laurent(c.at("weight").get<std::string>(), k, vars)));
  }
  return ColorRule(n, k, std::move(vars), std::move(colors));
}

ColorRule product(const ColorRule& f, const ColorRule& g) {
  if (f.n != g.n || f.k != g.k) throw std::invalid_argument("product: mismatched rules");
  if (f.vars != g.vars)
    throw std::invalid_argument("product: align variable lists explicitly first");
  std::vector<std::vector<ColorSpec>> factors = f.factors;
  factors.insert(factors.end(), g.factors.begin(), g.factors.end());
  return ColorRule(f.n, f.k, f.vars, std::move(factors));
}

namespace {

// Shared bookkeeping for tuple-color enumeration: per-factor remaining
// multiplicities plus a least-required-usage deficit used to cut branches
// that can no longer place every mandatory copy.
struct Pool {
  const ColorRule& rule;
  int total;  // copies consumed per factor over a complete object (= n)
  std::vector<std::vector<int>> rem;     // rem[f][i]
  std::vector<std::vector<int>> minreq;  // lower bound on total usage
  std::vector<int> deficit;              // per factor
  std::vector<int> copies_left;          // per factor
  bool feasible = true;

  explicit Pool(const ColorRule& r) : rule(r), total(r.n) {
    for (const auto& f : r.factors) {
      int sum = 0;
      for (const auto& c : f) sum += c.multiplicity;
      std::vector<int> rm, mr;
      int def = 0;
      for (const auto& c : f) {
        rm.push_back(c.multiplicity);
        int need = std::max(0, total - (sum - c.multiplicity));
        if (need > c.multiplicity) feasible = false;
        mr.push_back(need);
        def += need;
      }
      rem.push_back(std::move(rm));
      minreq.push_back(std::move(mr));
      deficit.push_back(def);
      copies_left.push_back(total);
    }
  }

  bool can_take(int f, int i, int copies) const { return rem[f][i] >= copies; }

  // Consume `copies` of spec i at factor f (the caller checks can_take);
  // false when the mandatory-usage deficit can no longer be met, in which
  // case the caller still owes a matching give().
  bool take(int f, int i, int copies) {
    int old_short = std::max(0, minreq[f][i] - (rule.factors[f][i].multiplicity - rem[f][i]));
    rem[f][i] -= copies;
    int new_short = std::max(0, minreq[f][i] - (rule.factors[f][i].multiplicity - rem[f][i]));
    deficit[f] += new_short - old_short;
    copies_left[f] -= copies;
    return deficit[f] <= copies_left[f];
  }

  void give(int f, int i, int copies) {
    int old_short = std::max(0, minreq[f][i] - (rule.factors[f][i].multiplicity - rem[f][i]));
    rem[f][i] += copies;
    int new_short = std::max(0, minreq[f][i] - (rule.factors[f][i].multiplicity - rem[f][i]));
    deficit[f] += new_short - old_short;
    copies_left[f] += copies;
  }
};

}  // namespace

std::vector<std::tuple<int, int, int>> cell_order(const PartitionTuple& shape) {
  std::vector<std::tuple<int, int, int>> cells;
  for (int c = 0; c < shape.k; ++c)
    for (int r = 1; r <= shape.comps[c].length(); ++r)
      for (int j = 1; j <= shape.comps[c].row(r); ++j) cells.push_back({c, r, j});
  return cells;
}

namespace {

struct SsytKDfs {
  const PartitionTuple& gamma;
  const ColorRule& rule;
  Pool pool;
  std::vector<std::tuple<int, int, int>> cells;
  std::vector<int> below;  // index of the cell underneath, or -1
  std::vector<ColorRule::Color> colors;
  std::vector<Laurent> rho_stack;
  std::vector<std::vector<bool>> weight_is_one;
  const std::function<void(const std::vector<ColorRule::Color>&, const Laurent&)>& fn;
  int F;

  SsytKDfs(const PartitionTuple& g, const ColorRule& r,
           const std::function<void(const std::vector<ColorRule::Color>&, const Laurent&)>& f)
      : gamma(g), rule(r), pool(r), cells(cell_order(g)), fn(f), F(r.num_factors()) {
    std::map<std::tuple<int, int, int>, int> where;
    for (size_t i = 0; i < cells.size(); ++i) where[cells[i]] = static_cast<int>(i);
    for (const auto& cell : cells) {
      auto [c, row, col] = cell;
      auto it = row > 1 ? where.find({c, row - 1, col}) : where.end();
      below.push_back(it == where.end() ? -1 : it->second);
    }
    colors.assign(cells.size(), ColorRule::Color(F, 0));
    rho_stack.push_back(Laurent::constant(rule.k, rule.vars, Rational(1)));
    Laurent one = Laurent::constant(rule.k, rule.vars, Rational(1));
    for (const auto& factor : rule.factors) {
      std::vector<bool> ones;
      for (const auto& spec : factor) ones.push_back(spec.weight == one);
      weight_is_one.push_back(std::move(ones));
    }
  }

  void run() {
    if (!pool.feasible) return;
    cell(0);
  }

  void cell(size_t idx) {
    if (idx == cells.size()) {
      fn(colors, rho_stack.back());
      return;
    }
    auto [comp, row, col] = cells[idx];
    const ColorRule::Color* bound = nullptr;
    bool strict = false;
    if (col > 1) bound = &colors[idx - 1];
    if (int b = below[idx]; b >= 0) {
      // The below bound is strict; it dominates unless the left bound is
      // already lexicographically larger.
      if (bound == nullptr || !(*bound > colors[b])) {
        bound = &colors[b];
        strict = true;
      }
    }
    ColorRule::Color cur(F, 0);
    tuple_step(idx, comp, 0, true, bound, strict, 0, cur);
  }

  void tuple_step(size_t idx, int comp, int f, bool tight, const ColorRule::Color* bound,
                  bool strict, long long value_sum, ColorRule::Color& cur) {
    if (f == F) {
      if (tight && strict && bound != nullptr) return;  // equals a strict bound
      long long r = ((value_sum % rule.k) + rule.k) % rule.k;
      if (r != comp) return;
      colors[idx] = cur;
      Laurent rho = rho_stack.back();
      for (int ff = 0; ff < F; ++ff)
        if (!weight_is_one[ff][cur[ff]]) rho *= rule.factors[ff][cur[ff]].weight;
      rho_stack.push_back(std::move(rho));
      cell(idx + 1);
      rho_stack.pop_back();
      return;
    }
    int start = (tight && bound != nullptr) ? (*bound)[f] : 0;
    int count = static_cast<int>(rule.factors[f].size());
    for (int i = start; i < count; ++i) {
      if (!pool.can_take(f, i, 1)) continue;
      if (pool.take(f, i, 1)) {
        cur[f] = i;
        bool next_tight = tight && bound != nullptr && i == (*bound)[f];
        tuple_step(idx, comp, f + 1, next_tight, bound, strict, value_sum + rule.factors[f][i].value,
                   cur);
      }
      pool.give(f, i, 1);
    }
  }
};

}  // namespace

void for_each_ssyt_k(const PartitionTuple& gamma, const ColorRule& rule,
                     const std::function<void(const std::vector<ColorRule::Color>&,
                                              const Laurent&)>& fn) {
  if (gamma.size() != rule.n || gamma.k != rule.k)
    throw std::invalid_argument("for_each_ssyt_k: shape does not match rule");
  SsytKDfs dfs(gamma, rule, fn);
  dfs.run();
}

std::vector<std::pair<std::vector<ColorRule::Color>, Laurent>> enumerate_ssyt_k(
    const PartitionTuple& gamma, const ColorRule& rule) {
  std::vector<std::pair<std::vector<ColorRule::Color>, Laurent>> out;
  for_each_ssyt_k(gamma, rule, [&](const std::vector<ColorRule::Color>& colors, const Laurent& rho) {
    out.push_back({colors, rho});
  });
  return out;
}

Laurent ssyt_k_sum(const PartitionTuple& gamma, const ColorRule& rule) {
  Laurent total(rule.k, rule.vars);
  for_each_ssyt_k(gamma, rule,
                  [&](const std::vector<ColorRule::Color>&, const Laurent& rho) { total += rho; });
  return total;
}

bool is_valid_ssyt_k(const PartitionTuple& gamma, const ColorRule& rule,
                     const std::vector<ColorRule::Color>& colors) {
  auto cells = cell_order(gamma);
  if (colors.size() != cells.size()) return false;
  std::map<std::tuple<int, int, int>, int> where;
  for (size_t i = 0; i < cells.size(); ++i) where[cells[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> used(rule.factors.size());
  for (size_t f = 0; f < rule.factors.size(); ++f) used[f].assign(rule.factors[f].size(), 0);
  for (size_t i = 0; i < cells.size(); ++i) {
    auto [comp, row, col] = cells[i];
    if (static_cast<int>(colors[i].size()) != rule.num_factors()) return false;
    long long r = ((rule.value(colors[i]) % rule.k) + rule.k) % rule.k;
    if (r != comp) return false;
    for (size_t f = 0; f < rule.factors.size(); ++f) {
      int spec = colors[i][f];
      if (spec < 0 || spec >= static_cast<int>(rule.factors[f].size())) return false;
      if (++used[f][spec] > rule.factors[f][spec].multiplicity) return false;
    }
    if (col > 1 && colors[i] < colors[i - 1]) return false;
    if (row > 1) {
      auto it = where.find({comp, row - 1, col});
      if (it != where.end() && !(colors[i] > colors[it->second])) return false;
    }
  }
  return true;
}

namespace {

// Cycle slots of a class: (length, component) pairs in a fixed order.
std::vector<std::pair<int, int>> class_cycles(const PartitionTuple& lambda) {
  std::vector<std::pair<int, int>> cycles;
  for (int j = 0; j < lambda.k; ++j)
    for (int len : lambda.comps[j].parts) cycles.push_back({len, j});
  return cycles;
}

struct EvaluateDfs {
  const ColorRule& rule;
  std::vector<std::pair<int, int>> cycles;
  Pool pool;
  Laurent total;
  Laurent one;
  std::vector<std::vector<bool>> weight_is_one;

  // When every weight is a coefficient-1 monomial (all the named rule
  // families), assignments are tallied as integer data and converted to a
  // polynomial once at the end; the generic path multiplies Laurents.
  bool fast = true;
  std::vector<std::vector<Laurent::Exps>> mono;
  Laurent::Exps exps_acc;
  std::map<std::pair<Laurent::Exps, int>, long long> counts;

  EvaluateDfs(const ColorRule& r, std::vector<std::pair<int, int>> cycles_)
      : rule(r),
        cycles(std::move(cycles_)),
        pool(r),
        total(r.k, r.vars),
        one(Laurent::constant(r.k, r.vars, Rational(1))),
        exps_acc(r.vars.size(), 0) {
    Cyclotomic unit = Cyclotomic::one(rule.k);
    for (const auto& factor : rule.factors) {
      std::vector<bool> ones;
      std::vector<Laurent::Exps> ms;
      for (const auto& spec : factor) {
        ones.push_back(spec.weight == one);
        if (spec.weight.terms().size() == 1 && spec.weight.terms().begin()->second == unit)
          ms.push_back(spec.weight.terms().begin()->first);
        else
          fast = false;
      }
      weight_is_one.push_back(std::move(ones));
      if (fast) mono.push_back(std::move(ms));
    }
  }

  void run() {
    if (!pool.feasible) return;
    if (fast) {
      fcycle(0, 0);
      for (const auto& [key, count] : counts)
        total += Laurent::monomial(rule.k, rule.vars, key.first,
                                   Cyclotomic::root(rule.k, key.second).scaled(Rational(count)));
      return;
    }
    cycle(0, one);
  }

  void fcycle(size_t idx, int root_exp) {
    if (idx == cycles.size()) {
      counts[{exps_acc, root_exp}]++;
      return;
    }
    ftuple(idx, 0, 0, root_exp);
  }

  void ftuple(size_t idx, int f, long long value_sum, int root_exp) {
    auto [len, comp] = cycles[idx];
    if (f == rule.num_factors()) {
      long long e = (root_exp + static_cast<long long>(comp) * value_sum) % rule.k;
      fcycle(idx + 1, static_cast<int>((e + rule.k) % rule.k));
      return;
    }
    for (int i = 0; i < static_cast<int>(rule.factors[f].size()); ++i) {
      if (!pool.can_take(f, i, len)) continue;
      if (pool.take(f, i, len)) {
        const Laurent::Exps& m = mono[f][i];
        for (size_t s = 0; s < m.size(); ++s) exps_acc[s] += m[s] * len;
        ftuple(idx, f + 1, value_sum + rule.factors[f][i].value, root_exp);
        for (size_t s = 0; s < m.size(); ++s) exps_acc[s] -= m[s] * len;
      }
      pool.give(f, i, len);
    }
  }

  void cycle(size_t idx, const Laurent& acc) {
    if (idx == cycles.size()) {
      total += acc;
      return;
    }
    tuple_step(idx, 0, 0, acc, one, false);
  }

  // The cycle's rho-product is accumulated incrementally and unit weights
  // are skipped, so weightless rules cost only root arithmetic.
  void tuple_step(size_t idx, int f, long long value_sum, const Laurent& acc,
                  const Laurent& cycle_w, bool weighted) {
    auto [len, comp] = cycles[idx];
    if (f == rule.num_factors()) {
      long long e = (static_cast<long long>(comp) * value_sum) % rule.k;
      if (!weighted) {
        if (e == 0)
          cycle(idx + 1, acc);
        else
          cycle(idx + 1, acc.scaled(Cyclotomic::root(rule.k, e)));
      } else {
        Laurent w = cycle_w.pow(len);
        if (e != 0) w = w.scaled(Cyclotomic::root(rule.k, e));
        cycle(idx + 1, acc * w);
      }
      return;
    }
    for (int i = 0; i < static_cast<int>(rule.factors[f].size()); ++i) {
      if (!pool.can_take(f, i, len)) continue;
      if (pool.take(f, i, len)) {
        long long vs = value_sum + rule.factors[f][i].value;
        if (weight_is_one[f][i])
          tuple_step(idx, f + 1, vs, acc, cycle_w, weighted);
        else
          tuple_step(idx, f + 1, vs, acc, cycle_w * rule.factors[f][i].weight, true);
      }
      pool.give(f, i, len);
    }
  }
};

}  // namespace

Laurent evaluate(const ColorRule& rule, const PartitionTuple& lambda) {
  if (lambda.size() != rule.n || lambda.k != rule.k)
    throw std::invalid_argument("evaluate: class does not match rule");
  EvaluateDfs dfs(rule, class_cycles(lambda));
  dfs.run();
  return dfs.total;
}

Laurent evaluate_element(const ColorRule& rule, const ColoredPermutation& sigma) {
  if (sigma.n != rule.n || sigma.k != rule.k)
    throw std::invalid_argument("evaluate_element: element does not match rule");
  // Literal cellwise evaluation: weight(f, u_j) = u_j^{p(f)} rho(f) multiplied
  // over every index, with one color per cycle.
  auto cycles = cycles_decreasing(sigma);
  std::vector<std::pair<int, int>> slots;
  for (const auto& c : cycles) slots.push_back({c.length(), 0});
  Pool pool(rule);
  Laurent total(rule.k, rule.vars);
  if (!pool.feasible) return total;
  int F = rule.num_factors();
  std::function<void(size_t, const Laurent&)> rec_cycle;
  std::function<void(size_t, int, ColorRule::Color&, const Laurent&)> rec_factor;
  rec_cycle = [&](size_t idx, const Laurent& acc) {
    if (idx == cycles.size()) {
      total += acc;
      return;
    }
    ColorRule::Color cur(F, 0);
    rec_factor(idx, 0, cur, acc);
  };
  rec_factor = [&](size_t idx, int f, ColorRule::Color& cur, const Laurent& acc) {
    if (f == F) {
      Laurent contrib = Laurent::constant(rule.k, rule.vars, Rational(1));
      for (const auto& [index, root_exp] : cycles[idx].entries) {
        Cyclotomic u = Cyclotomic::root(rule.k, root_exp);
        Cyclotomic u_pow = Cyclotomic::one(rule.k);
        long long p = ((rule.value(cur) % rule.k) + rule.k) % rule.k;
        for (long long t = 0; t < p; ++t) u_pow *= u;
        contrib *= rule.weight(cur).scaled(u_pow);
      }
      rec_cycle(idx + 1, acc * contrib);
      return;
    }
    int len = cycles[idx].length();
    for (int i = 0; i < static_cast<int>(rule.factors[f].size()); ++i) {
      if (!pool.can_take(f, i, len)) continue;
      if (pool.take(f, i, len)) {
        cur[f] = i;
        rec_factor(idx, f + 1, cur, acc);
      }
      pool.give(f, i, len);
    }
  };
  rec_cycle(0, Laurent::constant(rule.k, rule.vars, Rational(1)));
  return total;
}

std::vector<std::vector<ColorRule::Color>> enumerate_cycle_colorings(
    const ColorRule& rule, const std::vector<int>& lengths) {
  std::vector<std::vector<ColorRule::Color>> out;
  Pool pool(rule);
  if (!pool.feasible) return out;
  int F = rule.num_factors();
  std::vector<ColorRule::Color> chosen(lengths.size(), ColorRule::Color(F, 0));
  std::function<void(size_t)> rec_cycle;
  std::function<void(size_t, int)> rec_factor;
  rec_cycle = [&](size_t idx) {
    if (idx == lengths.size()) {
      out.push_back(chosen);
      return;
    }
    rec_factor(idx, 0);
  };
  rec_factor = [&](size_t idx, int f) {
    if (f == F) {
      rec_cycle(idx + 1);
      return;
    }
    for (int i = 0; i < static_cast<int>(rule.factors[f].size()); ++i) {
      if (!pool.can_take(f, i, lengths[idx])) continue;
      if (pool.take(f, i, lengths[idx])) {
        chosen[idx][f] = i;
        rec_factor(idx, f + 1);
      }
      pool.give(f, i, lengths[idx]);
    }
  };
  rec_cycle(0);
  return out;
}

const Laurent& Decomposition::at(const PartitionTuple& gamma) const {
  auto it = multiplicities.find(gamma);
  if (it == multiplicities.end())
    throw std::invalid_argument("decomposition has no entry for " + gamma.str());
  return it->second;
}

bool Decomposition::operator==(const Decomposition& o) const {
  if (n != o.n || k != o.k) return false;
  for (const auto& [gamma, mult] : multiplicities)
    if (mult != o.at(gamma)) return false;
  return multiplicities.size() == o.multiplicities.size();
}

std::string Decomposition::str() const {
  std::ostringstream out;
  for (const auto& [gamma, mult] : multiplicities) {
    if (mult.is_zero()) continue;
    out << gamma.str() << ": " << mult.str() << "\n";
  }
  return out.str();
}

Decomposition decompose(const ColorRule& rule) {
  auto tuples = enumerate_tuples(rule.n, rule.k);
  std::vector<Laurent> mults(tuples.size(), Laurent(rule.k, rule.vars));
  cyclotomic_polynomial(rule.k);  // warm the shared cache before forking
  parallel_for(tuples.size(), [&](size_t i) { mults[i] = ssyt_k_sum(tuples[i], rule); });
  Decomposition d;
  d.n = rule.n;
  d.k = rule.k;
  for (size_t i = 0; i < tuples.size(); ++i)
    d.multiplicities.emplace(tuples[i], std::move(mults[i]));
  return d;
}

Decomposition brute_force_decompose(const ColorRule& rule, const CharacterTable* table) {
  std::unique_ptr<CharacterTable> own;
  if (table == nullptr) {
    own = std::make_unique<CharacterTable>(rule.n, rule.k);
    table = own.get();
  }
  auto tuples = enumerate_tuples(rule.n, rule.k);
  std::map<PartitionTuple, Laurent> values;
  for (const auto& lambda : tuples) values.emplace(lambda, evaluate(rule, lambda));
  Rational group_order(factorial(rule.n) * int_pow(rule.k, rule.n));
  Decomposition d;
  d.n = rule.n;
  d.k = rule.k;
  for (const auto& gamma : tuples) {
    Laurent total(rule.k, rule.vars);
    for (const auto& lambda : tuples) {
      Cyclotomic chi_bar = table->value(gamma, lambda).conj();
      total += values.at(lambda).scaled(chi_bar).scaled(Rational(class_size(lambda)));
    }
    total = total.scaled(Rational(1) / group_order);
    if (!total.all_coeffs_rational())
      throw std::logic_error("inner product multiplicity is not rational at " + gamma.str());
    d.multiplicities.emplace(gamma, std::move(total));
  }
  return d;
}

ColorRule trivial_rule(int n, int k) {
  Laurent one = Laurent::constant(k, {}, Rational(1));
  return ColorRule(n, k, {}, std::vector<ColorSpec>{ColorSpec("e", n, 0, one)});
}

ColorRule defining_rule(int n, int k) {
  Laurent one = Laurent::constant(k, {}, Rational(1));
  std::vector<ColorSpec> colors;
  colors.push_back(ColorSpec("1", 1, 1, one));
  if (n > 1) colors.push_back(ColorSpec("-", n - 1, 0, one));
  return ColorRule(n, k, {}, std::move(colors));
}

ColorRule defining_power(int n, int k, int m) {
  if (m == 0) return trivial_rule(n, k);
  ColorRule base = defining_rule(n, k);
  std::vector<std::vector<ColorSpec>> factors;
  for (int i = 0; i < m; ++i) factors.push_back(base.factors[0]);
  return ColorRule(n, k, {}, std::move(factors));
}

ColorRule tabloid_rule(int n, const Partition& mu) {
  if (mu.size() != n) throw std::invalid_argument("tabloid_rule: mu must partition n");
  Laurent one = Laurent::constant(1, {}, Rational(1));
  std::vector<ColorSpec> colors;
  for (int i = 1; i <= mu.length(); ++i)
    colors.push_back(ColorSpec(std::to_string(i), mu.row(i), 0, one));
  return ColorRule(n, 1, {}, std::move(colors));
}

ColorRule monomial_rule(int n, int m, const std::vector<int>& d) {
  if (static_cast<int>(d.size()) != m) throw std::invalid_argument("monomial_rule: |d| != m");
  std::vector<std::string> vars;
  for (int i = 1; i <= m; ++i) vars.push_back("t" + std::to_string(i));
  std::vector<ColorSpec> colors;
  std::vector<int> a(m, 0);
  while (true) {
    std::string id = "[";
    for (int i = 0; i < m; ++i) {
      if (i) id += ",";
      id += std::to_string(a[i]);
    }
    id += "]";
    Laurent w = Laurent::monomial(1, vars, a, Rational(1));
    colors.push_back(ColorSpec(id, n, 0, w));
    int pos = m - 1;
    while (pos >= 0 && a[pos] == d[pos]) a[pos--] = 0;
    if (pos < 0) break;
    a[pos]++;
  }
  return ColorRule(n, 1, vars, std::move(colors));
}

ColorRule natural_rule(int n, int k, int d) {
  std::vector<ColorSpec> colors;
  for (int i = 0; i <= d; ++i)
    colors.push_back(ColorSpec(std::to_string(i), n, i, Laurent::var_power(k, "q", i)));
  return ColorRule(n, k, {"q"}, std::move(colors));
}

ColorRule basis_rule(const PartitionTuple& lambda) {
  int n = lambda.size();
  int k = lambda.k;
  Laurent one = Laurent::constant(k, {}, Rational(1));
  std::vector<ColorSpec> colors;
  for (int i = 0; i < k; ++i)
    for (int j = 1; j <= lambda.comps[i].length(); ++j)
      colors.push_back(ColorSpec("f" + std::to_string(i) + "_" + std::to_string(j),
                                 lambda.comps[i].row(j), i, one));
  return ColorRule(n, k, {}, std::move(colors));
}

long long N_of(const PartitionTuple& gamma) {
  int k = gamma.k;
  long long n0 = gamma.comps[0].size();
  long long first_row = gamma.comps[0].empty() ? 0 : gamma.comps[0].parts[0];
  long long total = static_cast<long long>(k) * (n0 - first_row);
  for (int i = 1; i < k; ++i) total += static_cast<long long>(i) * gamma.comps[i].size();
  return total;
}

bool tensor_support(const PartitionTuple& gamma, int m) {
  long long need = N_of(gamma);
  return m >= need && (m - need) % gamma.k == 0;
}

ColorRule random_rule(int n, int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> ncolors(2, 4);
  std::uniform_int_distribution<int> multd(1, n);
  std::uniform_int_distribution<long long> valued(0, k - 1);
  std::uniform_int_distribution<int> expd(0, 2);
  std::uniform_int_distribution<int> coin(0, 9);
  int count = ncolors(rng);
  std::vector<ColorSpec> colors;
  int total = 0;
  for (int i = 0; i < count; ++i) {
    int mult = multd(rng);
    total += mult;
    colors.push_back(ColorSpec("c" + std::to_string(i), mult, valued(rng),
                               Laurent::var_power(k, "q", expd(rng))));
  }
  // Mostly feasible rules; an identically-zero class function now and then.
  if (total < n && coin(rng) < 8) colors.back().multiplicity += n - total;
  return ColorRule(n, k, {"q"}, std::move(colors));
}

}  // namespace wreath
