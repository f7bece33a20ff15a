#include "wreath/ehrhart.hpp"

#include <algorithm>
#include <functional>

namespace wreath {

namespace {

// Fourier-Motzkin elimination of variable j from a system a.x <= b.
std::vector<std::pair<std::vector<Rational>, Rational>> eliminate(
    const std::vector<std::pair<std::vector<Rational>, Rational>>& rows, int j) {
  std::vector<std::pair<std::vector<Rational>, Rational>> zero, pos, neg, out;
  for (const auto& r : rows) {
    if (r.first[j] == 0)
      zero.push_back(r);
    else if (r.first[j] > 0)
      pos.push_back(r);
    else
      neg.push_back(r);
  }
  out = zero;
  for (const auto& p : pos) {
    for (const auto& n : neg) {
      // p.first[j] * n - n.first[j] * p has zero j-coefficient (n's is < 0)
      std::vector<Rational> row(p.first.size());
      Rational cp = p.first[j], cn = -n.first[j];
      for (size_t t = 0; t < row.size(); ++t) row[t] = cn * p.first[t] + cp * n.first[t];
      out.push_back({row, cn * p.second + cp * n.second});
    }
  }
  return out;
}

}  // namespace

HPolytope::HPolytope(int dim, std::vector<std::pair<std::vector<Rational>, Rational>> rows,
                     std::string tag)
    : dim_(dim), rows_(std::move(rows)), tag_(std::move(tag)) {
  for (const auto& r : rows_)
    if (static_cast<int>(r.first.size()) != dim)
      throw std::invalid_argument("inequality arity mismatch");
  // Bound every coordinate at dilation 1; scaling is linear in d.
  for (int i = 0; i < dim_; ++i) {
    auto sys = rows_;
    for (int j = 0; j < dim_; ++j)
      if (j != i) sys = eliminate(sys, j);
    bool has_hi = false, has_lo = false;
    Rational hi = 0, lo = 0;
    for (const auto& [a, b] : sys) {
      if (a[i] > 0) {
        Rational cand = b / a[i];
        if (!has_hi || cand < hi) hi = cand;
        has_hi = true;
      } else if (a[i] < 0) {
        Rational cand = b / a[i];
        if (!has_lo || cand > lo) lo = cand;
        has_lo = true;
      } else if (b < 0) {
        throw std::invalid_argument("empty polytope");
      }
    }
    if (!has_hi || !has_lo) throw std::invalid_argument("unbounded polytope");
    bounds_.push_back({lo, hi});
  }
}

HPolytope HPolytope::simplex(int m) {
  std::vector<std::pair<std::vector<Rational>, Rational>> rows;
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> a(m, Rational(0));
    a[i] = -1;
    rows.push_back({a, Rational(0)});
  }
  rows.push_back({std::vector<Rational>(m, Rational(1)), Rational(1)});
  return HPolytope(m, std::move(rows), "simplex:" + std::to_string(m));
}

HPolytope HPolytope::cross(int m) {
  std::vector<std::pair<std::vector<Rational>, Rational>> rows;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<Rational> a(m);
    for (int i = 0; i < m; ++i) a[i] = (mask >> i) & 1 ? Rational(-1) : Rational(1);
    rows.push_back({a, Rational(1)});
  }
  return HPolytope(m, std::move(rows), "cross:" + std::to_string(m));
}

HPolytope HPolytope::cube(int m) {
  std::vector<std::pair<std::vector<Rational>, Rational>> rows;
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> lo(m, Rational(0)), hi(m, Rational(0));
    lo[i] = -1;
    hi[i] = 1;
    rows.push_back({lo, Rational(0)});
    rows.push_back({hi, Rational(1)});
  }
  return HPolytope(m, std::move(rows), "cube:" + std::to_string(m));
}

std::pair<Rational, Rational> HPolytope::coordinate_bounds(int i) const { return bounds_[i]; }

bool HPolytope::contains(const std::vector<long long>& v, int d) const {
  for (const auto& [a, b] : rows_) {
    Rational lhs = 0;
    for (int i = 0; i < dim_; ++i) lhs += a[i] * Rational(v[i]);
    if (lhs > b * d) return false;
  }
  return true;
}

std::vector<std::vector<long long>> lattice_points(const HPolytope& p, int d) {
  if (d < 0) throw std::invalid_argument("dilation must be nonnegative");
  std::vector<long long> lo(p.dim()), hi(p.dim());
  for (int i = 0; i < p.dim(); ++i) {
    auto [l, h] = p.coordinate_bounds(i);
    Rational ld = l * d, hd = h * d;
    // ceil(ld) and floor(hd)
    BigInt ln = numerator(ld), ldn = denominator(ld);
    BigInt hn = numerator(hd), hdn = denominator(hd);
    BigInt fl = hn >= 0 ? BigInt(hn / hdn) : BigInt(-((-hn + hdn - 1) / hdn));
    BigInt ce = ln >= 0 ? BigInt((ln + ldn - 1) / ldn) : BigInt(-((-ln) / ldn));
    lo[i] = ce.convert_to<long long>();
    hi[i] = fl.convert_to<long long>();
  }
  std::vector<std::vector<long long>> out;
  std::vector<long long> v(p.dim());
  std::function<void(int)> scan = [&](int i) {
    if (i == p.dim()) {
      if (p.contains(v, d)) out.push_back(v);
      return;
    }
    for (long long x = lo[i]; x <= hi[i]; ++x) {
      v[i] = x;
      scan(i + 1);
    }
  };
  scan(0);
  return out;
}

Laurent refined_ehrhart(const HPolytope& p, const std::vector<long long>& weight, int d) {
  if (static_cast<int>(weight.size()) != p.dim())
    throw std::invalid_argument("weight vector arity mismatch");
  Laurent total(1, {"q"});
  for (const auto& v : lattice_points(p, d)) {
    long long e = 0;
    for (int i = 0; i < p.dim(); ++i) e += weight[i] * v[i];
    total += Laurent::var_power(1, "q", static_cast<int>(e));
  }
  return total;
}

namespace {

// Dense univariate polynomials over Q with nonnegative exponents.
using Dense = std::vector<Rational>;

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Dense dense_div_exact(Dense num, const Dense& den) {
  Dense q(num.size() - den.size() + 1, Rational(0));
  for (int sh = static_cast<int>(q.size()) - 1; sh >= 0; --sh) {
    Rational lead = num[sh + den.size() - 1] / den.back();
    q[sh] = lead;
    for (size_t i = 0; i < den.size(); ++i) num[sh + i] -= lead * den[i];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("q-binomial division left a remainder");
  return q;
}

}  // namespace

Laurent q_binomial(int top, int bottom) {
  if (bottom < 0 || bottom > top) return Laurent(1, {"q"});
  // prod_{j=1}^{bottom} (1 - q^{top-bottom+j}) / (1 - q^j)
  Dense num = {Rational(1)}, den = {Rational(1)};
  for (int j = 1; j <= bottom; ++j) {
    Dense f1(top - bottom + j + 1, Rational(0)), f2(j + 1, Rational(0));
    f1[0] = 1;
    f1[top - bottom + j] = -1;
    f2[0] = 1;
    f2[j] = -1;
    num = dense_mul(num, f1);
    den = dense_mul(den, f2);
  }
  Dense q = dense_div_exact(std::move(num), den);
  Laurent out(1, {"q"});
  for (size_t i = 0; i < q.size(); ++i)
    if (q[i] != 0) out += Laurent::monomial(1, {"q"}, {static_cast<int>(i)}, q[i]);
  return out;
}

Laurent module_character(const HPolytope& p, int n, int k, const std::vector<long long>& weight,
                         const PartitionTuple& lambda, int tmax) {
  if (lambda.size() != n || lambda.k != k)
    throw std::invalid_argument("module_character: class does not match (n, k)");
  std::vector<std::string> vars = {"q", "t"};
  Laurent total(k, vars);
  for (int d = 0; d <= tmax; ++d) {
    auto points = lattice_points(p, d);
    Laurent coeff = Laurent::constant(k, vars, Rational(1));
    for (int i = 0; i < k; ++i) {
      for (int part : lambda.comps[i].parts) {
        Laurent factor(k, vars);
        for (const auto& v : points) {
          long long size = 0, cdeg = 0;
          for (int t = 0; t < p.dim(); ++t) {
            size += v[t];
            cdeg += weight[t] * v[t];
          }
          factor += Laurent::monomial(k, vars, {static_cast<int>(part * cdeg), 0},
                                      Cyclotomic::root(k, static_cast<long long>(i) * size));
        }
        coeff *= factor;
      }
    }
    total += coeff * Laurent::monomial(k, vars, {0, d}, Rational(1));
  }
  return total;
}

ColorRule polytope_rule(const HPolytope& p, int n, int k, const std::vector<long long>& weight,
                        int d) {
  std::vector<ColorSpec> colors;
  for (const auto& v : lattice_points(p, d)) {
    long long size = 0, cdeg = 0;
    std::string id = "(";
    for (int t = 0; t < p.dim(); ++t) {
      size += v[t];
      cdeg += weight[t] * v[t];
      if (t) id += ",";
      id += std::to_string(v[t]);
    }
    id += ")";
    colors.push_back(
        ColorSpec(id, n, size, Laurent::var_power(k, "q", static_cast<int>(cdeg))));
  }
  return ColorRule(n, k, {"q"}, std::move(colors));
}

Decomposition frobenius_decompose(const HPolytope& p, int n, int k,
                                  const std::vector<long long>& weight, int tmax) {
  std::vector<std::string> vars = {"q", "t"};
  Decomposition total;
  total.n = n;
  total.k = k;
  for (const auto& gamma : enumerate_tuples(n, k)) total.multiplicities.emplace(gamma, Laurent(k, vars));
  for (int d = 0; d <= tmax; ++d) {
    auto dec = decompose(polytope_rule(p, n, k, weight, d));
    Laurent td = Laurent::monomial(k, vars, {0, d}, Rational(1));
    for (auto& [gamma, mult] : total.multiplicities)
      mult += dec.at(gamma).with_vars(vars) * td;
  }
  return total;
}

WreathStats wreath_stats_tableau(const Tableau& t) {
  int n = t.shape.size();
  int k = t.shape.k;
  std::vector<int> comp_of(n + 1), gcol_of(n + 1);
  for (int c = 0; c < t.shape.k; ++c)
    for (size_t r = 0; r < t.entries[c].size(); ++r)
      for (size_t j = 0; j < t.entries[c][r].size(); ++j) {
        int label = t.entries[c][r][j];
        if (label < 1 || label > n) throw std::invalid_argument("tableau is not standard");
        comp_of[label] = c;
        gcol_of[label] = t.shape.global_col(c, static_cast<int>(j) + 1);
      }
  WreathStats stats;
  long long a = comp_of[1];
  stats.labels.push_back(a);
  for (int i = 1; i < n; ++i) {
    int r = comp_of[i], s = comp_of[i + 1];
    if (gcol_of[i + 1] > gcol_of[i])
      a += s - r;
    else
      a += k + s - r;
    stats.labels.push_back(a);
  }
  for (long long v : stats.labels) {
    stats.wcomaj += v;
    stats.wdes = std::max(stats.wdes, v);
  }
  return stats;
}

WreathStats wreath_stats_perm(const ColoredPermutation& sigma) {
  WreathStats stats;
  int n = sigma.n, k = sigma.k;
  // descent positions i = 0..n-1 read between a_i and a_{i+1}, with a_0 = 0;
  // position 0 never holds a k-descent
  for (int i = 0; i < n; ++i) {
    int prev = i == 0 ? 0 : sigma.colors[i - 1];
    int delta = ((sigma.colors[i] - prev) % k + k) % k;
    int r = 0;
    if (delta != 0)
      r = delta;
    else if (i > 0 && sigma.images[i - 1] > sigma.images[i])
      r = k;
    if (r > 0) {
      stats.wdes += r;
      stats.wcomaj += static_cast<long long>(r) * (n - i);
    }
  }
  return stats;
}

std::pair<Tableau, Tableau> colored_rsk(const ColoredPermutation& sigma) {
  int k = sigma.k;
  std::vector<std::vector<std::vector<int>>> p_rows(k), q_rows(k);
  for (int i = 1; i <= sigma.n; ++i) {
    int comp = sigma.colors[i - 1];
    int x = sigma.images[i - 1];
    auto& rows = p_rows[comp];
    size_t row = 0;
    while (true) {
      if (row == rows.size()) rows.push_back({});
      auto& r = rows[row];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        while (q_rows[comp].size() <= row) q_rows[comp].push_back({});
        q_rows[comp][row].push_back(i);
        break;
      }
      std::swap(*it, x);
      row++;
    }
  }
  std::vector<Partition> comps;
  for (int c = 0; c < k; ++c) {
    std::vector<int> parts;
    for (const auto& r : p_rows[c]) parts.push_back(static_cast<int>(r.size()));
    comps.push_back(Partition(parts));
  }
  PartitionTuple shape(k, comps);
  Tableau P, Q;
  P.shape = shape;
  Q.shape = shape;
  P.entries = p_rows;
  Q.entries = q_rows;
  return {P, Q};
}

namespace {

// DFS over SSYT_k(gamma, N) fillings with entries 0..max_entry, entry e
// allowed in component r only when e = r mod k.
void natural_ssyt_dfs(const PartitionTuple& shape, int max_entry,
                      const std::function<void(long long, int)>& emit) {
  auto cells = cell_order(shape);
  std::map<std::tuple<int, int, int>, int> where;
  for (size_t i = 0; i < cells.size(); ++i) where[cells[i]] = static_cast<int>(i);
  std::vector<int> entry(cells.size(), 0);
  std::function<void(size_t, long long, int)> rec = [&](size_t idx, long long total, int maxe) {
    if (idx == cells.size()) {
      emit(total, maxe);
      return;
    }
    auto [comp, row, col] = cells[idx];
    int lo = comp % shape.k;
    if (col > 1) lo = std::max(lo, entry[idx - 1]);
    if (row > 1) {
      auto it = where.find({comp, row - 1, col});
      if (it != where.end()) lo = std::max(lo, entry[it->second] + shape.k);
    }
    // all candidate bounds already sit in comp's residue class mod k
    for (int e = lo; e <= max_entry; e += shape.k) {
      entry[idx] = e;
      rec(idx + 1, total + e, std::max(maxe, e));
    }
  };
  rec(0, 0, 0);
}

}  // namespace

Laurent ssyt_max_graded_series(const PartitionTuple& gamma, int max_entry) {
  Laurent total(1, {"q", "t"});
  natural_ssyt_dfs(gamma, max_entry, [&](long long sum, int maxe) {
    total += Laurent::monomial(1, {"q", "t"}, {static_cast<int>(sum), maxe}, Rational(1));
  });
  return total;
}

Laurent ssyt_dilation_sum(const PartitionTuple& gamma, int d) {
  Laurent total(1, {"q", "t"});
  natural_ssyt_dfs(gamma, d, [&](long long sum, int) {
    total += Laurent::monomial(1, {"q", "t"}, {static_cast<int>(sum), 0}, Rational(1));
  });
  return total;
}

EulerMahonianReport verify_euler_mahonian(const PartitionTuple& gamma, int tmax) {
  int n = gamma.size(), k = gamma.k;
  std::vector<std::string> vars = {"q", "t"};
  EulerMahonianReport report;

  Laurent numerator(1, vars);
  for (const auto& t : enumerate_syt(gamma)) {
    auto stats = wreath_stats_tableau(t);
    numerator += Laurent::monomial(1, vars, {static_cast<int>(stats.wcomaj),
                                             static_cast<int>(stats.wdes)}, Rational(1));
  }
  report.numerator = numerator;
  report.positive = numerator.is_nonneg_integer_poly();

  Laurent series = ssyt_max_graded_series(gamma, tmax);

  // smoothing: (1-t) sum_d t^d sum_{SSYT_k(N_d)} q^{|T|} = series, mod t^{tmax+1}
  Laurent dsum(1, vars);
  for (int d = 0; d <= tmax; ++d)
    dsum += ssyt_dilation_sum(gamma, d) * Laurent::monomial(1, vars, {0, d}, Rational(1));
  Laurent one_minus_t =
      Laurent::constant(1, vars, Rational(1)) - Laurent::monomial(1, vars, {0, 1}, Rational(1));
  report.smoothing_ok = (one_minus_t * dsum).truncate("t", tmax) == series.truncate("t", tmax);

  // telescope: prod_j (1 - t^k q^{kj}) * series = numerator, mod t^{tmax+1}
  Laurent prod = Laurent::constant(1, vars, Rational(1));
  for (int j = 1; j <= n; ++j)
    prod *= Laurent::constant(1, vars, Rational(1)) -
            Laurent::monomial(1, vars, {k * j, k}, Rational(1));
  report.telescope_ok =
      (prod * series).truncate("t", tmax) == numerator.truncate("t", tmax);
  return report;
}

}  // namespace wreath
