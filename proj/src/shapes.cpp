#include "wreath/shapes.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace wreath {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string Partition::str() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ",";
    out << parts[i];
  }
  out << ")";
  return out.str();
}

PartitionTuple::PartitionTuple(int k_, std::vector<Partition> comps_)
    : k(k_), comps(std::move(comps_)) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (static_cast<int>(comps.size()) != k)
    throw std::invalid_argument("partition tuple needs exactly k components");
}

int PartitionTuple::size() const {
  int s = 0;
  for (const auto& c : comps) s += c.size();
  return s;
}

bool PartitionTuple::operator<(const PartitionTuple& o) const {
  if (k != o.k) return k < o.k;
  return comps < o.comps;
}

int PartitionTuple::comp_width(int i) const {
  return comps[i].empty() ? 1 : comps[i].parts[0];
}

int PartitionTuple::comp_height(int i) const {
  return comps[i].empty() ? 1 : comps[i].length();
}

int PartitionTuple::global_col(int comp, int col) const {
  int off = 0;
  for (int j = 0; j < comp; ++j) off += comp_width(j);
  return off + col;
}

int PartitionTuple::global_row(int comp, int row) const {
  int off = 0;
  for (int j = comp + 1; j < k; ++j) off += comp_height(j);
  return off + row;
}

std::string PartitionTuple::str() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < k; ++i) {
    if (i) out << ",";
    out << comps[i].str();
  }
  out << ")";
  return out.str();
}

std::string PartitionTuple::json_str() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < k; ++i) {
    if (i) out << ",";
    out << "[";
    for (size_t j = 0; j < comps[i].parts.size(); ++j) {
      if (j) out << ",";
      out << comps[i].parts[j];
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

PartitionTuple parse_partition_tuple_json(const std::string& text, int k) {
  auto j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("shape must be a JSON array");
  std::vector<Partition> comps;
  if (!j.empty() && j[0].is_number()) {
    // a bare partition like [3,1]
    comps.push_back(Partition(j.get<std::vector<int>>()));
  } else {
    for (const auto& c : j) comps.push_back(Partition(c.get<std::vector<int>>()));
  }
  // missing trailing components are read as empty
  while (static_cast<int>(comps.size()) < k) comps.push_back(Partition{});
  if (static_cast<int>(comps.size()) != k)
    throw std::invalid_argument("shape has more components than k");
  return PartitionTuple(k, std::move(comps));
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<PartitionTuple> enumerate_tuples(int n, int k) {
  std::vector<PartitionTuple> out;
  std::vector<Partition> cur(k);
  std::function<void(int, int)> rec = [&](int comp, int rem) {
    if (comp == k - 1) {
      for (const auto& p : enumerate_partitions(rem)) {
        cur[comp] = p;
        out.push_back(PartitionTuple(k, cur));
      }
      return;
    }
    for (int s = rem; s >= 0; --s) {
      for (const auto& p : enumerate_partitions(s)) {
        cur[comp] = p;
        rec(comp + 1, rem - s);
      }
    }
  };
  rec(0, n);
  return out;
}

Rational z_factor(const Partition& p) {
  std::map<int, int> mult;
  for (int part : p.parts) mult[part]++;
  BigInt z = 1;
  for (auto [part, m] : mult) z *= int_pow(part, m) * factorial(m);
  return Rational(z);
}

Rational class_normalizer(const PartitionTuple& t) {
  Rational z = 1;
  for (const auto& comp : t.comps) z *= z_factor(comp) * Rational(int_pow(t.k, comp.length()));
  return z;
}

bool Tableau::operator<(const Tableau& o) const {
  if (shape != o.shape) return shape < o.shape;
  return entries < o.entries;
}

std::string Tableau::str() const {
  std::ostringstream out;
  for (int c = 0; c < shape.k; ++c) {
    if (c) out << " | ";
    if (shape.comps[c].empty()) {
      out << "-";
      continue;
    }
    for (size_t r = 0; r < entries[c].size(); ++r) {
      if (r) out << " / ";
      for (size_t j = 0; j < entries[c][r].size(); ++j) {
        if (j) out << " ";
        out << entries[c][r][j];
      }
    }
  }
  return out.str();
}

bool is_semistandard(const Tableau& t) {
  for (int c = 0; c < t.shape.k; ++c) {
    const auto& comp = t.entries[c];
    for (size_t r = 0; r < comp.size(); ++r) {
      for (size_t j = 0; j < comp[r].size(); ++j) {
        if (j > 0 && comp[r][j] < comp[r][j - 1]) return false;
        if (r > 0 && j < comp[r].size() && comp[r][j] <= comp[r - 1][j]) return false;
      }
    }
  }
  return true;
}

namespace {

// Cell-by-cell DFS shared by the SSYT enumerators.  Cells are visited per
// component, bottom row first, left to right; each entry must be >= its left
// neighbour and > the one below.
void ssyt_dfs(const PartitionTuple& shape, std::vector<int>& remaining, int comp, int row, int col,
              Tableau& work, std::vector<Tableau>& out) {
  if (comp == shape.k) {
    out.push_back(work);
    return;
  }
  const Partition& p = shape.comps[comp];
  if (row > p.length()) {
    ssyt_dfs(shape, remaining, comp + 1, 1, 1, work, out);
    return;
  }
  if (col > p.row(row)) {
    ssyt_dfs(shape, remaining, comp, row + 1, 1, work, out);
    return;
  }
  int lo = 0;
  if (col > 1) lo = std::max(lo, work.entries[comp][row - 1][col - 2]);
  if (row > 1) lo = std::max(lo, work.entries[comp][row - 2][col - 1] + 1);
  for (int letter = lo; letter < static_cast<int>(remaining.size()); ++letter) {
    if (remaining[letter] == 0) continue;
    remaining[letter]--;
    work.entries[comp][row - 1][col - 1] = letter;
    ssyt_dfs(shape, remaining, comp, row, col + 1, work, out);
    remaining[letter]++;
  }
}

Tableau blank_tableau(const PartitionTuple& shape) {
  Tableau t;
  t.shape = shape;
  t.entries.resize(shape.k);
  for (int c = 0; c < shape.k; ++c) {
    t.entries[c].resize(shape.comps[c].length());
    for (int r = 1; r <= shape.comps[c].length(); ++r)
      t.entries[c][r - 1].assign(shape.comps[c].row(r), -1);
  }
  return t;
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const std::vector<int>& multiplicity) {
  PartitionTuple t(1, {shape});
  return enumerate_ssyt_tuple(t, multiplicity);
}

std::vector<Tableau> enumerate_ssyt_tuple(const PartitionTuple& shape,
                                          const std::vector<int>& multiplicity) {
  std::vector<Tableau> out;
  Tableau work = blank_tableau(shape);
  std::vector<int> remaining = multiplicity;
  ssyt_dfs(shape, remaining, 0, 1, 1, work, out);
  return out;
}

Tableau standardize(const Tableau& t) {
  // Collect (letter, global column, comp, row, col); equal letters never
  // share a column, so sorting by (letter, global column) is a total order.
  struct Cell {
    int letter, gcol, comp, row, col;
  };
  std::vector<Cell> cells;
  for (int c = 0; c < t.shape.k; ++c)
    for (size_t r = 0; r < t.entries[c].size(); ++r)
      for (size_t j = 0; j < t.entries[c][r].size(); ++j)
        cells.push_back({t.entries[c][r][j], t.shape.global_col(c, static_cast<int>(j) + 1), c,
                         static_cast<int>(r) + 1, static_cast<int>(j) + 1});
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.letter != b.letter) return a.letter < b.letter;
    return a.gcol < b.gcol;
  });
  Tableau out = blank_tableau(t.shape);
  int next = 1;
  for (const auto& cell : cells) out.entries[cell.comp][cell.row - 1][cell.col - 1] = next++;
  return out;
}

std::vector<Tableau> enumerate_syt(const PartitionTuple& shape) {
  std::vector<int> mult(shape.size(), 1);
  auto raw = enumerate_ssyt_tuple(shape, mult);
  for (auto& t : raw)
    for (auto& comp : t.entries)
      for (auto& row : comp)
        for (auto& e : row) e += 1;  // letters 0..n-1 -> entries 1..n
  return raw;
}

std::vector<RimHook> rim_hooks_of(const Partition& p, int len) {
  std::vector<RimHook> out;
  if (len <= 0 || len > p.size()) return out;
  // Rim cells (r,c): cells with no cell at (r+1, c+1), ordered by diagonal.
  std::vector<std::pair<int, int>> rim;
  for (int r = p.length(); r >= 1; --r)
    for (int c = 1; c <= p.row(r); ++c)
      if (p.row(r + 1) < c + 1) rim.push_back({r, c});
  std::sort(rim.begin(), rim.end(),
            [](const auto& a, const auto& b) { return a.second - a.first < b.second - b.first; });
  for (size_t start = 0; start + len <= rim.size(); ++start) {
    // Window must be a contiguous path: consecutive diagonals.
    bool contiguous = true;
    for (size_t i = start + 1; i < start + len; ++i) {
      if ((rim[i].second - rim[i].first) != (rim[i - 1].second - rim[i - 1].first) + 1) {
        contiguous = false;
        break;
      }
    }
    if (!contiguous) continue;
    // Removal must leave a partition: removed cells form a suffix of each
    // row they touch and the new row lengths weakly decrease.
    std::vector<int> removed(p.length() + 1, 0);
    std::vector<int> mincol(p.length() + 1, 1 << 30);
    for (size_t i = start; i < start + len; ++i) {
      removed[rim[i].first]++;
      mincol[rim[i].first] = std::min(mincol[rim[i].first], rim[i].second);
    }
    bool ok = true;
    std::vector<int> newrows;
    for (int r = 1; r <= p.length(); ++r) {
      int nr = p.row(r) - removed[r];
      if (removed[r] > 0 && mincol[r] != nr + 1) ok = false;  // not a suffix
      newrows.push_back(nr);
    }
    for (size_t r = 1; ok && r < newrows.size(); ++r)
      if (newrows[r] > newrows[r - 1]) ok = false;
    if (!ok) continue;
    RimHook h;
    h.cells.assign(rim.begin() + start, rim.begin() + start + len);
    for (size_t i = 1; i < h.cells.size(); ++i)
      if (h.cells[i].first < h.cells[i - 1].first) h.south_steps++;
    out.push_back(std::move(h));
  }
  return out;
}

Partition remove_hook(const Partition& p, const RimHook& h) {
  std::vector<int> rows(p.parts);
  for (auto [r, c] : h.cells) rows[r - 1]--;
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Partition(rows);
}

std::vector<std::pair<RimHookTableau, Cyclotomic>> enumerate_rht(const PartitionTuple& shape,
                                                                 const std::vector<int>& lengths,
                                                                 const std::vector<int>& ctypes) {
  if (lengths.size() != ctypes.size())
    throw std::invalid_argument("lengths and ctypes must have equal size");
  int total = 0;
  for (int l : lengths) total += l;
  if (total != shape.size()) throw std::invalid_argument("hook lengths must sum to |shape|");

  std::vector<std::pair<RimHookTableau, Cyclotomic>> out;
  std::vector<Partition> current = shape.comps;
  RimHookTableau work;
  work.shape = shape;

  std::function<void(size_t, Cyclotomic)> rec = [&](size_t i, Cyclotomic weight) {
    if (i == lengths.size()) {
      out.push_back({work, weight});
      return;
    }
    for (int comp = 0; comp < shape.k; ++comp) {
      for (auto& hook : rim_hooks_of(current[comp], lengths[i])) {
        Partition saved = current[comp];
        current[comp] = remove_hook(current[comp], hook);
        hook.comp = comp;
        work.hooks.push_back(hook);
        Cyclotomic w = Cyclotomic::root(shape.k, static_cast<long long>(ctypes[i]) * comp);
        if (hook.south_steps % 2 == 1) w = -w;
        rec(i + 1, weight * w);
        work.hooks.pop_back();
        current[comp] = saved;
      }
    }
  };
  rec(0, Cyclotomic::one(shape.k));
  return out;
}

namespace {

void schur_dfs(const Partition& shape, const std::vector<Laurent>& alphabet, int row, int col,
               std::vector<std::vector<int>>& fill, const Laurent& acc, Laurent& total) {
  if (row > shape.length()) {
    total += acc;
    return;
  }
  if (col > shape.row(row)) {
    schur_dfs(shape, alphabet, row + 1, 1, fill, acc, total);
    return;
  }
  int lo = 0;
  if (col > 1) lo = std::max(lo, fill[row - 1][col - 2]);
  if (row > 1) lo = std::max(lo, fill[row - 2][col - 1] + 1);
  for (int letter = lo; letter < static_cast<int>(alphabet.size()); ++letter) {
    fill[row - 1][col - 1] = letter;
    schur_dfs(shape, alphabet, row, col + 1, fill, acc * alphabet[letter], total);
  }
}

}  // namespace

Laurent schur_poly(const Partition& shape, const std::vector<Laurent>& alphabet) {
  if (alphabet.empty()) throw std::invalid_argument("schur_poly needs a nonempty alphabet");
  Laurent one = Laurent::constant(alphabet[0].order(), alphabet[0].vars(), Rational(1));
  Laurent total(alphabet[0].order(), alphabet[0].vars());
  std::vector<std::vector<int>> fill(shape.length());
  for (int r = 1; r <= shape.length(); ++r) fill[r - 1].assign(shape.row(r), -1);
  schur_dfs(shape, alphabet, 1, 1, fill, one, total);
  return total;
}

Laurent powersum_poly(int r, const std::vector<Laurent>& alphabet) {
  if (alphabet.empty()) throw std::invalid_argument("powersum_poly needs a nonempty alphabet");
  Laurent total(alphabet[0].order(), alphabet[0].vars());
  for (const auto& a : alphabet) total += a.pow(r);
  return total;
}

}  // namespace wreath
