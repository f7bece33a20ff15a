#include "wreath/involution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace wreath {

namespace {

std::vector<ObjectCell> layout_cells(const PartitionTuple& shape) {
  std::vector<ObjectCell> cells;
  for (int c = 0; c < shape.k; ++c)
    for (int r = 1; r <= shape.comps[c].length(); ++r)
      for (int j = 1; j <= shape.comps[c].row(r); ++j) {
        ObjectCell cell;
        cell.comp = c;
        cell.row = r;
        cell.col = j;
        cell.grow = shape.global_row(c, r);
        cell.gcol = shape.global_col(c, j);
        cells.push_back(cell);
      }
  return cells;
}

std::map<std::pair<int, int>, int> position_index(const InvolutionObject& obj) {
  std::map<std::pair<int, int>, int> at;
  for (size_t i = 0; i < obj.cells.size(); ++i)
    at[{obj.cells[i].grow, obj.cells[i].gcol}] = static_cast<int>(i);
  return at;
}

void sort_hooks_canonically(InvolutionObject& obj) {
  for (auto& h : obj.hooks)
    std::sort(h.begin(), h.end(), [&](int a, int b) {
      return obj.cells[a].gcol - obj.cells[a].grow < obj.cells[b].gcol - obj.cells[b].grow;
    });
  std::sort(obj.hooks.begin(), obj.hooks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
}

int min_index_of_hook(const InvolutionObject& obj, const std::vector<int>& hook) {
  int m = obj.cells[hook[0]].index;
  for (int id : hook) m = std::min(m, obj.cells[id].index);
  return m;
}

// Placement order of the object's hooks: colors decreasing, then smallest
// index increasing (the right-to-left reading of the rearranged cycles).
std::vector<int> placement_order(const InvolutionObject& obj) {
  std::vector<int> order(obj.hooks.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ca = obj.cells[obj.hooks[a][0]].color;
    const auto& cb = obj.cells[obj.hooks[b][0]].color;
    if (ca != cb) return ca > cb;
    return min_index_of_hook(obj, obj.hooks[a]) < min_index_of_hook(obj, obj.hooks[b]);
  });
  return order;
}

// Cut a row run of cell ids (west to east) at its left-to-right index minima.
std::vector<std::vector<int>> cut_run_at_minima(const InvolutionObject& obj,
                                                const std::vector<int>& run) {
  std::vector<std::vector<int>> hooks;
  int running_min = 0;
  for (size_t i = 0; i < run.size(); ++i) {
    int idx = obj.cells[run[i]].index;
    if (i == 0 || idx < running_min) {
      hooks.push_back({run[i]});
      running_min = idx;
    } else {
      hooks.back().push_back(run[i]);
    }
  }
  return hooks;
}

}  // namespace

int InvolutionObject::hook_of(int cell_id) const {
  for (size_t h = 0; h < hooks.size(); ++h)
    for (int id : hooks[h])
      if (id == cell_id) return static_cast<int>(h);
  throw std::logic_error("cell not covered by any hook");
}

int InvolutionObject::south_steps() const {
  int total = 0;
  for (const auto& h : hooks)
    for (size_t i = 1; i < h.size(); ++i)
      if (cells[h[i]].grow < cells[h[i - 1]].grow) total++;
  return total;
}

bool InvolutionObject::operator==(const InvolutionObject& o) const {
  if (shape != o.shape || cells.size() != o.cells.size()) return false;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].index != o.cells[i].index || cells[i].root != o.cells[i].root ||
        cells[i].color != o.cells[i].color)
      return false;
  }
  return hooks == o.hooks;
}

bool InvolutionObject::operator<(const InvolutionObject& o) const {
  auto key = [](const InvolutionObject& x) {
    std::vector<std::tuple<int, int, ColorRule::Color>> cs;
    for (const auto& c : x.cells) cs.push_back({c.index, c.root, c.color});
    return std::make_pair(cs, x.hooks);
  };
  return key(*this) < key(o);
}

std::vector<InvolutionObject> enumerate_objects(const PartitionTuple& gamma, const ColorRule& rule,
                                                long long group_budget, int max_n,
                                                long long max_objects) {
  if (gamma.size() != rule.n || gamma.k != rule.k)
    throw std::invalid_argument("enumerate_objects: shape does not match rule");
  if (rule.n > max_n) throw BudgetError("object enumeration refused for n > max_n");

  std::vector<InvolutionObject> out;
  auto base_cells = layout_cells(gamma);
  std::map<std::tuple<int, int, int>, int> cell_at;  // (comp,row,col) -> id
  for (size_t i = 0; i < base_cells.size(); ++i)
    cell_at[{base_cells[i].comp, base_cells[i].row, base_cells[i].col}] = static_cast<int>(i);

  for (const auto& sigma : enumerate_group(rule.n, rule.k, group_budget)) {
    auto cycles = cycles_decreasing(sigma);
    std::vector<int> lengths;
    for (const auto& c : cycles) lengths.push_back(c.length());
    for (const auto& coloring : enumerate_cycle_colorings(rule, lengths)) {
      // Rearrange: colors increasing left to right, ties keep decreasing
      // cycle order; then feed the cycles right to left.
      std::vector<int> order(cycles.size());
      for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return coloring[a] < coloring[b]; });
      std::reverse(order.begin(), order.end());
      std::vector<int> hook_lengths, hook_ctypes;
      for (int i : order) {
        hook_lengths.push_back(cycles[i].length());
        hook_ctypes.push_back(cycles[i].ctype);
      }
      for (const auto& [rht, w] : enumerate_rht(gamma, hook_lengths, hook_ctypes)) {
        InvolutionObject obj;
        obj.shape = gamma;
        obj.cells = base_cells;
        for (size_t h = 0; h < rht.hooks.size(); ++h) {
          const Cycle& cyc = cycles[order[h]];
          std::vector<int> ids;
          for (size_t t = 0; t < rht.hooks[h].cells.size(); ++t) {
            auto [r, c] = rht.hooks[h].cells[t];
            int id = cell_at.at({rht.hooks[h].comp, r, c});
            obj.cells[id].index = cyc.entries[t].first;
            obj.cells[id].root = cyc.entries[t].second;
            obj.cells[id].color = coloring[order[h]];
            ids.push_back(id);
          }
          obj.hooks.push_back(std::move(ids));
        }
        sort_hooks_canonically(obj);
        out.push_back(std::move(obj));
        if (static_cast<long long>(out.size()) > max_objects)
          throw BudgetError("object count budget exceeded");
      }
    }
  }
  return out;
}

Laurent object_weight(const InvolutionObject& obj, const ColorRule& rule) {
  Laurent w = Laurent::constant(rule.k, rule.vars, Rational(1));
  Cyclotomic root_part = Cyclotomic::one(rule.k);
  for (const auto& c : obj.cells) {
    long long e = rule.value(c.color) - c.comp;
    root_part *= Cyclotomic::root(rule.k, static_cast<long long>(c.root) * e);
    w *= rule.weight(c.color);
  }
  w = w.scaled(root_part);
  if (obj.south_steps() % 2 == 1) w = -w;
  return w;
}

bool is_valid_object(const InvolutionObject& obj, const ColorRule& rule) {
  int n = static_cast<int>(obj.cells.size());
  std::vector<bool> seen(n + 1, false);
  for (const auto& c : obj.cells) {
    if (c.index < 1 || c.index > n || seen[c.index]) return false;
    seen[c.index] = true;
  }
  // hooks: contiguous paths, one color each, starting at their smallest index
  for (const auto& h : obj.hooks) {
    for (size_t i = 0; i < h.size(); ++i) {
      if (obj.cells[h[i]].color != obj.cells[h[0]].color) return false;
      if (i > 0) {
        int dgrow = obj.cells[h[i]].grow - obj.cells[h[i - 1]].grow;
        int dgcol = obj.cells[h[i]].gcol - obj.cells[h[i - 1]].gcol;
        bool east = dgrow == 0 && dgcol == 1;
        bool south = dgrow == -1 && dgcol == 0;
        if (!east && !south) return false;
      }
      if (obj.cells[h[i]].comp != obj.cells[h[0]].comp) return false;
    }
    if (obj.cells[h[0]].index != min_index_of_hook(obj, h)) return false;
  }
  // multiplicities
  std::vector<std::vector<int>> used(rule.factors.size());
  for (size_t f = 0; f < rule.factors.size(); ++f) used[f].assign(rule.factors[f].size(), 0);
  for (const auto& c : obj.cells)
    for (size_t f = 0; f < rule.factors.size(); ++f)
      if (++used[f][c.color[f]] > rule.factors[f][c.color[f]].multiplicity) return false;
  // the derived placement order must peel legally
  std::vector<Partition> current = obj.shape.comps;
  for (int h : placement_order(obj)) {
    int comp = obj.cells[obj.hooks[h][0]].comp;
    bool found = false;
    for (const auto& cand : rim_hooks_of(current[comp], static_cast<int>(obj.hooks[h].size()))) {
      std::vector<int> ids;
      for (auto [r, c] : cand.cells)
        for (size_t i = 0; i < obj.cells.size(); ++i)
          if (obj.cells[i].comp == comp && obj.cells[i].row == r && obj.cells[i].col == c)
            ids.push_back(static_cast<int>(i));
      if (ids == obj.hooks[h]) {
        current[comp] = remove_hook(current[comp], cand);
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

// Locates the scan cell and dispatches; returns false when obj is fixed.
bool psi_step(InvolutionObject& obj) {
  auto at = position_index(obj);
  int maxrow = 0;
  for (const auto& c : obj.cells) maxrow = std::max(maxrow, c.grow);
  std::vector<int> scan;
  for (int row = 1; row <= maxrow; ++row) {
    std::vector<std::pair<int, int>> line;
    for (size_t i = 0; i < obj.cells.size(); ++i)
      if (obj.cells[i].grow == row) line.push_back({obj.cells[i].gcol, static_cast<int>(i)});
    std::sort(line.begin(), line.end());
    for (auto [gcol, id] : line) scan.push_back(id);
  }
  for (int c : scan) {
    auto it = at.find({obj.cells[c].grow + 1, obj.cells[c].gcol});
    if (it == at.end()) continue;
    int above = it->second;
    int hc = obj.hook_of(c);
    int ha = obj.hook_of(above);
    bool case_a = hc == ha;
    bool case_b = !case_a && obj.hooks[ha].back() == above &&
                  obj.cells[above].color == obj.cells[c].color;
    if (!case_a && !case_b) continue;

    if (case_a) {
      // 1. disconnect c from the cell above it
      auto& hook = obj.hooks[hc];
      auto pos = std::find(hook.begin(), hook.end(), c);
      std::vector<int> suffix(pos, hook.end());
      hook.erase(pos, hook.end());
      // 2. connect the suffix to a same-colored hook ending just west when
      // the index in c exceeds that hook's smallest index
      auto west = at.find({obj.cells[c].grow, obj.cells[c].gcol - 1});
      if (west != at.end()) {
        int hw = obj.hook_of(west->second);
        if (obj.hooks[hw].back() == west->second &&
            obj.cells[west->second].color == obj.cells[c].color &&
            obj.cells[c].index > min_index_of_hook(obj, obj.hooks[hw])) {
          obj.hooks[hw].insert(obj.hooks[hw].end(), suffix.begin(), suffix.end());
          suffix = obj.hooks[hw];
          obj.hooks.erase(obj.hooks.begin() + hw);
        }
      }
      // 3. re-cut the hook containing c at left-to-right index minima
      for (auto& piece : cut_run_at_minima(obj, suffix)) obj.hooks.push_back(std::move(piece));
    } else {
      // case (b)
      int hcc = obj.hook_of(c);
      auto west = at.find({obj.cells[c].grow, obj.cells[c].gcol - 1});
      // 1. split from the west neighbour when it shares the hook
      if (west != at.end() && obj.hook_of(west->second) == hcc) {
        auto& hook = obj.hooks[hcc];
        auto pos = std::find(hook.begin(), hook.end(), c);
        std::vector<int> suffix(pos, hook.end());
        hook.erase(pos, hook.end());
        obj.hooks.push_back(std::move(suffix));
      }
      // 2. connect c's hook below the one ending above
      int h_above = obj.hook_of(above);
      int h_c = obj.hook_of(c);
      obj.hooks[h_above].insert(obj.hooks[h_above].end(), obj.hooks[h_c].begin(),
                                obj.hooks[h_c].end());
      obj.hooks.erase(obj.hooks.begin() + h_c);
      // 3. keep absorbing the hook starting just east while minima decrease
      while (true) {
        int zeta = obj.hook_of(c);
        int end = obj.hooks[zeta].back();
        auto east = at.find({obj.cells[end].grow, obj.cells[end].gcol + 1});
        if (east == at.end()) break;
        int xi = obj.hook_of(east->second);
        if (xi == zeta || obj.hooks[xi].front() != east->second) break;
        if (obj.cells[east->second].color != obj.cells[c].color) break;
        if (min_index_of_hook(obj, obj.hooks[zeta]) >= min_index_of_hook(obj, obj.hooks[xi]))
          break;
        obj.hooks[zeta].insert(obj.hooks[zeta].end(), obj.hooks[xi].begin(), obj.hooks[xi].end());
        obj.hooks.erase(obj.hooks.begin() + xi);
      }
    }
    sort_hooks_canonically(obj);
    return true;
  }
  return false;
}

}  // namespace

InvolutionObject psi(const InvolutionObject& obj) {
  InvolutionObject out = obj;
  psi_step(out);
  return out;
}

bool is_psi_fixed(const InvolutionObject& obj) {
  InvolutionObject probe = obj;
  return !psi_step(probe);
}

InvolutionObject psi_prime(const InvolutionObject& obj, const ColorRule& rule) {
  if (!is_psi_fixed(obj)) throw std::invalid_argument("psi_prime requires a psi-fixed object");
  InvolutionObject out = obj;
  int maxrow = 0;
  for (const auto& c : out.cells) maxrow = std::max(maxrow, c.grow);
  for (int row = 1; row <= maxrow; ++row) {
    std::vector<std::pair<int, int>> line;
    for (size_t i = 0; i < out.cells.size(); ++i)
      if (out.cells[i].grow == row) line.push_back({out.cells[i].gcol, static_cast<int>(i)});
    std::sort(line.begin(), line.end());
    for (auto [gcol, id] : line) {
      long long diff = rule.value(out.cells[id].color) - out.cells[id].comp;
      if (((diff % rule.k) + rule.k) % rule.k != 0) {
        out.cells[id].root = (out.cells[id].root + 1) % rule.k;
        return out;
      }
    }
  }
  return out;  // fixed
}

bool is_psi_prime_fixed(const InvolutionObject& obj, const ColorRule& rule) {
  for (const auto& c : obj.cells) {
    long long diff = rule.value(c.color) - c.comp;
    if (((diff % rule.k) + rule.k) % rule.k != 0) return false;
  }
  return true;
}

std::vector<InvolutionObject> final_fixed_points(const PartitionTuple& gamma,
                                                 const ColorRule& rule, long long group_budget) {
  std::vector<InvolutionObject> out;
  for (const auto& obj : enumerate_objects(gamma, rule, group_budget))
    if (is_psi_fixed(obj) && is_psi_prime_fixed(obj, rule)) out.push_back(obj);
  return out;
}

namespace {

// Reading order for reconstruct/deconstruct: top row first, left to right.
std::vector<int> reading_order(const InvolutionObject& obj) {
  std::vector<int> order(obj.cells.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (obj.cells[a].grow != obj.cells[b].grow) return obj.cells[a].grow > obj.cells[b].grow;
    return obj.cells[a].gcol < obj.cells[b].gcol;
  });
  return order;
}

}  // namespace

InvolutionObject reconstruct(const PartitionTuple& gamma, const ColorRule& rule,
                             const std::vector<ColorRule::Color>& tableau_colors,
                             const ColoredPermutation& sigma) {
  if (!is_valid_ssyt_k(gamma, rule, tableau_colors))
    throw std::invalid_argument("reconstruct: not a tableau in SSYT_k(gamma, rule)");
  InvolutionObject obj;
  obj.shape = gamma;
  obj.cells = layout_cells(gamma);
  for (size_t i = 0; i < obj.cells.size(); ++i) obj.cells[i].color = tableau_colors[i];
  auto order = reading_order(obj);
  for (size_t t = 0; t < order.size(); ++t) {
    obj.cells[order[t]].index = sigma.images[t];
    obj.cells[order[t]].root = sigma.colors[t];
  }
  // hooks: same-colored row runs cut at left-to-right minima
  int maxrow = 0;
  for (const auto& c : obj.cells) maxrow = std::max(maxrow, c.grow);
  for (int row = 1; row <= maxrow; ++row) {
    std::vector<std::pair<int, int>> line;
    for (size_t i = 0; i < obj.cells.size(); ++i)
      if (obj.cells[i].grow == row) line.push_back({obj.cells[i].gcol, static_cast<int>(i)});
    std::sort(line.begin(), line.end());
    std::vector<int> run;
    for (size_t i = 0; i < line.size(); ++i) {
      bool breaks = run.empty();
      if (!run.empty()) {
        int prev = run.back();
        breaks = obj.cells[line[i].second].gcol != obj.cells[prev].gcol + 1 ||
                 obj.cells[line[i].second].color != obj.cells[prev].color;
      }
      if (breaks && !run.empty()) {
        for (auto& piece : cut_run_at_minima(obj, run)) obj.hooks.push_back(std::move(piece));
        run.clear();
      }
      run.push_back(line[i].second);
    }
    if (!run.empty())
      for (auto& piece : cut_run_at_minima(obj, run)) obj.hooks.push_back(std::move(piece));
  }
  sort_hooks_canonically(obj);
  return obj;
}

std::pair<std::vector<ColorRule::Color>, ColoredPermutation> deconstruct(
    const InvolutionObject& obj, const ColorRule& rule) {
  std::vector<ColorRule::Color> colors;
  for (const auto& c : obj.cells) colors.push_back(c.color);
  auto order = reading_order(obj);
  std::vector<int> images, roots;
  for (int id : order) {
    images.push_back(obj.cells[id].index);
    roots.push_back(obj.cells[id].root);
  }
  return {colors, ColoredPermutation(static_cast<int>(obj.cells.size()), rule.k, images, roots)};
}

std::string render_object(const InvolutionObject& obj, const ColorRule& rule) {
  int maxrow = 0, maxcol = 0;
  for (const auto& c : obj.cells) {
    maxrow = std::max(maxrow, c.grow);
    maxcol = std::max(maxcol, c.gcol);
  }
  auto at = position_index(obj);
  const int W = 11;
  std::ostringstream out;
  for (int row = maxrow; row >= 1; --row) {
    std::ostringstream cellline, linkline;
    for (int col = 1; col <= maxcol; ++col) {
      auto it = at.find({row, col});
      if (it == at.end()) {
        cellline << std::string(W, ' ');
        linkline << std::string(W, ' ');
        continue;
      }
      const auto& c = obj.cells[it->second];
      int h = obj.hook_of(it->second);
      // east link when the next path cell lies to the right
      bool east = false, south = false;
      const auto& hook = obj.hooks[h];
      for (size_t i = 0; i + 1 < hook.size(); ++i) {
        if (hook[i] != it->second) continue;
        east = obj.cells[hook[i + 1]].gcol == c.gcol + 1;
        south = obj.cells[hook[i + 1]].grow == c.grow - 1;
      }
      std::string label = "u" + std::to_string(c.root) + " " + std::to_string(c.index) + "/" +
                          rule.color_id(c.color);
      if (static_cast<int>(label.size()) > W - 2) label = label.substr(0, W - 2);
      cellline << "[" << label << std::string(W - 2 - label.size(), ' ') << (east ? "-" : "]");
      linkline << std::string(W / 2, ' ') << (south ? "|" : " ") << std::string(W - W / 2 - 1, ' ');
    }
    out << cellline.str() << "\n";
    if (row > 1) out << linkline.str() << "\n";
  }
  return out.str();
}

}  // namespace wreath
