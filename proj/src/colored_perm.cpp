#include "wreath/colored_perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace wreath {

ColoredPermutation::ColoredPermutation(int n_, int k_, std::vector<int> images_,
                                       std::vector<int> colors_)
    : n(n_), k(k_), images(std::move(images_)), colors(std::move(colors_)) {
  if (static_cast<int>(images.size()) != n || static_cast<int>(colors.size()) != n)
    throw std::invalid_argument("colored permutation arrays must have length n");
  std::vector<bool> seen(n + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("images must be a bijection on 1..n");
    seen[v] = true;
  }
  for (int& c : colors) c = ((c % k) + k) % k;
}

ColoredPermutation ColoredPermutation::identity(int n, int k) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return ColoredPermutation(n, k, img, std::vector<int>(n, 0));
}

bool ColoredPermutation::operator<(const ColoredPermutation& o) const {
  if (n != o.n) return n < o.n;
  if (k != o.k) return k < o.k;
  if (images != o.images) return images < o.images;
  return colors < o.colors;
}

ColoredPermutation ColoredPermutation::inverse() const {
  std::vector<int> img(n), col(n);
  for (int i = 1; i <= n; ++i) {
    int j = images[i - 1];
    img[j - 1] = i;
    col[j - 1] = (k - colors[i - 1]) % k;
  }
  return ColoredPermutation(n, k, img, col);
}

ColoredPermutation compose(const ColoredPermutation& sigma2, const ColoredPermutation& sigma1) {
  if (sigma2.n != sigma1.n || sigma2.k != sigma1.k)
    throw std::invalid_argument("compose: mismatched group parameters");
  int n = sigma1.n;
  std::vector<int> img(n), col(n);
  for (int i = 1; i <= n; ++i) {
    int mid = sigma1.images[i - 1];
    img[i - 1] = sigma2.images[mid - 1];
    col[i - 1] = (sigma2.colors[mid - 1] + sigma1.colors[i - 1]) % sigma1.k;
  }
  return ColoredPermutation(n, sigma1.k, img, col);
}

std::vector<Cycle> cycles_decreasing(const ColoredPermutation& sigma) {
  std::vector<Cycle> cycles;
  std::vector<bool> seen(sigma.n + 1, false);
  // u(sigma, i) is the exponent on the arrow into i: colors[sigma^{-1}(i)].
  std::vector<int> into(sigma.n + 1, 0);
  for (int i = 1; i <= sigma.n; ++i) into[sigma.images[i - 1]] = sigma.colors[i - 1];
  for (int start = 1; start <= sigma.n; ++start) {
    if (seen[start]) continue;
    Cycle c;
    int i = start;
    do {
      seen[i] = true;
      c.entries.push_back({i, into[i]});
      c.ctype = (c.ctype + into[i]) % sigma.k;
      i = sigma.images[i - 1];
    } while (i != start);
    cycles.push_back(std::move(c));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.entries[0].first > b.entries[0].first; });
  return cycles;
}

std::vector<std::pair<int, int>> flatten_cycles(const std::vector<Cycle>& cycles) {
  std::vector<std::pair<int, int>> word;
  for (const auto& c : cycles) word.insert(word.end(), c.entries.begin(), c.entries.end());
  return word;
}

std::vector<Cycle> cut_at_minima(const std::vector<std::pair<int, int>>& word, int k) {
  std::vector<Cycle> cycles;
  size_t i = 0;
  while (i < word.size()) {
    Cycle c;
    int head = word[i].first;
    c.entries.push_back(word[i]);
    c.ctype = word[i].second % k;
    ++i;
    while (i < word.size() && word[i].first > head) {
      c.entries.push_back(word[i]);
      c.ctype = (c.ctype + word[i].second) % k;
      ++i;
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

PartitionTuple class_type(const ColoredPermutation& sigma) {
  std::vector<std::vector<int>> lens(sigma.k);
  for (const auto& c : cycles_decreasing(sigma)) lens[c.ctype].push_back(c.length());
  std::vector<Partition> comps;
  for (auto& v : lens) {
    std::sort(v.rbegin(), v.rend());
    comps.push_back(Partition(v));
  }
  return PartitionTuple(sigma.k, std::move(comps));
}

ColoredPermutation class_representative(const PartitionTuple& lambda) {
  int n = lambda.size();
  std::vector<int> img(n), col(n, 0);
  int next = 1;
  for (int j = 0; j < lambda.k; ++j) {
    for (int len : lambda.comps[j].parts) {
      // Cycle next -> next+1 -> ... -> next+len-1 -> next, colored so its
      // C-type is j: put the whole exponent on the closing arrow.
      for (int i = 0; i < len - 1; ++i) img[next - 1 + i] = next + i + 1;
      img[next + len - 2] = next;
      col[next + len - 2] = j % lambda.k;
      next += len;
    }
  }
  return ColoredPermutation(n, lambda.k, img, col);
}

std::vector<ColoredPermutation> enumerate_group(int n, int k, long long budget) {
  BigInt size = factorial(n) * int_pow(k, n);
  if (size > budget)
    throw BudgetError("group Z_" + std::to_string(k) + " wr S_" + std::to_string(n) +
                      " exceeds enumeration budget");
  std::vector<ColoredPermutation> out;
  out.reserve(static_cast<size_t>(size));
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  do {
    std::vector<int> col(n, 0);
    while (true) {
      out.push_back(ColoredPermutation(n, k, img, col));
      int pos = 0;
      while (pos < n && col[pos] == k - 1) col[pos++] = 0;
      if (pos == n) break;
      col[pos]++;
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

long long class_size_brute_force(const PartitionTuple& lambda, long long budget) {
  long long count = 0;
  for (const auto& sigma : enumerate_group(lambda.size(), lambda.k, budget))
    if (class_type(sigma) == lambda) count++;
  return count;
}

BigInt class_size(const PartitionTuple& lambda) {
  int n = lambda.size();
  Rational z = class_normalizer(lambda);
  Rational size = Rational(factorial(n) * int_pow(lambda.k, n)) / z;
  if (denominator(size) != 1) throw std::logic_error("class size must be integral");
  return numerator(size);
}

std::vector<std::vector<Cyclotomic>> defining_matrix(const ColoredPermutation& sigma) {
  std::vector<std::vector<Cyclotomic>> m(sigma.n,
                                         std::vector<Cyclotomic>(sigma.n, Cyclotomic(sigma.k)));
  for (int j = 1; j <= sigma.n; ++j)
    m[sigma.images[j - 1] - 1][j - 1] = Cyclotomic::root(sigma.k, sigma.colors[j - 1]);
  return m;
}

std::string ColoredPermutation::str() const {
  std::ostringstream out;
  auto cycles = cycles_decreasing(*this);
  for (size_t c = 0; c < cycles.size(); ++c) {
    if (c) out << " | ";
    for (size_t i = 0; i < cycles[c].entries.size(); ++i) {
      if (i) out << " ";
      out << "u" << cycles[c].entries[i].second << " " << cycles[c].entries[i].first;
    }
  }
  return out.str();
}

std::string ColoredPermutation::json_str() const {
  nlohmann::json j;
  j["n"] = n;
  j["k"] = k;
  j["images"] = images;
  j["colors"] = colors;
  return j.dump();
}

ColoredPermutation parse_colored_permutation(const std::string& text, int n, int k) {
  // Accepts either the JSON object form or the one-line cycle form.
  std::string trimmed = text;
  size_t a = trimmed.find_first_not_of(" \t");
  if (a != std::string::npos && trimmed[a] == '{') {
    auto j = nlohmann::json::parse(text);
    return ColoredPermutation(j.value("n", n), j.value("k", k),
                              j.at("images").get<std::vector<int>>(),
                              j.at("colors").get<std::vector<int>>());
  }
  std::vector<std::pair<int, int>> word;
  std::istringstream in(text);
  std::string tok;
  int pending_exp = -1;
  while (in >> tok) {
    if (tok == "|") continue;
    if (tok[0] == 'u') {
      pending_exp = std::stoi(tok.substr(1));
    } else {
      if (pending_exp < 0) throw std::invalid_argument("expected uE before index");
      word.push_back({std::stoi(tok), pending_exp});
      pending_exp = -1;
    }
  }
  auto cycles = cut_at_minima(word, k);
  std::vector<int> img(n, 0), col(n, 0);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.entries.size(); ++i) {
      int from = c.entries[i].first;
      auto [to, exp] = c.entries[(i + 1) % c.entries.size()];
      img[from - 1] = to;
      col[from - 1] = exp;
    }
  }
  for (int v : img)
    if (v == 0) throw std::invalid_argument("cycle form does not cover 1..n");
  return ColoredPermutation(n, k, img, col);
}

}  // namespace wreath
