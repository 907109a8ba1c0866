#include "uperm/pattern.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace uperm {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace {

std::vector<int> reduce_word(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out;
  out.reserve(word.size());
  for (int v : word) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    out.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return out;
}

}  // namespace

Pattern::Pattern(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("Pattern: empty word");
  if (reduce_word(letters_) != letters_)
    throw std::invalid_argument("Pattern: word is not reduced: " +
                                show(std::span<const int>(letters_)));
}

int Pattern::distinct() const {
  return *std::max_element(letters_.begin(), letters_.end());
}

Pattern reduce(std::span<const int> word) {
  if (word.empty()) throw std::invalid_argument("reduce: empty word");
  return Pattern(reduce_word(word));
}

Pattern complement(const Pattern& p) {
  int m = p.distinct();
  std::vector<int> out;
  out.reserve(static_cast<size_t>(p.size()));
  for (int v : p.letters()) out.push_back(m + 1 - v);
  return Pattern(std::move(out));
}

Pattern reversed(const Pattern& p) {
  std::vector<int> out(p.letters().rbegin(), p.letters().rend());
  return reduce(out);
}

bool order_isomorphic(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("order_isomorphic: length mismatch");
  return reduce(a) == reduce(b);
}

namespace {

void linear_extension_dfs(const Pattern& p, int next_value,
                          std::vector<int>& pi, std::vector<bool>& assigned,
                          std::vector<std::vector<int>>& out) {
  int n = p.size();
  if (next_value > n) {
    out.push_back(pi);
    return;
  }
  for (int i = 0; i < n; ++i) {
    if (assigned[static_cast<size_t>(i)]) continue;
    // next_value is the smallest unassigned value, so position i may take
    // it only if everything required to be below it is already placed.
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      if (p[j] < p[i] && !assigned[static_cast<size_t>(j)]) ok = false;
    if (!ok) continue;
    pi[static_cast<size_t>(i)] = next_value;
    assigned[static_cast<size_t>(i)] = true;
    linear_extension_dfs(p, next_value + 1, pi, assigned, out);
    assigned[static_cast<size_t>(i)] = false;
  }
}

}  // namespace

std::vector<std::vector<int>> linear_extensions(const Pattern& p) {
  int n = p.size();
  std::vector<int> pi(static_cast<size_t>(n), 0);
  std::vector<bool> assigned(static_cast<size_t>(n), false);
  std::vector<std::vector<int>> out;
  linear_extension_dfs(p, 1, pi, assigned, out);
  std::sort(out.begin(), out.end());
  return out;
}

Pattern extend(const Pattern& p, int rank) {
  int m = p.distinct();
  if (rank < 0 || rank > m)
    throw std::invalid_argument("extend: rank out of range");
  // Double existing letters so rank*2+1 lands strictly between values.
  std::vector<int> w;
  w.reserve(static_cast<size_t>(p.size()) + 1);
  for (int v : p.letters()) w.push_back(2 * v);
  w.push_back(2 * rank + 1);
  return reduce(w);
}

Pattern extend_equal(const Pattern& p, int pos) {
  if (pos < 0 || pos >= p.size())
    throw std::invalid_argument("extend_equal: position out of range");
  std::vector<int> w = p.letters();
  w.push_back(p[pos]);
  return reduce(w);
}

int min_equal_gap(std::span<const int> word, bool cyclic) {
  int n = static_cast<int>(word.size());
  int best = kInfiniteGap;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (word[static_cast<size_t>(i)] != word[static_cast<size_t>(j)])
        continue;
      int d = j - i;
      if (cyclic) d = std::min(d, n - d);
      best = std::min(best, d);
    }
  return best;
}

const std::vector<std::vector<int>>& all_permutations(int n) {
  if (n < 1 || n > 9)
    throw std::invalid_argument("all_permutations: n out of range");
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cache.emplace(n, std::move(all)).first->second;
}

long long perm_rank(std::span<const int> perm) {
  int n = static_cast<int>(perm.size());
  long long rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (perm[static_cast<size_t>(j)] < perm[static_cast<size_t>(i)])
        ++smaller;
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

std::string show(std::span<const int> word) {
  bool compact =
      std::all_of(word.begin(), word.end(), [](int v) { return v <= 9; });
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) s += ' ';
    s += std::to_string(word[i]);
  }
  return s;
}

}  // namespace uperm
