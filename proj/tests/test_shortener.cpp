#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "uperm/shortener.hpp"

using namespace uperm;

namespace {

std::set<std::vector<int>> member_set(const Cluster& c) {
  std::set<std::vector<int>> s;
  for (const auto& m : c.members) s.insert(m.letters());
  return s;
}

// independent longest-chain oracle: rebuild the constraints of a window
// sequence over the realized word and measure the longest strict chain
int longest_chain(const WindowSequence& ws, const std::vector<int>& word) {
  int len = (int)word.size();
  int n = ws.windows.empty() ? 0 : ws.windows[0].size();
  // strict edges between word values, by every window's pattern
  std::set<std::pair<int, int>> less;
  for (size_t w = 0; w < ws.windows.size(); ++w)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int pi = (int)((w + i) % (size_t)len);
        int pj = (int)((w + j) % (size_t)len);
        if (ws.windows[w][i] < ws.windows[w][j])
          less.insert({word[pi], word[pj]});
      }
  std::map<int, int> depth;
  int best = 1;
  for (int v = 1; v <= len; ++v) {
    if (std::find(word.begin(), word.end(), v) == word.end()) continue;
    depth[v] = 1;
    for (auto& [a, b] : less)
      if (b == v && depth.count(a)) depth[v] = std::max(depth[v], depth[a] + 1);
    best = std::max(best, depth[v]);
  }
  return best;
}

}  // namespace

TEST_CASE("collapse n=3 k=1 merges the unique twin pair per cluster") {
  auto g = build_clustered_graph(3);
  auto h = collapse(g, least_cycles(g, 1));
  CHECK(h.edges.size() == 4);  // n! - k(n-1)
  CHECK(member_set(h.clusters.at(Pattern({1, 2}))) ==
        std::set<std::vector<int>>{{1, 2, 3}, {1, 2, 1}});
  CHECK(member_set(h.clusters.at(Pattern({2, 1}))) ==
        std::set<std::vector<int>>{{2, 1, 2}, {3, 2, 1}});
  CHECK(balanced(h));
  CHECK(strongly_connected(h));
}

TEST_CASE("collapse n=4 k=2 merges twin pairs in two clusters") {
  auto g = build_clustered_graph(4);
  auto h = collapse(g, least_cycles(g, 2));
  CHECK(h.edges.size() == 24 - 2 * 3);
  for (const auto& [sig, c] : h.clusters) CHECK(c.members.size() == 3);
  CHECK(member_set(h.clusters.at(Pattern({1, 2, 3}))) ==
        std::set<std::vector<int>>{{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 2, 3, 1}});
}

TEST_CASE("collapse keeps balance and strong connectivity for every k") {
  for (int n = 3; n <= 5; ++n) {
    auto g = build_clustered_graph(n);
    for (int k = 0; k <= (int)factorial(n - 2); ++k) {
      auto h = collapse(g, least_cycles(g, k));
      CHECK(h.edges.size() == factorial(n) - (size_t)k * (n - 1));
      CHECK(balanced(h));
      CHECK(strongly_connected(h));
    }
  }
  auto g = build_clustered_graph(3);
  CHECK(collapse(g, {}).edges.size() == g.edges.size());  // k=0 unchanged
}

TEST_CASE("eulerian circuits") {
  auto g3 = build_clustered_graph(3);
  auto fig3 = collapse(g3, least_cycles(g3, 1));
  auto ws = eulerian_circuit(fig3, Pattern({1, 2}));
  CHECK(ws.cyclic);
  CHECK(ws.windows.size() == 4);
  CHECK(overlaps_consistent(ws));

  auto g4 = build_clustered_graph(4);
  auto full = eulerian_circuit(g4, Pattern({1, 2, 3}));
  CHECK(full.windows.size() == 24);
  CHECK(overlaps_consistent(full));
  std::set<std::vector<int>> used;
  for (const auto& w : full.windows) used.insert(w.letters());
  CHECK(used.size() == 24);  // every edge exactly once

  auto fig4 = collapse(g4, least_cycles(g4, 2));
  CHECK(eulerian_circuit(fig4, Pattern({1, 2, 3})).windows.size() == 18);
}

TEST_CASE("realize") {
  WindowSequence single{{Pattern({1, 1, 2})}, false};
  auto w = realize(single);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<int>{1, 1, 2});

  auto g3 = build_clustered_graph(3);
  auto fig3 = collapse(g3, least_cycles(g3, 1));
  WindowSequence open = eulerian_circuit(fig3, Pattern({1, 2}));
  open.cyclic = false;
  auto word = realize(open);
  REQUIRE(word.has_value());
  CHECK(word->size() == 6);
  CHECK(order_isomorphic(*word, std::vector<int>{1, 2, 3, 2, 1, 2}));
}

TEST_CASE("non-cyclic realization never fails; windows reduce correctly") {
  for (int n = 3; n <= 4; ++n) {
    auto g = build_clustered_graph(n);
    for (int k = 0; k <= (int)factorial(n - 2); ++k) {
      auto h = collapse(g, least_cycles(g, k));
      for (const auto& [sig, c] : h.clusters) {
        WindowSequence ws = eulerian_circuit(h, sig);
        ws.cyclic = false;
        auto word = realize(ws);
        REQUIRE(word.has_value());
        for (size_t i = 0; i < ws.windows.size(); ++i) {
          std::vector<int> win(word->begin() + i, word->begin() + i + n);
          CHECK(reduce(win) == ws.windows[i]);
        }
        // minimal alphabet: distinct letters == longest strict chain
        std::set<int> letters(word->begin(), word->end());
        CHECK((int)letters.size() == longest_chain(ws, *word));
      }
    }
  }
}

TEST_CASE("generate_uword: lengths n!+(1-k)(n-1) and verdicts") {
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; k <= (int)factorial(n - 2); ++k) {
      auto w = generate_uword(n, k);
      CHECK((long long)w.size() == factorial(n) + (1 - k) * (n - 1));
      CHECK(verify(make_pword(w, n, false)).exact_cover());
      // equal letters sharing a window only at distance exactly n-1 (the
      // collapsed ties); letters may also recur further apart
      int pairs = 0;
      for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
          if (w[i] == w[j] && j - i < (size_t)n) {
            CHECK(j - i == (size_t)(n - 1));
            ++pairs;
          }
      CHECK(pairs == k * (n - 1));
    }
  CHECK_THROWS(generate_uword(3, 2));
  CHECK_THROWS(generate_uword(2, 0));
}

TEST_CASE("generate_ucycle") {
  auto a = generate_ucycle(3, 1);
  REQUIRE(a.word.has_value());
  CHECK(a.word->size() == 4);
  CHECK(order_isomorphic(*a.word, std::vector<int>{1, 2, 3, 2}));
  CHECK(verify(make_pword(*a.word, 3, true)).exact_cover());

  auto b = generate_ucycle(4, 2);
  REQUIRE(b.word.has_value());
  CHECK(b.word->size() == 18);
  CHECK(verify(make_pword(*b.word, 4, true)).exact_cover());

  auto c = generate_ucycle(3, 0);
  REQUIRE(c.word.has_value());
  CHECK(c.word->size() == 6);
  CHECK(verify(make_pword(*c.word, 3, true)).exact_cover());

  // deterministic across calls
  auto b2 = generate_ucycle(4, 2);
  CHECK(b.word == b2.word);
  CHECK(b.attempts == b2.attempts);
}

TEST_CASE("construct_restricted") {
  for (int n = 2; n <= 5; ++n)
    for (auto mode : {RestrictedMode::Increasing, RestrictedMode::Decreasing}) {
      PWord u = construct_restricted(n, mode);
      CHECK(verify(u).exact_cover());
      REQUIRE(u.size() >= 1);
      CHECK(u.symbols[0] == Symbol::restricted({1, n}));
      for (int i = 1; i < u.size(); ++i) CHECK(u.symbols[i].is_concrete());
      if (n >= 3) {
        std::vector<int> prefix;
        for (int i = 1; i < n; ++i) prefix.push_back(u.symbols[i].letter);
        std::vector<int> want(n - 1);
        for (int i = 0; i < n - 1; ++i)
          want[i] = mode == RestrictedMode::Increasing ? i + 1 : n - 1 - i;
        CHECK(reduce(prefix) == reduce(want));
      }
    }
  // n=2: the whole word is the diamond plus one letter
  PWord two = construct_restricted(2, RestrictedMode::Increasing);
  CHECK(two.size() == 2);
}
