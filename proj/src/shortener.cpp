#include "uperm/shortener.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace uperm {

namespace {

Pattern prefix_pattern(const Pattern& p) {
  return reduce(std::span<const int>(p.letters().data(),
                                     static_cast<size_t>(p.size() - 1)));
}

Pattern suffix_pattern(const Pattern& p) {
  return reduce(std::span<const int>(p.letters().data() + 1,
                                     static_cast<size_t>(p.size() - 1)));
}

Pattern monotone_signature(int n, bool increasing) {
  std::vector<int> w(static_cast<size_t>(n - 1));
  std::iota(w.begin(), w.end(), 1);
  if (!increasing) std::reverse(w.begin(), w.end());
  return Pattern(std::move(w));
}

}  // namespace

bool overlaps_consistent(const WindowSequence& ws) {
  int count = static_cast<int>(ws.windows.size());
  int upto = ws.cyclic ? count : count - 1;
  for (int i = 0; i < upto; ++i)
    if (suffix_pattern(ws.windows[static_cast<size_t>(i)]) !=
        prefix_pattern(ws.windows[static_cast<size_t>((i + 1) % count)]))
      return false;
  return true;
}

CollapseSelection least_cycles(const ClusteredGraph& g, int k) {
  std::vector<DoubleEdgeCycle> cycles = double_edge_cycles(g);
  if (k < 0 || k > static_cast<int>(cycles.size()))
    throw std::invalid_argument("least_cycles: k out of range");
  CollapseSelection sel;
  for (int i = 0; i < k; ++i)
    sel.cycle_keys.push_back(cycles[static_cast<size_t>(i)].signatures[0]);
  return sel;
}

ClusteredGraph collapse(const ClusteredGraph& g, const CollapseSelection& sel) {
  std::vector<DoubleEdgeCycle> cycles = double_edge_cycles(g);
  std::map<Pattern, const DoubleEdgeCycle*> by_key;
  for (const DoubleEdgeCycle& c : cycles) by_key[c.signatures[0]] = &c;

  ClusteredGraph out = g;
  for (const Pattern& key : sel.cycle_keys) {
    auto it = by_key.find(key);
    if (it == by_key.end())
      throw std::invalid_argument("collapse: not a cycle key: " + show(key));
    const DoubleEdgeCycle& cyc = *it->second;
    for (size_t i = 0; i < cyc.signatures.size(); ++i) {
      const Pattern& sig = cyc.signatures[i];
      const auto& [t1, t2] = cyc.twin_pairs[i];
      // x1..x_{n-1}  ->  x1..x_{n-1}x1 (tie at distance n-1)
      std::vector<int> merged = sig.letters();
      merged.push_back(sig[0]);
      Pattern label(std::move(merged));
      Pattern to = suffix_pattern(label);

      Cluster& cluster = out.clusters.at(sig);
      std::erase(cluster.members, t1);
      std::erase(cluster.members, t2);
      cluster.members.push_back(label);
      std::sort(cluster.members.begin(), cluster.members.end());

      std::erase_if(out.edges, [&](const GraphEdge& e) {
        return e.from == sig && (e.label == t1 || e.label == t2);
      });
      out.edges.push_back({sig, to, label});
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

namespace {

// Iterative Hierholzer over a per-vertex adjacency order.  Works for both
// closed circuits (balanced graph) and open trails (start has one extra
// out-edge).
WindowSequence hierholzer(const ClusteredGraph& g, const Pattern& start,
                          std::map<Pattern, std::vector<int>> adjacency) {
  std::vector<bool> used(g.edges.size(), false);
  std::map<Pattern, size_t> cursor;
  struct Frame {
    Pattern vertex;
    int in_edge;  // edge that led here, -1 at the root
  };
  std::vector<Frame> stack{{start, -1}};
  std::vector<int> trail;
  while (!stack.empty()) {
    Pattern v = stack.back().vertex;
    auto it = adjacency.find(v);
    size_t& cur = cursor[v];
    int next = -1;
    if (it != adjacency.end()) {
      while (cur < it->second.size()) {
        int e = it->second[cur];
        ++cur;
        if (!used[static_cast<size_t>(e)]) {
          next = e;
          break;
        }
      }
    }
    if (next >= 0) {
      used[static_cast<size_t>(next)] = true;
      stack.push_back({g.edges[static_cast<size_t>(next)].to, next});
    } else {
      if (stack.back().in_edge >= 0) trail.push_back(stack.back().in_edge);
      stack.pop_back();
    }
  }
  if (trail.size() != g.edges.size())
    throw std::logic_error("hierholzer: graph is not Eulerian from " +
                           show(start));
  std::reverse(trail.begin(), trail.end());
  WindowSequence ws;
  for (int e : trail) ws.windows.push_back(g.edges[static_cast<size_t>(e)].label);
  return ws;
}

std::map<Pattern, std::vector<int>> lex_adjacency(const ClusteredGraph& g) {
  std::map<Pattern, std::vector<int>> adj;
  for (size_t i = 0; i < g.edges.size(); ++i)
    adj[g.edges[i].from].push_back(static_cast<int>(i));
  // g.edges is sorted by (from, label), so each list is already in lex
  // label order.
  return adj;
}

}  // namespace

WindowSequence eulerian_circuit(const ClusteredGraph& g, const Pattern& start) {
  if (!balanced(g) || !strongly_connected(g))
    throw std::invalid_argument(
        "eulerian_circuit: graph must be balanced and strongly connected");
  WindowSequence ws = hierholzer(g, start, lex_adjacency(g));
  ws.cyclic = true;
  if (!overlaps_consistent(ws))
    throw std::logic_error("eulerian_circuit: inconsistent overlaps");
  return ws;
}

WindowSequence eulerian_path(const ClusteredGraph& g, const Pattern& from,
                             const Pattern& to) {
  std::map<Pattern, int> net;
  for (const GraphEdge& e : g.edges) {
    ++net[e.from];
    --net[e.to];
  }
  for (const auto& [sig, d] : net) {
    int want = (sig == from ? 1 : 0) - (sig == to ? 1 : 0);
    if (d != want)
      throw std::invalid_argument("eulerian_path: degree mismatch at " +
                                  show(sig));
  }
  WindowSequence ws = hierholzer(g, from, lex_adjacency(g));
  ws.cyclic = false;
  if (!overlaps_consistent(ws))
    throw std::logic_error("eulerian_path: inconsistent overlaps");
  return ws;
}

std::optional<std::vector<int>> realize(const WindowSequence& ws) {
  if (ws.windows.empty())
    throw std::invalid_argument("realize: empty window sequence");
  int n = ws.windows[0].size();
  int count = static_cast<int>(ws.windows.size());
  int length = ws.cyclic ? count : count + n - 1;
  if (ws.cyclic && length < n)
    throw std::invalid_argument("realize: cyclic sequence shorter than n");
  if (!overlaps_consistent(ws))
    throw std::invalid_argument("realize: inconsistent overlaps");

  // Merge-find over word positions.
  std::vector<int> parent(static_cast<size_t>(length));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };

  std::vector<std::pair<int, int>> strict;  // word[first] < word[second]
  for (int w = 0; w < count; ++w) {
    const Pattern& p = ws.windows[static_cast<size_t>(w)];
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        int i = (w + a) % length;
        int j = (w + b) % length;
        if (p[a] == p[b])
          unite(i, j);
        else if (p[a] < p[b])
          strict.emplace_back(i, j);
        else
          strict.emplace_back(j, i);
      }
  }

  // Strict edges between equality classes; a self-edge means infeasible.
  std::set<std::pair<int, int>> edges;
  for (auto [i, j] : strict) {
    int a = find(i), b = find(j);
    if (a == b) return std::nullopt;
    edges.insert({a, b});
  }

  std::map<int, std::vector<int>> next;
  std::map<int, int> indeg;
  std::set<int> classes;
  for (int i = 0; i < length; ++i) classes.insert(find(i));
  for (int c : classes) indeg[c] = 0;
  for (auto [a, b] : edges) {
    next[a].push_back(b);
    ++indeg[b];
  }

  // Kahn order + longest-path layering from sources.
  std::vector<int> ready;
  std::map<int, int> rank;
  for (int c : classes)
    if (indeg[c] == 0) {
      ready.push_back(c);
      rank[c] = 0;
    }
  size_t processed = 0;
  while (!ready.empty()) {
    int c = ready.back();
    ready.pop_back();
    ++processed;
    for (int d : next[c]) {
      rank[d] = std::max(rank[d], rank[c] + 1);
      if (--indeg[d] == 0) ready.push_back(d);
    }
  }
  if (processed != classes.size()) return std::nullopt;  // strict-order cycle

  std::vector<int> word(static_cast<size_t>(length));
  for (int i = 0; i < length; ++i) word[static_cast<size_t>(i)] = rank[find(i)] + 1;
  return word;
}

std::vector<int> generate_uword(int n, int k) {
  if (n < 3 || n > 7)
    throw std::invalid_argument("generate_uword: n must be in 3..7");
  if (k < 0 || k > factorial(n - 2))
    throw std::invalid_argument("generate_uword: k must be in 0..(n-2)!");
  ClusteredGraph g = build_clustered_graph(n);
  ClusteredGraph collapsed = collapse(g, least_cycles(g, k));
  WindowSequence ws = eulerian_circuit(collapsed, monotone_signature(n, true));
  ws.cyclic = false;  // open the circuit into a trail of the same windows
  std::optional<std::vector<int>> word = realize(ws);
  if (!word)
    throw std::logic_error("generate_uword: non-cyclic realization failed");
  return *word;
}

unsigned ucycle_seed(int n, int k) {
  return 0x75e2c8a3u ^ static_cast<unsigned>(n * 1000003 + k);
}

UcycleResult generate_ucycle(int n, int k, int budget) {
  if (n < 3 || n > 7)
    throw std::invalid_argument("generate_ucycle: n must be in 3..7");
  if (k < 0 || k > factorial(n - 2))
    throw std::invalid_argument("generate_ucycle: k must be in 0..(n-2)!");
  ClusteredGraph g = build_clustered_graph(n);
  ClusteredGraph collapsed = collapse(g, least_cycles(g, k));

  std::vector<Pattern> starts;
  for (const auto& [sig, c] : collapsed.clusters) starts.push_back(sig);
  std::mt19937 rng(ucycle_seed(n, k));

  UcycleResult result;
  for (int attempt = 0; attempt < budget; ++attempt) {
    const Pattern& start = starts[static_cast<size_t>(attempt) % starts.size()];
    std::map<Pattern, std::vector<int>> adj = lex_adjacency(collapsed);
    if (attempt >= static_cast<int>(starts.size()))
      for (auto& [sig, list] : adj) std::shuffle(list.begin(), list.end(), rng);
    WindowSequence ws = hierholzer(collapsed, start, std::move(adj));
    ws.cyclic = true;
    ++result.attempts;
    if (std::optional<std::vector<int>> word = realize(ws)) {
      result.word = std::move(word);
      return result;
    }
  }
  return result;
}

PWord construct_restricted(int n, RestrictedMode mode) {
  if (n < 2) throw std::invalid_argument("construct_restricted: n must be >= 2");
  bool inc = mode == RestrictedMode::Increasing;
  ClusteredGraph g = build_clustered_graph(n);
  Pattern csig = monotone_signature(n, inc);

  // Loop at the monotone cluster, and the twin in-edge the diamond absorbs.
  std::vector<int> loop_w(static_cast<size_t>(n));
  std::iota(loop_w.begin(), loop_w.end(), 1);
  if (!inc) std::reverse(loop_w.begin(), loop_w.end());
  Pattern loop_label(std::move(loop_w));

  std::vector<int> absorbed_w;
  if (inc) {
    absorbed_w.push_back(n);
    for (int v = 1; v < n; ++v) absorbed_w.push_back(v);
  } else {
    absorbed_w.push_back(1);
    for (int v = n; v >= 2; --v) absorbed_w.push_back(v);
  }
  Pattern absorbed(std::move(absorbed_w));
  // The absorbed edge runs from its own cluster C' into the monotone
  // cluster; removing it leaves an Eulerian path from C to C'.
  Pattern end_sig = prefix_pattern(absorbed);

  std::erase_if(g.edges, [&](const GraphEdge& e) {
    return e.label == loop_label || e.label == absorbed;
  });

  std::vector<int> letters;
  if (g.edges.empty()) {
    letters = csig.letters();  // n = 2: the path is empty
  } else {
    WindowSequence ws = eulerian_path(g, csig, end_sig);
    std::optional<std::vector<int>> word = realize(ws);
    if (!word)
      throw std::logic_error("construct_restricted: realization failed");
    letters = *word;
  }

  PWord u;
  u.n = n;
  u.cyclic = false;
  u.symbols.push_back(Symbol::restricted({1, n}));
  for (int v : letters) u.symbols.push_back(Symbol::concrete(v));
  return u;
}

}  // namespace uperm
