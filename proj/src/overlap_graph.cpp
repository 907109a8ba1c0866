#include "uperm/overlap_graph.hpp"

#include <algorithm>
#include <deque>
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

}  // namespace

bool Cluster::collapsed() const {
  return std::any_of(members.begin(), members.end(),
                     [](const Pattern& m) { return !m.all_distinct(); });
}

ClusteredGraph build_clustered_graph(int n) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("build_clustered_graph: n must be in 2..8");
  ClusteredGraph g;
  g.n = n;
  for (const std::vector<int>& pi : all_permutations(n)) {
    Pattern label{std::vector<int>(pi)};
    Pattern from = prefix_pattern(label);
    Pattern to = suffix_pattern(label);
    auto [it, inserted] = g.clusters.try_emplace(from);
    if (inserted) it->second.signature = from;
    it->second.members.push_back(label);
    g.edges.push_back({from, to, label});
  }
  for (auto& [sig, cluster] : g.clusters)
    std::sort(cluster.members.begin(), cluster.members.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool is_twins(const Pattern& a, const Pattern& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("is_twins: length mismatch");
  if (!a.all_distinct() || !b.all_distinct())
    throw std::invalid_argument("is_twins: arguments must be permutations");
  if (a == b) return false;
  if (prefix_pattern(a) != prefix_pattern(b)) return false;
  auto ends_adjacent = [](const Pattern& p) {
    return std::abs(p[p.size() - 1] - p[0]) == 1;
  };
  return ends_adjacent(a) && ends_adjacent(b);
}

std::pair<Pattern, Pattern> find_twins(const Cluster& c) {
  if (c.collapsed())
    throw std::invalid_argument("find_twins: cluster already collapsed");
  std::pair<Pattern, Pattern> found;
  int count = 0;
  for (size_t i = 0; i < c.members.size(); ++i)
    for (size_t j = i + 1; j < c.members.size(); ++j)
      if (is_twins(c.members[i], c.members[j])) {
        found = {c.members[i], c.members[j]};
        ++count;
      }
  if (count != 1)
    throw std::logic_error("find_twins: expected exactly one twin pair, got " +
                           std::to_string(count));
  return found;
}

std::vector<DoubleEdgeCycle> double_edge_cycles(const ClusteredGraph& g) {
  for (const auto& [sig, c] : g.clusters)
    if (c.collapsed())
      throw std::invalid_argument("double_edge_cycles: graph has collapsed "
                                  "clusters");

  // Group parallel edges; a double edge is exactly a twin pair.
  std::map<std::pair<Pattern, Pattern>, std::vector<Pattern>> parallel;
  for (const GraphEdge& e : g.edges) parallel[{e.from, e.to}].push_back(e.label);

  std::map<Pattern, Pattern> succ;  // along double edges
  std::map<Pattern, std::pair<Pattern, Pattern>> twins_out;
  for (const auto& [ft, labels] : parallel) {
    if (labels.size() < 2) continue;
    if (labels.size() > 2)
      throw std::logic_error("double_edge_cycles: triple edge found");
    succ[ft.first] = ft.second;
    twins_out[ft.first] = {labels[0], labels[1]};
  }

  std::vector<DoubleEdgeCycle> cycles;
  std::set<Pattern> seen;
  for (const auto& [sig, cluster] : g.clusters) {
    if (seen.count(sig)) continue;
    DoubleEdgeCycle cyc;
    Pattern cur = sig;
    do {
      seen.insert(cur);
      cyc.signatures.push_back(cur);
      cyc.twin_pairs.push_back(twins_out.at(cur));
      cur = succ.at(cur);
    } while (cur != sig);
    cycles.push_back(std::move(cyc));
  }
  // Clusters iterate in lex order, so each cycle already starts at its
  // lex-least signature and the list is sorted by that key.
  return cycles;
}

bool balanced(const ClusteredGraph& g) {
  std::map<Pattern, int> out_deg, in_deg;
  for (const GraphEdge& e : g.edges) {
    ++out_deg[e.from];
    ++in_deg[e.to];
  }
  for (const auto& [sig, cluster] : g.clusters)
    if (out_deg[sig] != in_deg[sig]) return false;
  return true;
}

bool strongly_connected(const ClusteredGraph& g) {
  if (g.clusters.empty()) return false;
  auto reachable = [&](bool forward) {
    std::set<Pattern> seen{g.clusters.begin()->first};
    std::deque<Pattern> queue{g.clusters.begin()->first};
    while (!queue.empty()) {
      Pattern cur = queue.front();
      queue.pop_front();
      for (const GraphEdge& e : g.edges) {
        const Pattern& src = forward ? e.from : e.to;
        const Pattern& dst = forward ? e.to : e.from;
        if (src == cur && !seen.count(dst)) {
          seen.insert(dst);
          queue.push_back(dst);
        }
      }
    }
    return seen.size() == g.clusters.size();
  };
  return reachable(true) && reachable(false);
}

std::string to_dot(const ClusteredGraph& g) {
  std::string s = "digraph clusters {\n";
  for (const auto& [sig, cluster] : g.clusters)
    s += "  \"" + show(sig) + "\";\n";
  for (const GraphEdge& e : g.edges)
    s += "  \"" + show(e.from) + "\" -> \"" + show(e.to) + "\" [label=\"" +
         show(e.label) + "\"];\n";
  s += "}\n";
  return s;
}

}  // namespace uperm
