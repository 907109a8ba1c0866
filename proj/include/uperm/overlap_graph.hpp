#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uperm/pattern.hpp"

namespace uperm {

// All n-patterns whose first n-1 letters reduce to the same
// (n-1)-permutation (the signature).  After collapsing, a member may carry
// one repeated letter at positions 1 and n.
struct Cluster {
  Pattern signature;
  std::vector<Pattern> members;  // sorted

  bool collapsed() const;
};

struct GraphEdge {
  Pattern from;   // signature of the source cluster
  Pattern to;     // signature of the target cluster
  Pattern label;  // the n-pattern realized by traversing this edge

  auto operator<=>(const GraphEdge&) const = default;
};

// The clustered graph of overlapping n-permutations: one cluster per
// (n-1)-permutation, one edge per cluster member.
struct ClusteredGraph {
  int n = 0;
  std::map<Pattern, Cluster> clusters;
  std::vector<GraphEdge> edges;  // sorted by (from, label)
};

// 2 <= n <= 8.  Throws on out-of-range n.
ClusteredGraph build_clustered_graph(int n);

// Twins: same reduced (n-1)-prefix and |last - first| = 1 in both.
// Both arguments must be all-distinct patterns of equal length.
bool is_twins(const Pattern& a, const Pattern& b);

// The unique twin pair of an uncollapsed cluster; throws if collapsed.
std::pair<Pattern, Pattern> find_twins(const Cluster& c);

struct DoubleEdgeCycle {
  std::vector<Pattern> signatures;  // cycle order, starting at lex-least
  // twin labels of the double edge leaving signatures[i]
  std::vector<std::pair<Pattern, Pattern>> twin_pairs;
};

// Partition of all clusters into (n-2)! cycles of length n-1 along the
// double edges.  Sorted by leading signature.
std::vector<DoubleEdgeCycle> double_edge_cycles(const ClusteredGraph& g);

bool balanced(const ClusteredGraph& g);
bool strongly_connected(const ClusteredGraph& g);

// Graphviz export; double edges appear as two parallel arcs.
std::string to_dot(const ClusteredGraph& g);

}  // namespace uperm
