#pragma once

#include <optional>
#include <vector>

#include "uperm/overlap_graph.hpp"
#include "uperm/pword.hpp"

namespace uperm {

// Double-edge cycles chosen for collapsing, identified by the lex-least
// signature of each cycle.
struct CollapseSelection {
  std::vector<Pattern> cycle_keys;
};

// An ordered list of overlapping n-patterns; consecutive windows satisfy
// reduce(last n-1 of w_i) == reduce(first n-1 of w_{i+1}), cyclically when
// cyclic is set.
struct WindowSequence {
  std::vector<Pattern> windows;
  bool cyclic = false;
};

bool overlaps_consistent(const WindowSequence& ws);

// Replace the twin pair of every double edge in the chosen cycles by the
// single label x1..x_{n-1}x1 (one incomparable pair at distance n-1).
// Preserves balance and strong connectivity.
ClusteredGraph collapse(const ClusteredGraph& g, const CollapseSelection& sel);

// Convenience: the k lex-least double-edge cycles of g.
CollapseSelection least_cycles(const ClusteredGraph& g, int k);

// Hierholzer with lexicographically least unused edge label at each step.
// Throws if g is not balanced and strongly connected.
WindowSequence eulerian_circuit(const ClusteredGraph& g, const Pattern& start);

// Eulerian open trail for a graph where `from` has one extra out-edge and
// `to` one extra in-edge (used by the restricted-diamond construction).
WindowSequence eulerian_path(const ClusteredGraph& g, const Pattern& from,
                             const Pattern& to);

// Turn a window sequence into a concrete word of positive integers: one
// variable per position, equality merges for repeated pattern letters,
// strict edges otherwise, then longest-path layering.  Returns nullopt on
// a strict-order cycle (possible only in the cyclic case).
std::optional<std::vector<int>> realize(const WindowSequence& ws);

// Theorem-1 construction: a verified u-word for n-permutations of length
// n! + (1-k)(n-1), with equal letters only at distance exactly n-1.
// 3 <= n <= 7, 0 <= k <= (n-2)!.
std::vector<int> generate_uword(int n, int k);

struct UcycleResult {
  std::optional<std::vector<int>> word;  // length n! - k(n-1) when present
  int attempts = 0;                      // circuits tried
};

// Experimental probe of the u-cycle conjecture: tries Eulerian circuits of
// the k-collapsed graph under a retry budget; exhausting the budget means
// "not found", never "impossible".
UcycleResult generate_ucycle(int n, int k, int budget = 1000);

// Seed of the deterministic retry shuffles inside generate_ucycle.
unsigned ucycle_seed(int n, int k);

enum class RestrictedMode { Increasing, Decreasing };

// A u-p-word of the form <restricted diamond> u2..uN whose prefix
// u2..un reduces to 12..(n-1) (Increasing) or (n-1)..1 (Decreasing);
// the diamond carries D = {1, n}.
PWord construct_restricted(int n, RestrictedMode mode);

}  // namespace uperm
