#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uperm/pword.hpp"

namespace uperm {

// A depth-first search over candidate words up to order isomorphism.
// Candidates are explored by the relations of each new letter to the
// letters it can share a window with; that quotient is lossless for
// exact-cover verification.
struct SearchSpec {
  int n = 3;
  int length = 0;
  bool cyclic = false;

  int min_gap = 1;         // d: equal letters at distance >= min_gap
  bool exact_gap = false;  // equal letters at distance exactly min_gap
  bool allow_ties = true;
  int max_letters = 0;     // 0 = unbounded; tightening risks missing witnesses

  std::vector<int> diamond_positions;  // 1-based, forced unrestricted diamonds
  std::vector<int> restricted_first;   // nonempty: position 1 is a restricted
                                       // diamond with this D-set
  std::vector<int> required_prefix;    // pattern the positions right after a
                                       // leading diamond must reduce to

  long long budget = 0;  // node limit, 0 = unbounded
  int jobs = 1;          // worker shards over the first branching point
  bool prune = true;     // duplicate-coverage and rotation pruning
};

struct SearchOutcome {
  enum class Status { Witness, ExhaustedNoWitness, BudgetExceeded };

  Status status = Status::ExhaustedNoWitness;
  std::optional<PWord> witness;
  long long nodes = 0;
  std::map<std::string, long long> prunes;
};

std::string to_string(SearchOutcome::Status s);

SearchOutcome search(const SearchSpec& spec);

// The representative of `u` in the search's canonical quotient: every
// letter is re-embedded by its relations to the letters within window
// reach; verify's verdict is invariant under this map.
PWord search_canonical_form(const PWord& u);

// ---- non-existence confirmations ----------------------------------------

struct TheoremCase {
  std::string description;
  std::string method;  // "search" or "structural"
  bool refuted = false;
  std::string detail;
  SearchOutcome outcome;  // populated for search cases
};

struct TheoremReport {
  std::string theorem_id;
  int n = 0;
  bool confirmed = false;            // every case refuted
  bool unexpected_witness = false;   // red alert: a case found a witness
  std::vector<TheoremCase> cases;
};

// theorem_id in {diamond-at-first, diamond-at-second, single-diamond,
// upcycle-prime-or-4, period-2}.  Throws on unknown ids.
TheoremReport confirm_nonexistence(const std::string& theorem_id, int n);

std::vector<std::string> known_theorems();

// ---- conjecture probe -----------------------------------------------------

// Drives the collapse-based u-cycle construction across Eulerian circuits;
// a witness supports the conjecture, exhaustion of the budget refutes
// nothing ("construction-space exhausted").
SearchOutcome probe_conjecture1(int n, int k, int budget = 1000);

// key=value text config ('#' comments).  Keys: n, length, cyclic, min_gap,
// exact_gap, allow_ties, max_letters, diamond_positions, restricted_first,
// required_prefix, budget, jobs, prune.
SearchSpec parse_search_spec(std::istream& in);

}  // namespace uperm
