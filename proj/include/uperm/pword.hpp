#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uperm/pattern.hpp"

namespace uperm {

// One letter of a partial word: a concrete positive integer, an
// unrestricted wildcard, or a wildcard restricted to a set D of ranks
// within the covered permutation (rank 1 = smallest).
struct Symbol {
  enum class Kind { Concrete, Diamond, Restricted };

  Kind kind = Kind::Concrete;
  int letter = 0;           // Concrete only
  std::vector<int> ranks;   // Restricted only, sorted, subset of {1..n}

  static Symbol concrete(int v) { return {Kind::Concrete, v, {}}; }
  static Symbol diamond() { return {Kind::Diamond, 0, {}}; }
  static Symbol restricted(std::vector<int> d);

  bool is_concrete() const { return kind == Kind::Concrete; }
  bool is_diamond() const { return kind == Kind::Diamond; }
  bool is_restricted() const { return kind == Kind::Restricted; }

  bool operator==(const Symbol&) const = default;
};

struct PWord {
  std::vector<Symbol> symbols;
  int n = 0;           // window size
  bool cyclic = false;

  int size() const { return static_cast<int>(symbols.size()); }
  bool operator==(const PWord&) const = default;
};

// Build a PWord whose symbols are all concrete.
PWord make_pword(const std::vector<int>& letters, int n, bool cyclic);

PWord make_pword(int n, bool cyclic, std::vector<Symbol> symbols);

// ---- text grammar -------------------------------------------------------
// Header line:  n=<int> cyclic=<0|1>
// Body: whitespace-separated tokens; integer = concrete, `*` = diamond,
// `*{a,b,...}` = restricted diamond.  Round-trip parse/print is identity.

struct ParseError {
  int line = 0;
  int column = 0;
  std::string message;
};

// Throws PWordParseError (carries line/column) on malformed input.
struct PWordParseError : std::runtime_error {
  ParseError where;
  explicit PWordParseError(ParseError e);
};

PWord parse_pword(std::istream& in);
PWord parse_pword(const std::string& text);
std::string to_text(const PWord& u);

// ---- well-formedness ----------------------------------------------------

struct WellFormedness {
  bool ok = true;
  std::string problem;
  // Set when a window holds several restricted diamonds whose D-sets have
  // empty common intersection but overlap pairwise.
  bool pairwise_overlap_warning = false;
};

WellFormedness check_well_formed(const PWord& u);

// ---- coverage -----------------------------------------------------------

// The n-permutations covered by one window of n symbols: concrete letters
// keep their relative order (ties incomparable), each diamond takes any
// rank, each restricted diamond only ranks in its D-set.  Sorted.
std::vector<std::vector<int>> window_coverage(std::span<const Symbol> window,
                                              int n);

// n!/(n-k)! -- coverage of a window with k unrestricted diamonds and
// distinct concrete letters.
long long coverage_count(int n, int k);

struct CoverageReport {
  enum class Verdict { ExactCover, Misses, Duplicates };

  Verdict verdict = Verdict::Misses;
  // permutation -> 0-based start indices of the windows covering it
  std::map<std::vector<int>, std::vector<int>> covers;
  std::vector<std::vector<int>> misses;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> duplicates;
  int min_equal_gap = kInfiniteGap;  // over concrete letters

  bool exact_cover() const { return verdict == Verdict::ExactCover; }
};

std::string to_string(CoverageReport::Verdict v);

// Exact-cover check: unions window_coverage over all windows (cyclic: N
// windows, requires N >= n; non-cyclic: N-n+1 windows).  Reports, never
// throws, on coverage failure.
CoverageReport verify(const PWord& u);

// ---- diamondicity & structural feasibility ------------------------------

struct Diamondicity {
  enum class Status { Ok, NoDiamonds, NotPeriodic };
  Status status = Status::NoDiamonds;
  int value = 0;  // valid when status == Ok
};

// The common number of unrestricted diamonds per length-n window;
// NotPeriodic certifies u cannot be a u-p-word/u-p-cycle for n >= 3.
Diamondicity diamondicity(const PWord& u);

// Necessary conditions from the diamond periodicity lemma and its
// corollaries; returns the violated ones (empty = all applicable hold).
std::vector<std::string> structural_feasibility(int n, const PWord& u);

}  // namespace uperm
