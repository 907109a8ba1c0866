#pragma once

#include <compare>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace uperm {

// Distance reported by min_equal_gap when a word has no repeated letter.
inline constexpr int kInfiniteGap = std::numeric_limits<int>::max();

long long factorial(int n);

// A reduced word over positive integers: the letters used are exactly
// 1..m for m = number of distinct letters.  Repeated letters stand for
// incomparable elements.  A Pattern with all letters distinct is a
// permutation of {1..size()}.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<int> letters);  // throws if not reduced

  const std::vector<int>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  int distinct() const;          // = max letter, since reduced
  bool all_distinct() const { return distinct() == size(); }
  int operator[](int i) const { return letters_[static_cast<size_t>(i)]; }

  auto operator<=>(const Pattern&) const = default;

 private:
  std::vector<int> letters_;
};

// red(w): replace each copy of the i-th smallest value by i.
// red(2547) = 1324, red(436326) = 324214.
Pattern reduce(std::span<const int> word);
inline Pattern reduce(const std::vector<int>& w) {
  return reduce(std::span<const int>(w));
}

// Each letter v over m distinct values maps to m+1-v.
Pattern complement(const Pattern& p);

// Letters in reverse order.
Pattern reversed(const Pattern& p);

// True iff reduce(a) == reduce(b); ties must match ties.
// Throws on length mismatch.
bool order_isomorphic(std::span<const int> a, std::span<const int> b);

// All permutations pi of {1..len(p)} such that p_i < p_j implies
// pi_i < pi_j.  Equal letters of p are mutually unconstrained.
// Sorted lexicographically.
std::vector<std::vector<int>> linear_extensions(const Pattern& p);

// Adjoin a value of the given rank at the end and re-reduce.  Rank r in
// 0..m inserts strictly between the r-th and (r+1)-th smallest distinct
// values (0 = below all, m = above all); this is the x+/x- calculus.
Pattern extend(const Pattern& p, int rank);

// Adjoin a value exactly equal to the letter at 0-based position pos.
Pattern extend_equal(const Pattern& p, int pos);

// Minimum positional distance between two equal letters, kInfiniteGap if
// all letters are distinct.  Cyclic distance is min(|i-j|, N-|i-j|).
int min_equal_gap(std::span<const int> word, bool cyclic);
inline int min_equal_gap(const std::vector<int>& w, bool cyclic) {
  return min_equal_gap(std::span<const int>(w), cyclic);
}

// All permutations of {1..n} in lexicographic order; cached per n (n <= 9).
const std::vector<std::vector<int>>& all_permutations(int n);

// Lexicographic rank of a permutation of {1..n} in 0..n!-1.
long long perm_rank(std::span<const int> perm);

// Compact rendering: digits concatenated while all letters are <= 9,
// otherwise space-separated.
std::string show(std::span<const int> word);
inline std::string show(const std::vector<int>& w) {
  return show(std::span<const int>(w));
}
inline std::string show(const Pattern& p) { return show(p.letters()); }

}  // namespace uperm
