#include "uperm/pword.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uperm {

Symbol Symbol::restricted(std::vector<int> d) {
  if (d.empty()) throw std::invalid_argument("restricted diamond: empty D");
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return {Kind::Restricted, 0, std::move(d)};
}

PWord make_pword(const std::vector<int>& letters, int n, bool cyclic) {
  PWord u;
  u.n = n;
  u.cyclic = cyclic;
  u.symbols.reserve(letters.size());
  for (int v : letters) u.symbols.push_back(Symbol::concrete(v));
  return u;
}

PWord make_pword(int n, bool cyclic, std::vector<Symbol> symbols) {
  PWord u;
  u.n = n;
  u.cyclic = cyclic;
  u.symbols = std::move(symbols);
  return u;
}

// ---- grammar -------------------------------------------------------------

PWordParseError::PWordParseError(ParseError e)
    : std::runtime_error("parse error at " + std::to_string(e.line) + ":" +
                         std::to_string(e.column) + ": " + e.message),
      where(std::move(e)) {}

namespace {

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  throw PWordParseError(ParseError{line, col, msg});
}

}  // namespace

PWord parse_pword(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) fail(1, 1, "missing header line");

  PWord u;
  {
    std::istringstream hs(header);
    std::string tn, tc;
    if (!(hs >> tn >> tc) || tn.rfind("n=", 0) != 0 ||
        tc.rfind("cyclic=", 0) != 0)
      fail(1, 1, "expected header 'n=<int> cyclic=<0|1>'");
    try {
      u.n = std::stoi(tn.substr(2));
    } catch (const std::exception&) {
      fail(1, 3, "bad n value");
    }
    if (tc.substr(7) == "0")
      u.cyclic = false;
    else if (tc.substr(7) == "1")
      u.cyclic = true;
    else
      fail(1, static_cast<int>(header.find(tc)) + 8, "cyclic must be 0 or 1");
    if (u.n < 1) fail(1, 3, "n must be positive");
  }

  std::string body_line;
  int line_no = 1;
  while (std::getline(in, body_line)) {
    ++line_no;
    size_t i = 0;
    while (i < body_line.size()) {
      if (std::isspace(static_cast<unsigned char>(body_line[i]))) {
        ++i;
        continue;
      }
      int col = static_cast<int>(i) + 1;
      if (body_line[i] == '*') {
        ++i;
        if (i < body_line.size() && body_line[i] == '{') {
          size_t close = body_line.find('}', i);
          if (close == std::string::npos)
            fail(line_no, col, "unterminated '{' in restricted diamond");
          std::vector<int> d;
          size_t j = i + 1;
          while (j < close) {
            size_t k = j;
            while (k < close && body_line[k] != ',') ++k;
            try {
              d.push_back(std::stoi(body_line.substr(j, k - j)));
            } catch (const std::exception&) {
              fail(line_no, static_cast<int>(j) + 1,
                   "bad rank in restricted diamond");
            }
            j = k + 1;
          }
          if (d.empty()) fail(line_no, col, "empty restricted diamond set");
          u.symbols.push_back(Symbol::restricted(std::move(d)));
          i = close + 1;
        } else {
          u.symbols.push_back(Symbol::diamond());
        }
      } else if (std::isdigit(static_cast<unsigned char>(body_line[i]))) {
        size_t k = i;
        while (k < body_line.size() &&
               std::isdigit(static_cast<unsigned char>(body_line[k])))
          ++k;
        u.symbols.push_back(
            Symbol::concrete(std::stoi(body_line.substr(i, k - i))));
        i = k;
      } else {
        fail(line_no, col, std::string("unexpected character '") +
                               body_line[i] + "'");
      }
    }
  }
  if (u.symbols.empty()) fail(line_no + 1, 1, "empty word body");
  return u;
}

PWord parse_pword(const std::string& text) {
  std::istringstream in(text);
  return parse_pword(in);
}

std::string to_text(const PWord& u) {
  std::string s = "n=" + std::to_string(u.n) +
                  " cyclic=" + (u.cyclic ? std::string("1") : std::string("0")) +
                  "\n";
  for (int i = 0; i < u.size(); ++i) {
    if (i > 0) s += ' ';
    const Symbol& sym = u.symbols[static_cast<size_t>(i)];
    switch (sym.kind) {
      case Symbol::Kind::Concrete:
        s += std::to_string(sym.letter);
        break;
      case Symbol::Kind::Diamond:
        s += '*';
        break;
      case Symbol::Kind::Restricted: {
        s += "*{";
        for (size_t j = 0; j < sym.ranks.size(); ++j) {
          if (j > 0) s += ',';
          s += std::to_string(sym.ranks[j]);
        }
        s += '}';
        break;
      }
    }
  }
  s += '\n';
  return s;
}

// ---- well-formedness -----------------------------------------------------

namespace {

std::vector<Symbol> window_at(const PWord& u, int start) {
  std::vector<Symbol> w;
  w.reserve(static_cast<size_t>(u.n));
  for (int j = 0; j < u.n; ++j)
    w.push_back(u.symbols[static_cast<size_t>((start + j) % u.size())]);
  return w;
}

int window_count(const PWord& u) {
  return u.cyclic ? u.size() : u.size() - u.n + 1;
}

}  // namespace

WellFormedness check_well_formed(const PWord& u) {
  WellFormedness r;
  if (u.n < 1) return {false, "window size must be positive", false};
  if (!u.cyclic && u.size() < u.n)
    return {false, "non-cyclic word shorter than window size", false};
  if (u.cyclic && u.size() < u.n)
    return {false, "cyclic word shorter than window size", false};
  for (const Symbol& s : u.symbols) {
    if (s.is_concrete() && s.letter < 1)
      return {false, "concrete letters must be positive", false};
    if (s.is_restricted() &&
        (s.ranks.front() < 1 || s.ranks.back() > u.n))
      return {false, "restricted diamond ranks outside 1..n", false};
  }
  for (int s = 0; s < window_count(u); ++s) {
    std::vector<Symbol> w = window_at(u, s);
    std::vector<const std::vector<int>*> dsets;
    for (const Symbol& sym : w)
      if (sym.is_restricted()) dsets.push_back(&sym.ranks);
    if (dsets.size() < 2) continue;
    // Several restricted diamonds are only meaningful when the common
    // intersection of their D-sets is empty.
    std::vector<int> common = *dsets[0];
    for (size_t i = 1; i < dsets.size(); ++i) {
      std::vector<int> next;
      std::set_intersection(common.begin(), common.end(), dsets[i]->begin(),
                            dsets[i]->end(), std::back_inserter(next));
      common = std::move(next);
    }
    if (!common.empty())
      return {false,
              "window " + std::to_string(s) +
                  ": restricted diamonds share a common rank",
              false};
    for (size_t i = 0; i < dsets.size(); ++i)
      for (size_t j = i + 1; j < dsets.size(); ++j) {
        std::vector<int> pairwise;
        std::set_intersection(dsets[i]->begin(), dsets[i]->end(),
                              dsets[j]->begin(), dsets[j]->end(),
                              std::back_inserter(pairwise));
        if (!pairwise.empty()) r.pairwise_overlap_warning = true;
      }
  }
  return r;
}

// ---- coverage ------------------------------------------------------------

std::vector<std::vector<int>> window_coverage(std::span<const Symbol> window,
                                              int n) {
  if (static_cast<int>(window.size()) != n)
    throw std::invalid_argument("window_coverage: window size != n");

  bool all_concrete = true;
  std::vector<int> concrete;
  for (const Symbol& s : window) {
    if (s.is_concrete())
      concrete.push_back(s.letter);
    else
      all_concrete = false;
  }
  if (all_concrete) return linear_extensions(reduce(concrete));

  std::vector<std::vector<int>> out;
  for (const std::vector<int>& pi : all_permutations(n)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const Symbol& si = window[static_cast<size_t>(i)];
      if (si.is_restricted() &&
          !std::binary_search(si.ranks.begin(), si.ranks.end(),
                              pi[static_cast<size_t>(i)]))
        ok = false;
      if (!si.is_concrete()) continue;
      for (int j = i + 1; j < n && ok; ++j) {
        const Symbol& sj = window[static_cast<size_t>(j)];
        if (!sj.is_concrete()) continue;
        if (si.letter < sj.letter &&
            pi[static_cast<size_t>(i)] > pi[static_cast<size_t>(j)])
          ok = false;
        if (si.letter > sj.letter &&
            pi[static_cast<size_t>(i)] < pi[static_cast<size_t>(j)])
          ok = false;
      }
    }
    if (ok) out.push_back(pi);
  }
  return out;
}

long long coverage_count(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("coverage_count: bad k");
  return factorial(n) / factorial(n - k);
}

std::string to_string(CoverageReport::Verdict v) {
  switch (v) {
    case CoverageReport::Verdict::ExactCover: return "ExactCover";
    case CoverageReport::Verdict::Misses: return "Misses";
    case CoverageReport::Verdict::Duplicates: return "Duplicates";
  }
  return "?";
}

CoverageReport verify(const PWord& u) {
  WellFormedness wf = check_well_formed(u);
  if (!wf.ok) throw std::invalid_argument("verify: malformed p-word: " + wf.problem);

  CoverageReport rep;
  for (int s = 0; s < window_count(u); ++s) {
    std::vector<Symbol> w = window_at(u, s);
    for (std::vector<int>& pi : window_coverage(w, u.n))
      rep.covers[std::move(pi)].push_back(s);
  }
  for (const std::vector<int>& pi : all_permutations(u.n)) {
    auto it = rep.covers.find(pi);
    if (it == rep.covers.end())
      rep.misses.push_back(pi);
    else if (it->second.size() > 1)
      rep.duplicates.emplace_back(pi, it->second);
  }
  if (!rep.duplicates.empty())
    rep.verdict = CoverageReport::Verdict::Duplicates;
  else if (!rep.misses.empty())
    rep.verdict = CoverageReport::Verdict::Misses;
  else
    rep.verdict = CoverageReport::Verdict::ExactCover;

  // Minimum distance between equal concrete letters (the distance-d
  // constraint); diamonds are skipped.
  int size = u.size();
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      const Symbol& a = u.symbols[static_cast<size_t>(i)];
      const Symbol& b = u.symbols[static_cast<size_t>(j)];
      if (!a.is_concrete() || !b.is_concrete() || a.letter != b.letter)
        continue;
      int d = j - i;
      if (u.cyclic) d = std::min(d, size - d);
      rep.min_equal_gap = std::min(rep.min_equal_gap, d);
    }
  return rep;
}

// ---- diamondicity & structural feasibility -------------------------------

Diamondicity diamondicity(const PWord& u) {
  int total = 0;
  for (const Symbol& s : u.symbols)
    if (s.is_diamond()) ++total;
  if (total == 0) return {Diamondicity::Status::NoDiamonds, 0};

  int d = -1;
  for (int s = 0; s < window_count(u); ++s) {
    int count = 0;
    for (int j = 0; j < u.n; ++j)
      if (u.symbols[static_cast<size_t>((s + j) % u.size())].is_diamond())
        ++count;
    if (d == -1)
      d = count;
    else if (count != d)
      return {Diamondicity::Status::NotPeriodic, 0};
  }
  return {Diamondicity::Status::Ok, d};
}

std::vector<std::string> structural_feasibility(int n, const PWord& u) {
  std::vector<std::string> violations;
  int N = u.size();
  int f = 0;
  std::vector<int> diamond_pos;
  for (int i = 0; i < N; ++i)
    if (u.symbols[static_cast<size_t>(i)].is_diamond()) {
      ++f;
      diamond_pos.push_back(i);
    }
  if (f == 0) return violations;  // nothing applicable

  Diamondicity dia = diamondicity(u);
  if (dia.status == Diamondicity::Status::NotPeriodic) {
    violations.push_back("diamond count varies across windows (positions not "
                         "n-periodic)");
    return violations;
  }
  int d = dia.value;
  int k = n - d;

  if (u.cyclic) {
    if (k < 0 || N != factorial(k))
      violations.push_back("cyclic length " + std::to_string(N) +
                           " != k! for k = n - diamondicity = " +
                           std::to_string(k));
    int c = std::gcd(n, N);
    bool periodic = true;
    for (int p : diamond_pos)
      if (!u.symbols[static_cast<size_t>((p + c) % N)].is_diamond())
        periodic = false;
    if (!periodic)
      violations.push_back("diamond positions not periodic with period gcd(n,N) = " +
                           std::to_string(c));
    if (k >= 0 && (n - k) % (n / c) != 0)
      violations.push_back("n/c = " + std::to_string(n / c) +
                           " does not divide n-k = " + std::to_string(n - k));
  } else {
    if (k < 0 || N != factorial(k) + n - 1)
      violations.push_back("length " + std::to_string(N) +
                           " != (n-d)!+n-1 for diamondicity d = " +
                           std::to_string(d));
    if (n > 3 * f + 1)
      violations.push_back("n = " + std::to_string(n) + " exceeds 3f+1 = " +
                           std::to_string(3 * f + 1));
  }
  return violations;
}

}  // namespace uperm
