#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "uperm/search.hpp"

using namespace uperm;

namespace {

PWord random_word(std::mt19937& rng, bool diamonds) {
  int n = 2 + (int)(rng() % 3);
  int len = n + (int)(rng() % 8);
  std::vector<Symbol> syms;
  for (int i = 0; i < len; ++i) {
    if (diamonds && rng() % 6 == 0)
      syms.push_back(Symbol::diamond());
    else
      syms.push_back(Symbol::concrete(1 + (int)(rng() % (n + 2))));
  }
  return make_pword(n, rng() % 2 == 0, syms);
}

}  // namespace

TEST_CASE("canonical form preserves the verify verdict") {
  std::mt19937 rng(41);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 100; ++trial) {
    PWord u = random_word(rng, trial % 2 == 0);
    if (!check_well_formed(u).ok) continue;
    PWord c = search_canonical_form(u);
    CHECK(verify(u).verdict == verify(c).verdict);
    // idempotent
    CHECK(search_canonical_form(c) == c);
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("search finds classical u-words and u-cycles for n=3") {
  SearchSpec s;
  s.n = 3;
  s.length = 8;
  s.allow_ties = false;
  auto out = search(s);
  REQUIRE(out.status == SearchOutcome::Status::Witness);
  CHECK(verify(*out.witness).exact_cover());

  SearchSpec c;
  c.n = 3;
  c.length = 6;
  c.cyclic = true;
  c.allow_ties = false;
  auto cout_ = search(c);
  REQUIRE(cout_.status == SearchOutcome::Status::Witness);
  CHECK(verify(*cout_.witness).exact_cover());
}

TEST_CASE("rediscovers the length-14 distance-2 u-cycle for n=4") {
  SearchSpec s;
  s.n = 4;
  s.length = 14;
  s.cyclic = true;
  s.min_gap = 2;
  auto out = search(s);
  REQUIRE(out.status == SearchOutcome::Status::Witness);
  auto rep = verify(*out.witness);
  CHECK(rep.exact_cover());
  CHECK(rep.min_equal_gap >= 2);
}

TEST_CASE("no cyclic n=3 word with one diamond per window") {
  // one diamond per window forces 3-periodic positions; N=6 is the only
  // counting-admissible cyclic length
  SearchSpec s;
  s.n = 3;
  s.length = 6;
  s.cyclic = true;
  s.allow_ties = false;
  s.diamond_positions = {1, 4};
  CHECK(search(s).status == SearchOutcome::Status::ExhaustedNoWitness);
}

TEST_CASE("no length-4 word for n=3 with a single diamond") {
  for (int p = 1; p <= 4; ++p) {
    SearchSpec s;
    s.n = 3;
    s.length = 4;
    s.allow_ties = false;
    s.diamond_positions = {p};
    CHECK(search(s).status == SearchOutcome::Status::ExhaustedNoWitness);
  }
}

TEST_CASE("pruning soundness: same outcomes with pruning disabled") {
  std::vector<SearchSpec> specs;
  {
    SearchSpec s;  // satisfiable
    s.n = 3;
    s.length = 6;
    s.cyclic = true;
    s.allow_ties = false;
    specs.push_back(s);
  }
  {
    SearchSpec s;  // unsatisfiable
    s.n = 3;
    s.length = 4;
    s.allow_ties = false;
    s.diamond_positions = {2};
    specs.push_back(s);
  }
  {
    SearchSpec s;  // ties at distance >= 2
    s.n = 3;
    s.length = 4;
    s.cyclic = true;
    s.min_gap = 2;
    specs.push_back(s);
  }
  for (auto s : specs) {
    auto pruned = search(s);
    s.prune = false;
    auto plain = search(s);
    CHECK(pruned.status == plain.status);
  }
}

TEST_CASE("witnesses respect the distance constraint") {
  SearchSpec s;
  s.n = 3;
  s.length = 4;
  s.cyclic = true;
  s.min_gap = 2;
  auto out = search(s);
  REQUIRE(out.status == SearchOutcome::Status::Witness);
  auto rep = verify(*out.witness);
  CHECK(rep.exact_cover());
  CHECK(rep.min_equal_gap >= 2);
}

TEST_CASE("budget is respected") {
  SearchSpec s;
  s.n = 4;
  s.length = 14;
  s.cyclic = true;
  s.min_gap = 2;
  s.budget = 50;
  auto out = search(s);
  CHECK(out.status == SearchOutcome::Status::BudgetExceeded);
  CHECK(out.nodes <= 51);
}

TEST_CASE("jobs sharding returns the same witness") {
  SearchSpec s;
  s.n = 3;
  s.length = 6;
  s.cyclic = true;
  s.allow_ties = false;
  auto one = search(s);
  s.jobs = 3;
  auto many = search(s);
  REQUIRE(one.witness.has_value());
  REQUIRE(many.witness.has_value());
  CHECK(*one.witness == *many.witness);

  SearchSpec u;  // unsatisfiable stays unsatisfiable under sharding
  u.n = 3;
  u.length = 4;
  u.allow_ties = false;
  u.diamond_positions = {2};
  u.jobs = 2;
  CHECK(search(u).status == SearchOutcome::Status::ExhaustedNoWitness);
}

TEST_CASE("confirm_nonexistence") {
  auto rep = confirm_nonexistence("diamond-at-first", 3);
  CHECK(rep.confirmed);
  CHECK_FALSE(rep.unexpected_witness);
  REQUIRE_FALSE(rep.cases.empty());
  CHECK(rep.cases[0].method == "search");

  auto p2 = confirm_nonexistence("period-2", 4);
  CHECK(p2.confirmed);

  CHECK_THROWS_AS(confirm_nonexistence("no-such-theorem", 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(confirm_nonexistence("period-2", 6), std::invalid_argument);
  for (const auto& id : known_theorems()) CHECK_FALSE(id.empty());
}

TEST_CASE("probe_conjecture1") {
  auto a = probe_conjecture1(3, 1);
  REQUIRE(a.status == SearchOutcome::Status::Witness);
  CHECK(a.witness->size() == 4);
  auto b = probe_conjecture1(4, 2);
  REQUIRE(b.status == SearchOutcome::Status::Witness);
  CHECK(b.witness->size() == 18);
  CHECK(verify(*b.witness).exact_cover());
}

TEST_CASE("parse_search_spec") {
  std::istringstream in(
      "# distance-2 cyclic search\n"
      "n = 4\n"
      "length = 14\n"
      "cyclic = 1\n"
      "min_gap = 2\n"
      "diamond_positions = 1,5\n"
      "budget = 100\n");
  auto s = parse_search_spec(in);
  CHECK(s.n == 4);
  CHECK(s.length == 14);
  CHECK(s.cyclic);
  CHECK(s.min_gap == 2);
  CHECK(s.diamond_positions == std::vector<int>{1, 5});
  CHECK(s.budget == 100);

  std::istringstream bad("nonsense\n");
  CHECK_THROWS(parse_search_spec(bad));
  std::istringstream unknown("foo = 3\n");
  CHECK_THROWS(parse_search_spec(unknown));
}

TEST_CASE("restricted-first searches honour prefix constraints") {
  // the sufficient form (a=1, increasing prefix) has a witness at length 7
  SearchSpec good;
  good.n = 3;
  good.length = 7;
  good.allow_ties = false;
  good.restricted_first = {1, 3};
  good.required_prefix = {1, 2};
  auto out = search(good);
  REQUIRE(out.status == SearchOutcome::Status::Witness);
  CHECK(verify(*out.witness).exact_cover());
  CHECK(out.witness->symbols[0] == Symbol::restricted({1, 3}));

  // necessity: a != 1 with an increasing prefix has no witness
  SearchSpec bad = good;
  bad.restricted_first = {2, 3};
  CHECK(search(bad).status == SearchOutcome::Status::ExhaustedNoWitness);
}
