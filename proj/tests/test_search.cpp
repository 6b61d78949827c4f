#include "doctest.h"
#include "largeset/errors.hpp"
#include "largeset/oracles.hpp"
#include "largeset/search.hpp"

using namespace largeset;

TEST_CASE("finds a Fano plane") {
  const SearchOutcome r = search_design(7, 3, 2, 1, {});
  REQUIRE(r.status == SearchOutcome::Status::Found);
  REQUIRE(r.design.has_value());
  CHECK(r.design->blocks.size() == 7);
  CHECK(verify_design(*r.design).pass);
}

TEST_CASE("design search prunes impossible indices without exploring") {
  // lambda above C(n-t, k-t): no block multiset can work
  const SearchOutcome over = search_design(7, 3, 2, 6, {});
  CHECK(over.status == SearchOutcome::Status::Exhausted);
  CHECK(over.nodes == 0);

  // failed divisibility precheck reports the offending s
  const SearchOutcome div = search_design(8, 3, 2, 1, {});
  CHECK(div.status == SearchOutcome::Status::Exhausted);
  CHECK(div.nodes == 0);
  CHECK(div.reason.find("s=0") != std::string::npos);  // C(3,2) does not divide C(8,2)
}

TEST_CASE("counting designs: perfect matchings of K4 and the full design") {
  SearchConfig cfg;
  cfg.count_solutions = true;
  const SearchOutcome matchings = search_design(4, 2, 1, 1, cfg);
  CHECK(matchings.status == SearchOutcome::Status::Exhausted);
  CHECK(matchings.solution_count == 3);
  CHECK(matchings.design.has_value());  // a witness is still reported

  const SearchOutcome whole = search_design(4, 2, 1, 3, cfg);
  CHECK(whole.solution_count == 1);  // only the complete block set
}

TEST_CASE("finds small large sets and verifies them") {
  // LS(3;1,2,4): one-factorization of K4
  const SearchOutcome k4 = search_large_set({4, 2, 1, 3}, {});
  REQUIRE(k4.status == SearchOutcome::Status::Found);
  REQUIRE(k4.large_set.has_value());
  CHECK(k4.large_set->parts.size() == 3);
  CHECK(verify_large_set(*k4.large_set).pass);

  // LS(5;1,2,6): one-factorization of K6
  const SearchOutcome k6 = search_large_set({6, 2, 1, 5}, {});
  REQUIRE(k6.status == SearchOutcome::Status::Found);
  CHECK(verify_large_set(*k6.large_set).pass);

  // LS(2;1,2,5): two disjoint 2-factors of K5
  const SearchOutcome k5 = search_large_set({5, 2, 1, 2}, {});
  REQUIRE(k5.status == SearchOutcome::Status::Found);
  CHECK(verify_large_set(*k5.large_set).pass);
}

TEST_CASE("large-set divisibility precheck short-circuits") {
  const SearchOutcome r = search_large_set({5, 2, 1, 4}, {});
  CHECK(r.status == SearchOutcome::Status::Exhausted);
  CHECK(r.nodes == 0);
  CHECK(r.reason.find("divisibility") != std::string::npos);
}

TEST_CASE("ordered large-set count matches the exact assignment oracle") {
  // without symmetry breaking, complete enumeration counts ordered
  // partitions; the probabilistic oracle counts the same objects
  SearchConfig cfg;
  cfg.count_solutions = true;
  const SearchOutcome counted = search_large_set({4, 2, 1, 3}, cfg);
  CHECK(counted.status == SearchOutcome::Status::Exhausted);
  const ExactHitResult oracle = exact_hit_probability(IncidenceSystem::design(4, 2, 1), 3);
  CHECK(counted.solution_count == oracle.hits);
  CHECK(counted.solution_count == 6);  // 3 matchings into 3 ordered bins
}

TEST_CASE("symmetry breaking changes nodes but not existence") {
  SearchConfig plain;
  plain.symmetry_break = false;
  const SearchOutcome with_sym = search_large_set({4, 2, 1, 3}, {});
  const SearchOutcome without = search_large_set({4, 2, 1, 3}, plain);
  CHECK(with_sym.status == SearchOutcome::Status::Found);
  CHECK(without.status == SearchOutcome::Status::Found);
  CHECK(with_sym.nodes <= without.nodes);
}

TEST_CASE("identical configuration gives identical traces") {
  SearchConfig cfg;
  cfg.strategy = SearchStrategy::RandomizedRestart;
  cfg.seed = 5;
  cfg.restart_nodes = 50;
  const SearchOutcome a = search_large_set({4, 2, 1, 3}, cfg);
  const SearchOutcome b = search_large_set({4, 2, 1, 3}, cfg);
  CHECK(a.status == b.status);
  CHECK(a.nodes == b.nodes);
  CHECK(a.restarts == b.restarts);
  REQUIRE(a.large_set.has_value());
  REQUIRE(b.large_set.has_value());
  CHECK(a.large_set->parts == b.large_set->parts);
}

TEST_CASE("node budget produces BudgetExceeded, not a wrong answer") {
  SearchConfig cfg;
  cfg.node_budget = 5;
  const SearchOutcome r = search_large_set({6, 2, 1, 5}, cfg);
  CHECK(r.status == SearchOutcome::Status::BudgetExceeded);
  CHECK(r.nodes <= 5);
}

TEST_CASE("budgets must be positive") {
  SearchConfig cfg;
  cfg.node_budget = 0;
  CHECK_THROWS_AS(search_large_set({4, 2, 1, 3}, cfg), Error);
}

TEST_CASE("max disjoint designs: K4 matchings assemble into a full partition") {
  const DisjointDesignsResult r = max_disjoint_designs(4, 2, 1, 1, {});
  CHECK(r.designs_enumerated == 3);
  CHECK(r.count == 3);
  REQUIRE(r.witness.size() == 3);
  for (const Design& d : r.witness) CHECK(verify_design(d).pass);
}

TEST_CASE("max disjoint respects its enumeration cap") {
  SearchConfig cfg;
  cfg.design_enumeration_cap = 2;
  CHECK_THROWS_AS(max_disjoint_designs(4, 2, 1, 1, cfg), Error);
  try {
    max_disjoint_designs(4, 2, 1, 1, cfg);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EnumerationCap);
  }
}

TEST_CASE("max disjoint returns zero for divisibility-impossible parameters") {
  const DisjointDesignsResult r = max_disjoint_designs(8, 3, 2, 1, {});
  CHECK(r.count == 0);
  CHECK(r.designs_enumerated == 0);
  CHECK(r.witness.empty());
}

TEST_CASE("randomized restarts still find designs") {
  SearchConfig cfg;
  cfg.strategy = SearchStrategy::RandomizedRestart;
  cfg.seed = 11;
  const SearchOutcome r = search_design(7, 3, 2, 1, cfg);
  REQUIRE(r.status == SearchOutcome::Status::Found);
  CHECK(verify_design(*r.design).pass);
  CHECK(r.restarts >= 1);
}
