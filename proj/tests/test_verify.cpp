#include "doctest.h"
#include "largeset/errors.hpp"
#include "largeset/incidence.hpp"
#include "largeset/verify.hpp"

#include <algorithm>

using namespace largeset;

namespace {

Design fano() {
  Design d;
  d.n = 7;
  d.k = 3;
  d.t = 2;
  d.lambda = 1;
  d.blocks = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {1, 5, 6}, {2, 6, 7}, {1, 3, 7}};
  return d;
}

LargeSetPartition k4_one_factorization() {
  LargeSetPartition ls;
  ls.n = 4;
  ls.k = 2;
  ls.t = 1;
  ls.l = 3;
  ls.parts = {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}};
  return ls;
}

}  // namespace

TEST_CASE("Fano plane verifies as a 2-(7,3,1) design") {
  CHECK(verify_design(fano()).pass);
}

TEST_CASE("coverage counterexample pinpoints the uncovered pair") {
  Design d = fano();
  const KSet removed = d.blocks.back();
  d.blocks.pop_back();
  const VerificationReport rep = verify_design(d);
  REQUIRE_FALSE(rep.pass);
  REQUIRE(rep.counterexample.has_value());
  CHECK(rep.counterexample->kind == CounterexampleKind::CoverageMismatch);
  CHECK(rep.counterexample->expected == 1);
  CHECK(rep.counterexample->actual == 0);
  // the witness pair must come from the removed block
  const KSet w = rep.counterexample->witness;
  REQUIRE(w.size() == 2);
  CHECK(std::includes(removed.begin(), removed.end(), w.begin(), w.end()));
}

TEST_CASE("malformed and duplicate blocks") {
  Design d = fano();
  d.blocks[2] = {3, 4};  // wrong size
  CHECK(verify_design(d).counterexample->kind == CounterexampleKind::MalformedBlock);

  d = fano();
  d.blocks[2] = {9, 10, 11};  // out of range
  CHECK(verify_design(d).counterexample->kind == CounterexampleKind::MalformedBlock);

  d = fano();
  d.blocks[2] = {4, 3, 6};  // unsorted
  CHECK(verify_design(d).counterexample->kind == CounterexampleKind::MalformedBlock);

  d = fano();
  d.blocks[2] = d.blocks[5];
  const VerificationReport rep = verify_design(d);
  CHECK(rep.counterexample->kind == CounterexampleKind::DuplicateBlock);
  CHECK(rep.counterexample->witness == fano().blocks[5]);
}

TEST_CASE("wrong lambda is a coverage mismatch") {
  Design d = fano();
  d.lambda = 2;
  const VerificationReport rep = verify_design(d);
  REQUIRE_FALSE(rep.pass);
  CHECK(rep.counterexample->kind == CounterexampleKind::CoverageMismatch);
  CHECK(rep.counterexample->expected == 2);
  CHECK(rep.counterexample->actual == 1);
}

TEST_CASE("coverage_counts matches hand counts") {
  const auto counts = coverage_counts(fano().blocks, 7, 2);
  REQUIRE(counts.size() == 21);
  for (const auto c : counts) CHECK(c == 1);
  const auto vertex_counts = coverage_counts(fano().blocks, 7, 1);
  for (const auto c : vertex_counts) CHECK(c == 3);
  CHECK_THROWS_AS(coverage_counts({{1, 2}, {1}}, 4, 1), Error);
}

TEST_CASE("one-factorization of K4 verifies as LS(3;1,2,4)") {
  CHECK(verify_large_set(k4_one_factorization()).pass);
}

TEST_CASE("large-set counterexamples") {
  LargeSetPartition ls = k4_one_factorization();
  ls.parts.pop_back();
  auto rep = verify_large_set(ls);
  REQUIRE_FALSE(rep.pass);
  CHECK(rep.counterexample->kind == CounterexampleKind::PartCountMismatch);

  // two identical valid parts: each passes alone, disjointness fails
  ls = k4_one_factorization();
  ls.parts[1] = ls.parts[0];
  rep = verify_large_set(ls);
  REQUIRE_FALSE(rep.pass);
  CHECK(rep.counterexample->kind == CounterexampleKind::NonDisjointParts);
  CHECK(rep.counterexample->part >= 0);
  CHECK(rep.counterexample->other_part >= 0);
  CHECK(rep.counterexample->part != rep.counterexample->other_part);

  // a part that is not a design tags its index
  ls = k4_one_factorization();
  ls.parts[2] = {{1, 2}, {1, 3}};  // covers 1 twice, misses 4
  rep = verify_large_set(ls);
  REQUIRE_FALSE(rep.pass);
  CHECK(rep.counterexample->kind == CounterexampleKind::CoverageMismatch);
  CHECK(rep.counterexample->part == 2);

  // non-integral lambda is a thrown error, not a counterexample
  ls = k4_one_factorization();
  ls.l = 2;
  ls.parts.pop_back();
  CHECK_THROWS_AS(verify_large_set(ls), Error);
}

TEST_CASE("uniform subset == design property on every subset of (4,2,1) rows") {
  const IncidenceSystem sys = IncidenceSystem::design(4, 2, 1);
  const std::size_t nb = sys.num_blocks();
  for (std::size_t mask = 1; mask < (1u << nb); ++mask) {
    std::vector<std::size_t> rows;
    for (std::size_t b = 0; b < nb; ++b)
      if (mask & (1u << b)) rows.push_back(b);

    // oracle: T is "uniform" iff it covers every element equally often
    std::vector<int> cover(4, 0);
    for (const std::size_t b : rows)
      for (const int x : sys.block(b)) ++cover[x - 1];
    const bool design_like =
        std::all_of(cover.begin(), cover.end(), [&](int c) { return c == cover[0]; });

    CHECK(verify_uniform_subset(rows, sys).pass == design_like);
  }
}

TEST_CASE("uniform subset via explicit blocks, with witness on failure") {
  const IncidenceSystem sys = IncidenceSystem::design(4, 2, 1);
  CHECK(verify_uniform_subset(std::vector<KSet>{{1, 2}, {3, 4}}, sys).pass);
  const VerificationReport rep = verify_uniform_subset(std::vector<KSet>{{1, 2}, {1, 3}}, sys);
  REQUIRE_FALSE(rep.pass);
  CHECK(rep.counterexample->kind == CounterexampleKind::UniformityMismatch);
  CHECK_FALSE(rep.counterexample->witness.empty());

  CHECK_THROWS_AS(verify_uniform_subset(std::vector<std::size_t>{}, sys), Error);
  CHECK_THROWS_AS(verify_uniform_subset(std::vector<std::size_t>{0, 0}, sys), Error);
  CHECK_THROWS_AS(verify_uniform_subset(std::vector<std::size_t>{99}, sys), Error);
}

TEST_CASE("all-ones vector lies in the column span of design systems") {
  CHECK(check_constants_in_V(IncidenceSystem::design(4, 2, 1)));
  CHECK(check_constants_in_V(IncidenceSystem::design(7, 3, 2)));
  CHECK(check_constants_in_V(IncidenceSystem::from_matrix({{1, 0}, {0, 2}})));
  CHECK_FALSE(check_constants_in_V(IncidenceSystem::from_matrix({{1, 2}, {2, 4}})));
}

TEST_CASE("symmetry action of permutations on the full inclusion system") {
  const IncidenceSystem sys = IncidenceSystem::design(6, 3, 2);
  CHECK(check_symmetry_action({1, 2, 3, 4, 5, 6}, sys));
  CHECK(check_symmetry_action({2, 3, 4, 5, 6, 1}, sys));  // cyclic shift
  CHECK(check_symmetry_action({6, 5, 4, 3, 2, 1}, sys));  // reversal
  CHECK_THROWS_AS(check_symmetry_action({1, 1, 3, 4, 5, 6}, sys), Error);  // not a bijection
  CHECK_THROWS_AS(check_symmetry_action({1, 2, 3}, sys), Error);           // wrong length
  CHECK_THROWS_AS(check_symmetry_action({1, 2, 3, 4, 5, 6},
                                        IncidenceSystem::from_matrix({{1, 0}, {0, 1}})),
                  Error);  // general systems have no block/test labels
}
