#include "doctest.h"
#include "largeset/errors.hpp"
#include "largeset/incidence.hpp"

using namespace largeset;

TEST_CASE("inclusion system (4,2,1): shape, entries, column sums") {
  const IncidenceSystem sys = IncidenceSystem::design(4, 2, 1);
  CHECK(sys.num_blocks() == 6);
  CHECK(sys.num_tests() == 4);
  CHECK(sys.is_design());
  CHECK(sys.n() == 4);
  // every element of [4] lies in C(3,1) = 3 pairs
  for (const Int& c : sys.column_sums()) CHECK(c == 3);
  // row {1,2} (colex rank 0) hits exactly columns {1} and {2}
  CHECK(sys.entry(0, 0) == 1);
  CHECK(sys.entry(0, 1) == 1);
  CHECK(sys.entry(0, 2) == 0);
  CHECK(sys.entry(0, 3) == 0);
  CHECK(sys.row_sum(0) == 2);
  CHECK(sys.max_abs_entry() == 1);
  CHECK(sys.row_support(0).size() == 2);
}

TEST_CASE("inclusion system (7,3,2) matches subset containment") {
  const IncidenceSystem sys = IncidenceSystem::design(7, 3, 2);
  CHECK(sys.num_blocks() == 35);
  CHECK(sys.num_tests() == 21);
  for (std::size_t b = 0; b < sys.num_blocks(); ++b) {
    CHECK(sys.row_sum(b) == 3);  // C(3,2) t-subsets per block
    const KSet blk = sys.block(b);
    CHECK(sys.block_rank(blk) == b);
  }
  // each pair lies in 5 triples
  for (const Int& c : sys.column_sums()) CHECK(c == 5);
}

TEST_CASE("general matrix systems") {
  const IncidenceSystem sys = IncidenceSystem::from_matrix({{1, 2}, {3, -4}, {0, 5}});
  CHECK(sys.num_blocks() == 3);
  CHECK(sys.num_tests() == 2);
  CHECK_FALSE(sys.is_design());
  CHECK_THROWS_AS(sys.n(), Error);
  CHECK_THROWS_AS(sys.block(0), Error);
  CHECK(sys.max_abs_entry() == 5);
  CHECK(sys.column_sums()[0] == 4);
  CHECK(sys.column_sums()[1] == 3);
  CHECK_THROWS_AS(IncidenceSystem::from_matrix({{1, 2}, {3}}), Error);
  CHECK_THROWS_AS(IncidenceSystem::from_matrix({}), Error);
}

TEST_CASE("size caps refuse oversized instances") {
  SizeCaps tiny;
  tiny.max_rows = 10;
  CHECK_THROWS_AS(IncidenceSystem::design(10, 5, 2, tiny), Error);
  try {
    IncidenceSystem::design(10, 5, 2, tiny);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeCapExceeded);
  }
  SizeCaps few_entries;
  few_entries.max_entries = 100;
  CHECK_THROWS_AS(IncidenceSystem::design(10, 5, 2, few_entries), Error);
}
