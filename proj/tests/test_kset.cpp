#include "doctest.h"
#include "largeset/kset.hpp"

#include <set>

using namespace largeset;

TEST_CASE("colex order of 2-subsets of [4]") {
  // oracle: sort all pairs by largest-then-smaller element
  const std::vector<KSet> expected = {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}};
  for (std::size_t r = 0; r < expected.size(); ++r) {
    CHECK(unrank_colex(r, 4, 2) == expected[r]);
    CHECK(rank_colex(expected[r]) == r);
  }
  for (std::size_t i = 0; i + 1 < expected.size(); ++i)
    CHECK(colex_less(expected[i], expected[i + 1]));
}

TEST_CASE("rank/unrank round-trip across parameter grid") {
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= n; ++k) {
      KSetIndexer idx(n, k);
      std::uint64_t count = 1;
      for (int i = 0; i < k; ++i) count = count * (n - i) / (i + 1);
      REQUIRE(idx.size() == count);
      for (std::uint64_t r = 0; r < idx.size(); ++r) {
        const KSet s = idx.unrank(r);
        REQUIRE(s.size() == static_cast<std::size_t>(k));
        for (std::size_t i = 0; i + 1 < s.size(); ++i) REQUIRE(s[i] < s[i + 1]);
        REQUIRE(s.back() <= n);
        REQUIRE(s.front() >= 1);
        CHECK(idx.rank(s) == r);
        CHECK(rank_colex(s) == r);  // standalone big-int path agrees
        CHECK(unrank_colex(r, n, k) == s);
      }
    }
}

TEST_CASE("colex rank is independent of ambient n") {
  const KSet s = {2, 5, 6};
  CHECK(rank_colex(s) == rank_colex(s));
  KSetIndexer small(6, 3), large(9, 3);
  CHECK(small.rank(s) == large.rank(s));
}

TEST_CASE("for_each_subset visits every t-subset exactly once") {
  const KSet s = {2, 3, 5, 8};
  std::vector<KSet> seen;
  for_each_subset(s, 2, [&](const KSet& a) { seen.push_back(a); });
  CHECK(seen.size() == 6);
  std::set<KSet> uniq(seen.begin(), seen.end());
  CHECK(uniq.size() == 6);
  for (const KSet& a : seen) {
    CHECK(a.size() == 2);
    for (int x : a) CHECK(std::count(s.begin(), s.end(), x) == 1);
  }
}

TEST_CASE("indexer validates membership") {
  KSetIndexer idx(5, 2);
  CHECK_THROWS(idx.rank(KSet{0, 3}));
  CHECK_THROWS(idx.rank(KSet{2, 6}));
  CHECK_THROWS(idx.rank(KSet{3, 3}));
  CHECK_THROWS(idx.rank(KSet{3}));
}
