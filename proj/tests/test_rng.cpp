#include "doctest.h"
#include "largeset/process.hpp"
#include "largeset/rng.hpp"

#include <cmath>
#include <set>
#include <vector>

using namespace largeset;

TEST_CASE("stream_seed(master, i) equals the i-th sequential splitmix64 output") {
  const std::uint64_t master = 0xdeadbeefcafef00dULL;
  std::uint64_t state = master;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::uint64_t sequential = splitmix64_next(state);
    CHECK(stream_seed(master, i) == sequential);
  }
}

TEST_CASE("stream seeds are pairwise distinct across trials and masters") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t m : {0ULL, 1ULL, 42ULL, ~0ULL})
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(stream_seed(m, i));
  CHECK(seen.size() == 4000);
}

TEST_CASE("DetRng is deterministic and below() is exact") {
  DetRng a(7), b(7), c(8);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t va = a.next();
    all_equal = all_equal && (va == b.next());
    any_diff = any_diff || (va != c.next());
  }
  CHECK(all_equal);
  CHECK(any_diff);

  DetRng r(3);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const std::uint64_t v = r.below(7);
    REQUIRE(v < 7);
    ++counts[v];
  }
  // 5-sigma band around 10000 with sigma = sqrt(N p (1-p)) ~ 92.6
  for (int cnt : counts) CHECK(std::abs(cnt - 10000) < 5 * 93);

  for (int i = 0; i < 1000; ++i) {
    const double u = r.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(r.below(1) == 0);
}

TEST_CASE("sampled assignments are uniform over bins") {
  const std::uint32_t l = 4;
  const std::size_t nb = 6;
  std::vector<std::int64_t> counts(l, 0);
  const int reps = 20000;
  for (int s = 0; s < reps; ++s) {
    const Assignment tau = sample_assignment(stream_seed(11, s), nb, l);
    REQUIRE(tau.bins.size() == nb);
    REQUIRE(tau.l == l);
    for (const auto bin : tau.bins) {
      REQUIRE(bin >= 1);
      REQUIRE(bin <= l);
      ++counts[bin - 1];
    }
  }
  const double n = static_cast<double>(reps) * nb;
  const double expect = n / l;
  const double sigma = std::sqrt(n * (1.0 / l) * (1.0 - 1.0 / l));
  for (const auto cnt : counts) CHECK(std::abs(cnt - expect) < 5 * sigma);
}

TEST_CASE("same seed gives the same assignment") {
  const Assignment a = sample_assignment(123, 10, 3);
  const Assignment b = sample_assignment(123, 10, 3);
  const Assignment c = sample_assignment(124, 10, 3);
  CHECK(a.bins == b.bins);
  CHECK(a.bins != c.bins);  // 1/3^10 false-failure chance, accepted
}
