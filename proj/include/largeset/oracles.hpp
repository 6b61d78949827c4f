#pragma once

#include <cstdint>
#include <vector>

#include "largeset/bigint.hpp"
#include "largeset/incidence.hpp"

namespace largeset {

// Empirical estimate of Pr[X = E[X]].  Trial i uses its own engine seeded
// by stream_seed(seed, i), so the merged hit count does not depend on the
// worker count or scheduling.
struct MonteCarloResult {
  std::uint64_t trials = 0;   // requested
  std::uint64_t consumed = 0; // actually simulated (0 on short-circuit)
  std::uint64_t hits = 0;
  double phat = 0.0;
  double stderr_ = 0.0;       // sqrt(phat(1-phat)/consumed)
  std::uint64_t seed = 0;
  unsigned workers = 1;
  bool short_circuited = false;  // E[X] non-integral, probability exactly 0

  struct Chunk {
    std::uint64_t first = 0, last = 0;  // inclusive trial-index range
    std::uint64_t hits = 0;
  };
  std::vector<Chunk> chunks;
};

MonteCarloResult monte_carlo_hit_probability(const IncidenceSystem& sys, std::uint32_t l,
                                             std::uint64_t trials, std::uint64_t seed,
                                             unsigned workers = 1);

// Full enumeration of all l^|B| assignments.
struct ExactHitResult {
  Int hits = 0;
  Int assignments = 1;  // l^|B|
  Rat probability = 0;
};

ExactHitResult exact_hit_probability(const IncidenceSystem& sys, std::uint32_t l,
                                     std::uint64_t cap = 100'000'000);

}  // namespace largeset
