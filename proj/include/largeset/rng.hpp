#pragma once

#include <cstdint>
#include <random>

namespace largeset {

// Stateless mixing step (splitmix64).  Used both to whiten user seeds and as
// the documented worker-split: worker w draws from seed_stream(master, w),
// so merged Monte-Carlo counts are independent of scheduling.
std::uint64_t splitmix64_next(std::uint64_t& state);
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

// Deterministic engine + rejection-sampled bounded draw (no distribution
// objects: their outputs are not pinned across standard library versions).
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed);
  std::uint64_t next();
  // uniform on {0, ..., bound-1}
  std::uint64_t below(std::uint64_t bound);
  double unit();  // uniform on [0,1)

 private:
  std::mt19937_64 eng_;
};

}  // namespace largeset
