#include "largeset/rng.hpp"

#include "largeset/errors.hpp"

namespace largeset {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  // == the (index+1)-th splitmix64 output from state `master`, in O(1)
  std::uint64_t s = master + index * 0x9e3779b97f4a7c15ULL;
  return splitmix64_next(s);
}

DetRng::DetRng(std::uint64_t seed) : eng_(stream_seed(seed, 0)) {}

std::uint64_t DetRng::next() { return eng_(); }

std::uint64_t DetRng::below(std::uint64_t bound) {
  if (bound == 0) fail(ErrorKind::InvalidParams, "bound must be positive");
  // reject the top sliver so every residue is equally likely
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = eng_();
  } while (v >= limit);
  return v % bound;
}

double DetRng::unit() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

}  // namespace largeset
