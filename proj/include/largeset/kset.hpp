#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "largeset/bigint.hpp"

namespace largeset {

// A k-subset of {1..n}: strictly increasing, 1-based elements.
using KSet = std::vector<int>;

// Colexicographic rank of a sorted set: sum over positions i (1-based) of
// C(s_i - 1, i).  Independent of n; first k-set {1..k} has rank 0.
std::uint64_t rank_colex(const KSet& s);
KSet unrank_colex(std::uint64_t r, int n, int k);

// true iff a < b in colex order (compare largest differing element).
bool colex_less(const KSet& a, const KSet& b);

// Visit every t-subset of the sorted set `s` (t <= |s|).
void for_each_subset(const KSet& s, int t, const std::function<void(const KSet&)>& fn);

// Cached bijection {0 .. C(n,k)-1} <-> k-subsets of [n] in colex order.
// Construction refuses instances whose index space does not fit in 63 bits.
class KSetIndexer {
 public:
  KSetIndexer(int n, int k);

  std::uint64_t size() const { return size_; }
  int n() const { return n_; }
  int k() const { return k_; }

  KSet unrank(std::uint64_t r) const;
  std::uint64_t rank(const KSet& s) const;  // validates membership in [n]

 private:
  std::uint64_t choose(int n, int k) const;  // saturating table lookup

  int n_, k_;
  std::uint64_t size_;
  std::vector<std::vector<std::uint64_t>> table_;  // table_[m][j] = C(m, j), saturated
};

}  // namespace largeset
