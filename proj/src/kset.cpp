#include "largeset/kset.hpp"

#include <algorithm>
#include <limits>

#include "largeset/errors.hpp"

namespace largeset {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

void check_sorted(const KSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || (i > 0 && s[i] <= s[i - 1]))
      fail(ErrorKind::InvalidParams, "set elements must be strictly increasing and >= 1");
  }
}

}  // namespace

std::uint64_t rank_colex(const KSet& s) {
  check_sorted(s);
  Int r = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    r += binomial(s[i] - 1, static_cast<long long>(i) + 1);
  if (r > std::numeric_limits<std::uint64_t>::max() / 2)
    fail(ErrorKind::SizeCapExceeded, "colex rank exceeds 63-bit range");
  return static_cast<std::uint64_t>(r);
}

KSet unrank_colex(std::uint64_t r, int n, int k) {
  KSetIndexer idx(n, k);
  return idx.unrank(r);
}

bool colex_less(const KSet& a, const KSet& b) {
  if (a.size() != b.size())
    fail(ErrorKind::DimensionMismatch, "colex comparison of sets of different size");
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

void for_each_subset(const KSet& s, int t, const std::function<void(const KSet&)>& fn) {
  const int m = static_cast<int>(s.size());
  if (t < 0 || t > m) fail(ErrorKind::InvalidParams, "subset size out of range");
  std::vector<int> pick(t);
  KSet sub(t);
  for (int i = 0; i < t; ++i) pick[i] = i;
  while (true) {
    for (int i = 0; i < t; ++i) sub[i] = s[pick[i]];
    fn(sub);
    int i = t - 1;
    while (i >= 0 && pick[i] == m - t + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
}

KSetIndexer::KSetIndexer(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 0 || k > n)
    fail(ErrorKind::InvalidParams, "indexer requires 0 <= k <= n");
  table_.assign(n + 1, std::vector<std::uint64_t>(k + 2, 0));
  for (int m = 0; m <= n; ++m) {
    table_[m][0] = 1;
    for (int j = 1; j <= std::min(m, k + 1); ++j) {
      const std::uint64_t a = table_[m - 1][j - 1];
      const std::uint64_t b = (j <= m - 1) ? table_[m - 1][j] : 0;
      std::uint64_t sum = a + b;
      if (a == kSaturated || b == kSaturated || sum < a) sum = kSaturated;
      table_[m][j] = sum;
    }
  }
  size_ = choose(n, k);
  if (size_ >= (std::uint64_t{1} << 63))
    fail(ErrorKind::SizeCapExceeded, "index space exceeds 63-bit range");
}

std::uint64_t KSetIndexer::choose(int n, int k) const {
  if (k < 0 || n < 0 || k > n) return 0;
  return table_[n][k];
}

KSet KSetIndexer::unrank(std::uint64_t r) const {
  if (r >= size_) fail(ErrorKind::InvalidParams, "rank out of range");
  KSet s(k_);
  int m = n_;
  for (int i = k_; i >= 1; --i) {
    // largest m with C(m-1, i) <= r; elements strictly decrease across i.
    while (choose(m - 1, i) > r) --m;
    s[i - 1] = m;
    r -= choose(m - 1, i);
    --m;
  }
  return s;
}

std::uint64_t KSetIndexer::rank(const KSet& s) const {
  if (static_cast<int>(s.size()) != k_)
    fail(ErrorKind::DimensionMismatch, "set size differs from indexer k");
  check_sorted(s);
  if (!s.empty() && s.back() > n_)
    fail(ErrorKind::InvalidParams, "set element exceeds n");
  std::uint64_t r = 0;
  for (int i = 1; i <= k_; ++i) r += choose(s[i - 1] - 1, i);
  return r;
}

}  // namespace largeset
