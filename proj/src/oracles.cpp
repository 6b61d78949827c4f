#include "largeset/oracles.hpp"

#include <cmath>
#include <thread>

#include "largeset/errors.hpp"
#include "largeset/process.hpp"
#include "largeset/rng.hpp"

namespace largeset {

namespace {

// Integer target E[X] in the flat layout, or empty optional if any
// coordinate is non-integral.
std::optional<std::vector<std::int64_t>> integral_mean(const IncidenceSystem& sys,
                                                       std::uint32_t l) {
  const auto& sums = sys.column_sums();
  std::vector<std::int64_t> target(sys.num_tests() * (l - 1));
  for (std::size_t a = 0; a < sys.num_tests(); ++a) {
    if (sums[a] % l != 0) return std::nullopt;
    const std::int64_t v = to_int64(sums[a] / l);
    for (std::uint32_t j = 1; j < l; ++j) target[flat_index(a, j, l)] = v;
  }
  return target;
}

void check_int64_headroom(const IncidenceSystem& sys) {
  // every X coordinate is a sum of at most |B| entries
  const Int bound = Int(sys.num_blocks()) * sys.max_abs_entry();
  if (bound > (Int(1) << 62))
    fail(ErrorKind::SizeCapExceeded, "statistic magnitude exceeds the int64 fast path");
}

}  // namespace

MonteCarloResult monte_carlo_hit_probability(const IncidenceSystem& sys, std::uint32_t l,
                                             std::uint64_t trials, std::uint64_t seed,
                                             unsigned workers) {
  if (l < 1) fail(ErrorKind::InvalidParams, "require l >= 1");
  if (workers < 1) fail(ErrorKind::InvalidParams, "require workers >= 1");
  MonteCarloResult res;
  res.trials = trials;
  res.seed = seed;
  res.workers = workers;

  const auto target = integral_mean(sys, l);
  if (!target) {
    res.short_circuited = true;
    return res;  // phat = 0, zero trials consumed
  }
  check_int64_headroom(sys);

  res.consumed = trials;
  if (trials == 0) return res;

  const std::size_t dim = target->size();
  const std::size_t nb = sys.num_blocks();

  auto run_range = [&](std::uint64_t first, std::uint64_t last) -> std::uint64_t {
    std::uint64_t local_hits = 0;
    std::vector<std::int64_t> x(dim);
    for (std::uint64_t i = first; i <= last; ++i) {
      DetRng rng(stream_seed(seed, i));
      std::fill(x.begin(), x.end(), 0);
      for (std::size_t b = 0; b < nb; ++b) {
        const std::uint32_t bin = static_cast<std::uint32_t>(rng.below(l)) + 1;
        if (bin == l) continue;
        for (const auto& [a, v] : sys.row_support(b)) x[flat_index(a, bin, l)] += v;
      }
      if (x == *target) ++local_hits;
    }
    return local_hits;
  };

  const std::uint64_t w = std::min<std::uint64_t>(workers, trials);
  const std::uint64_t q = trials / w, r = trials % w;
  std::vector<MonteCarloResult::Chunk> chunks(w);
  std::uint64_t start = 0;
  for (std::uint64_t i = 0; i < w; ++i) {
    const std::uint64_t len = q + (i < r ? 1 : 0);
    chunks[i].first = start;
    chunks[i].last = start + len - 1;
    start += len;
  }
  if (w == 1) {
    chunks[0].hits = run_range(chunks[0].first, chunks[0].last);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(w);
    for (std::uint64_t i = 0; i < w; ++i)
      threads.emplace_back(
          [&, i] { chunks[i].hits = run_range(chunks[i].first, chunks[i].last); });
    for (auto& th : threads) th.join();
  }
  for (const auto& c : chunks) res.hits += c.hits;
  res.chunks = std::move(chunks);
  res.phat = static_cast<double>(res.hits) / static_cast<double>(trials);
  res.stderr_ = std::sqrt(res.phat * (1.0 - res.phat) / static_cast<double>(trials));
  return res;
}

ExactHitResult exact_hit_probability(const IncidenceSystem& sys, std::uint32_t l,
                                     std::uint64_t cap) {
  if (l < 1) fail(ErrorKind::InvalidParams, "require l >= 1");
  ExactHitResult res;
  res.assignments = int_pow(Int(l), static_cast<unsigned long>(sys.num_blocks()));
  if (res.assignments > cap)
    fail(ErrorKind::EnumerationCap, "l^|B| = " + res.assignments.str() +
                                        " exceeds enumeration cap " + std::to_string(cap));

  const auto target = integral_mean(sys, l);
  if (!target) {
    res.probability = 0;
    return res;
  }
  check_int64_headroom(sys);

  const std::size_t nb = sys.num_blocks();
  const std::size_t dim = target->size();

  // odometer over bins, X maintained incrementally with a mismatch counter
  std::vector<std::uint32_t> digit(nb, 0);  // bin = digit + 1
  std::vector<std::int64_t> x(dim, 0);
  std::size_t mismatches = 0;

  auto touch = [&](std::size_t idx, std::int64_t delta) {
    const bool was = x[idx] == (*target)[idx];
    x[idx] += delta;
    const bool now = x[idx] == (*target)[idx];
    if (was && !now) ++mismatches;
    if (!was && now) --mismatches;
  };
  auto move_block = [&](std::size_t b, std::uint32_t from_bin, std::uint32_t to_bin) {
    for (const auto& [a, v] : sys.row_support(b)) {
      if (from_bin < l) touch(flat_index(a, from_bin, l), -v);
      if (to_bin < l) touch(flat_index(a, to_bin, l), +v);
    }
  };

  for (std::size_t idx = 0; idx < dim; ++idx)
    if ((*target)[idx] != 0) ++mismatches;
  for (std::size_t b = 0; b < nb; ++b) move_block(b, l, 1);  // all blocks into bin 1

  Int hits = 0;
  for (;;) {
    if (mismatches == 0) ++hits;
    std::size_t b = 0;
    while (b < nb && digit[b] == l - 1) {
      move_block(b, l, 1);  // wrap: bin l -> bin 1
      digit[b] = 0;
      ++b;
    }
    if (b == nb) break;
    move_block(b, digit[b] + 1, digit[b] + 2);
    ++digit[b];
  }
  res.hits = hits;
  res.probability = Rat(hits, res.assignments);
  return res;
}

}  // namespace largeset
