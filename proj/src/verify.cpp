#include "largeset/verify.hpp"

#include <algorithm>
#include <unordered_set>

#include "largeset/errors.hpp"
#include "largeset/intmat.hpp"
#include "largeset/params.hpp"

namespace largeset {

const char* counterexample_kind_name(CounterexampleKind k) {
  switch (k) {
    case CounterexampleKind::MalformedBlock: return "malformed-block";
    case CounterexampleKind::DuplicateBlock: return "duplicate-block";
    case CounterexampleKind::CoverageMismatch: return "coverage-mismatch";
    case CounterexampleKind::PartCountMismatch: return "part-count-mismatch";
    case CounterexampleKind::NonDisjointParts: return "non-disjoint-parts";
    case CounterexampleKind::MissingBlock: return "missing-block";
    case CounterexampleKind::UniformityMismatch: return "uniformity-mismatch";
  }
  return "unknown";
}

namespace {

VerificationReport fail_with(Counterexample ce) {
  VerificationReport r;
  r.pass = false;
  r.counterexample = std::move(ce);
  return r;
}

// nullopt when well-formed, else a MalformedBlock counterexample.
std::optional<Counterexample> block_shape_error(const KSet& b, int n, int k, int part = -1) {
  bool ok = static_cast<int>(b.size()) == k;
  for (std::size_t i = 0; ok && i < b.size(); ++i) {
    if (b[i] < 1 || b[i] > n) ok = false;
    if (i > 0 && b[i] <= b[i - 1]) ok = false;
  }
  if (ok) return std::nullopt;
  Counterexample ce;
  ce.kind = CounterexampleKind::MalformedBlock;
  ce.witness = b;
  ce.part = part;
  ce.detail = "block must be a sorted " + std::to_string(k) + "-subset of [1," +
              std::to_string(n) + "]";
  return ce;
}

}  // namespace

std::vector<std::int64_t> coverage_counts(const std::vector<KSet>& blocks, int n, int t) {
  if (n < 1 || t < 1 || t > n) fail(ErrorKind::InvalidParams, "require 1 <= t <= n");
  KSetIndexer tests(n, t);
  std::vector<std::int64_t> counts(tests.size(), 0);
  if (blocks.empty()) return counts;
  const int k = static_cast<int>(blocks[0].size());
  if (k < t) fail(ErrorKind::InvalidParams, "blocks smaller than t");
  for (const KSet& b : blocks) {
    if (block_shape_error(b, n, k))
      fail(ErrorKind::InvalidParams, "malformed block in coverage_counts");
    for_each_subset(b, t, [&](const KSet& a) { ++counts[tests.rank(a)]; });
  }
  return counts;
}

VerificationReport verify_design(const Design& d) {
  if (!(1 <= d.t && d.t < d.k && d.k <= d.n))
    fail(ErrorKind::InvalidParams, "require 1 <= t < k <= n");
  if (d.lambda < 1) fail(ErrorKind::InvalidParams, "require lambda >= 1");

  for (const KSet& b : d.blocks)
    if (auto ce = block_shape_error(b, d.n, d.k)) return fail_with(*ce);

  KSetIndexer blocks_idx(d.n, d.k);
  std::unordered_set<std::uint64_t> seen;
  for (const KSet& b : d.blocks) {
    if (!seen.insert(blocks_idx.rank(b)).second) {
      Counterexample ce;
      ce.kind = CounterexampleKind::DuplicateBlock;
      ce.witness = b;
      return fail_with(ce);
    }
  }

  KSetIndexer tests(d.n, d.t);
  const auto counts = coverage_counts(d.blocks, d.n, d.t);
  for (std::uint64_t a = 0; a < counts.size(); ++a) {
    if (counts[a] != d.lambda) {
      Counterexample ce;
      ce.kind = CounterexampleKind::CoverageMismatch;
      ce.witness = tests.unrank(a);
      ce.expected = d.lambda;
      ce.actual = counts[a];
      return fail_with(ce);
    }
  }
  return {};
}

VerificationReport verify_large_set(const LargeSetPartition& ls) {
  InstanceParams p{ls.n, ls.k, ls.t, ls.l};
  const Int lambda = lambda_of(p);  // throws NonIntegralLambda

  if (static_cast<long long>(ls.parts.size()) != ls.l) {
    Counterexample ce;
    ce.kind = CounterexampleKind::PartCountMismatch;
    ce.expected = ls.l;
    ce.actual = static_cast<long long>(ls.parts.size());
    return fail_with(ce);
  }

  for (std::size_t p_i = 0; p_i < ls.parts.size(); ++p_i) {
    Design d{ls.n, ls.k, ls.t, lambda, ls.parts[p_i]};
    VerificationReport r = verify_design(d);
    if (!r.pass) {
      r.counterexample->part = static_cast<int>(p_i);
      return r;
    }
  }

  KSetIndexer blocks_idx(ls.n, ls.k);
  std::vector<int> owner(blocks_idx.size(), -1);
  for (std::size_t p_i = 0; p_i < ls.parts.size(); ++p_i)
    for (const KSet& b : ls.parts[p_i]) {
      const std::uint64_t r = blocks_idx.rank(b);
      if (owner[r] != -1) {
        Counterexample ce;
        ce.kind = CounterexampleKind::NonDisjointParts;
        ce.witness = b;
        ce.part = owner[r];
        ce.other_part = static_cast<int>(p_i);
        return fail_with(ce);
      }
      owner[r] = static_cast<int>(p_i);
    }
  for (std::uint64_t r = 0; r < owner.size(); ++r)
    if (owner[r] == -1) {
      Counterexample ce;
      ce.kind = CounterexampleKind::MissingBlock;
      ce.witness = blocks_idx.unrank(r);
      return fail_with(ce);
    }
  return {};
}

VerificationReport verify_uniform_subset(const std::vector<std::size_t>& rows,
                                         const IncidenceSystem& sys) {
  if (rows.empty()) fail(ErrorKind::InvalidParams, "uniform-subset check requires nonempty T");
  std::unordered_set<std::size_t> dedupe;
  for (std::size_t r : rows) {
    if (r >= sys.num_blocks()) fail(ErrorKind::InvalidParams, "row index out of range");
    if (!dedupe.insert(r).second) fail(ErrorKind::InvalidParams, "duplicate row in T");
  }
  std::vector<Int> tsum(sys.num_tests(), 0);
  for (std::size_t r : rows)
    for (const auto& [a, v] : sys.row_support(r)) tsum[a] += v;

  const Int nb = static_cast<long long>(sys.num_blocks());
  const Int nt = static_cast<long long>(rows.size());
  const auto& total = sys.column_sums();
  for (std::size_t a = 0; a < sys.num_tests(); ++a) {
    if (nb * tsum[a] != nt * total[a]) {
      Counterexample ce;
      ce.kind = CounterexampleKind::UniformityMismatch;
      if (sys.is_design()) ce.witness = KSetIndexer(sys.n(), sys.t()).unrank(a);
      ce.expected = nt * total[a];
      ce.actual = nb * tsum[a];
      ce.detail = "coordinate " + std::to_string(a) +
                  ": |B|*sum_T phi != |T|*sum_B phi";
      return fail_with(ce);
    }
  }
  return {};
}

VerificationReport verify_uniform_subset(const std::vector<KSet>& blocks,
                                         const IncidenceSystem& sys) {
  std::vector<std::size_t> rows;
  rows.reserve(blocks.size());
  for (const KSet& b : blocks) rows.push_back(sys.block_rank(b));
  return verify_uniform_subset(rows, sys);
}

bool check_constants_in_V(const IncidenceSystem& sys) {
  // Solve  [columns of sys] * x = 1  over Q: consistent iff augmenting the
  // all-ones column does not raise the rank.
  const std::size_t m = sys.num_blocks(), n = sys.num_tests();
  RatMat a(m, n + 1);
  for (std::size_t b = 0; b < m; ++b) {
    for (const auto& [c, v] : sys.row_support(b)) a.at(b, c) = v;
    a.at(b, n) = 1;
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a.at(piv, col) == 0) ++piv;
    if (piv == m) continue;
    if (piv != row)
      for (std::size_t j = col; j <= n; ++j) std::swap(a.at(piv, j), a.at(row, j));
    for (std::size_t i = row + 1; i < m; ++i) {
      if (a.at(i, col) == 0) continue;
      const Rat f = a.at(i, col) / a.at(row, col);
      for (std::size_t j = col; j <= n; ++j) a.at(i, j) -= f * a.at(row, j);
    }
    ++row;
  }
  // inconsistent iff some remaining row is (0 ... 0 | nonzero)
  for (std::size_t i = row; i < m; ++i)
    if (a.at(i, n) != 0) return false;
  return true;
}

bool check_symmetry_action(const std::vector<int>& perm, const IncidenceSystem& sys) {
  if (!sys.is_design())
    fail(ErrorKind::NotApplicable, "symmetry action needs an inclusion system");
  const int n = sys.n();
  if (static_cast<int>(perm.size()) != n)
    fail(ErrorKind::InvalidParams, "permutation must have length n");
  std::vector<bool> hit(n + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || hit[v]) fail(ErrorKind::InvalidParams, "not a permutation of [n]");
    hit[v] = true;
  }

  KSetIndexer blocks_idx(n, sys.k());
  KSetIndexer tests_idx(n, sys.t());
  auto apply = [&](const KSet& s) {
    KSet out;
    out.reserve(s.size());
    for (int v : s) out.push_back(perm[v - 1]);
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<std::uint64_t> row_map(sys.num_blocks());
  for (std::size_t b = 0; b < sys.num_blocks(); ++b)
    row_map[b] = blocks_idx.rank(apply(blocks_idx.unrank(b)));
  std::vector<std::uint64_t> col_map(sys.num_tests());
  for (std::size_t a = 0; a < sys.num_tests(); ++a)
    col_map[a] = tests_idx.rank(apply(tests_idx.unrank(a)));

  for (std::size_t b = 0; b < sys.num_blocks(); ++b)
    for (std::size_t a = 0; a < sys.num_tests(); ++a)
      if (sys.entry(row_map[b], col_map[a]) != sys.entry(b, a)) return false;
  return true;
}

}  // namespace largeset
