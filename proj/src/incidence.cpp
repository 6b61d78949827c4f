#include "largeset/incidence.hpp"

#include <cstdlib>

#include "largeset/errors.hpp"

namespace largeset {

IncidenceSystem IncidenceSystem::design(int n, int k, int t, const SizeCaps& caps) {
  if (!(1 <= t && t < k && k <= n))
    fail(ErrorKind::InvalidParams, "require 1 <= t < k <= n");
  KSetIndexer blocks(n, k);
  KSetIndexer tests(n, t);
  if (blocks.size() > caps.max_rows)
    fail(ErrorKind::SizeCapExceeded,
         "C(n,k) = " + std::to_string(blocks.size()) + " exceeds row cap " +
             std::to_string(caps.max_rows));
  const std::uint64_t entries = blocks.size() * tests.size();
  if (tests.size() != 0 && entries / tests.size() != blocks.size())
    fail(ErrorKind::SizeCapExceeded, "entry count overflows");
  if (entries > caps.max_entries)
    fail(ErrorKind::SizeCapExceeded,
         "C(n,k)*C(n,t) = " + std::to_string(entries) + " exceeds entry cap " +
             std::to_string(caps.max_entries));

  IncidenceSystem sys;
  sys.rows_ = blocks.size();
  sys.cols_ = tests.size();
  sys.dense_.assign(sys.rows_ * sys.cols_, 0);
  sys.support_.resize(sys.rows_);
  for (std::uint64_t b = 0; b < blocks.size(); ++b) {
    const KSet bs = blocks.unrank(b);
    for_each_subset(bs, t, [&](const KSet& a) {
      const std::uint64_t col = tests.rank(a);
      sys.dense_[b * sys.cols_ + col] = 1;
    });
  }
  sys.params_ = DesignMeta{n, k, t};
  sys.finalize();
  return sys;
}

IncidenceSystem IncidenceSystem::from_matrix(std::vector<std::vector<std::int64_t>> m,
                                             const SizeCaps& caps) {
  IncidenceSystem sys;
  sys.rows_ = m.size();
  sys.cols_ = m.empty() ? 0 : m[0].size();
  if (sys.rows_ == 0 || sys.cols_ == 0)
    fail(ErrorKind::InvalidParams, "matrix must have at least one row and column");
  if (sys.rows_ > caps.max_rows)
    fail(ErrorKind::SizeCapExceeded, "row count exceeds cap");
  if (sys.rows_ * sys.cols_ > caps.max_entries)
    fail(ErrorKind::SizeCapExceeded, "entry count exceeds cap");
  sys.dense_.reserve(sys.rows_ * sys.cols_);
  for (const auto& row : m) {
    if (row.size() != sys.cols_)
      fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
    sys.dense_.insert(sys.dense_.end(), row.begin(), row.end());
  }
  sys.support_.resize(sys.rows_);
  sys.finalize();
  return sys;
}

void IncidenceSystem::finalize() {
  col_sums_.assign(cols_, 0);
  for (std::size_t b = 0; b < rows_; ++b) {
    auto& sup = support_[b];
    for (std::size_t a = 0; a < cols_; ++a) {
      const std::int64_t v = dense_[b * cols_ + a];
      if (v != 0) {
        sup.emplace_back(static_cast<std::uint32_t>(a), v);
        col_sums_[a] += v;
        if (std::abs(v) > max_abs_) max_abs_ = std::abs(v);
      }
    }
  }
}

Int IncidenceSystem::row_sum(std::size_t b) const {
  Int s = 0;
  for (const auto& [a, v] : support_[b]) {
    (void)a;
    s += v;
  }
  return s;
}

int IncidenceSystem::n() const {
  if (!params_) fail(ErrorKind::NotApplicable, "not an inclusion system");
  return params_->n;
}
int IncidenceSystem::k() const {
  if (!params_) fail(ErrorKind::NotApplicable, "not an inclusion system");
  return params_->k;
}
int IncidenceSystem::t() const {
  if (!params_) fail(ErrorKind::NotApplicable, "not an inclusion system");
  return params_->t;
}

KSet IncidenceSystem::block(std::size_t b) const {
  if (!params_) fail(ErrorKind::NotApplicable, "not an inclusion system");
  return KSetIndexer(params_->n, params_->k).unrank(b);
}

std::uint64_t IncidenceSystem::block_rank(const KSet& s) const {
  if (!params_) fail(ErrorKind::NotApplicable, "not an inclusion system");
  return KSetIndexer(params_->n, params_->k).rank(s);
}

}  // namespace largeset
