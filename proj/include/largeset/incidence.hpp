#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "largeset/bigint.hpp"
#include "largeset/kset.hpp"

namespace largeset {

struct SizeCaps {
  std::uint64_t max_rows = 10'000'000;
  std::uint64_t max_entries = 100'000'000;
};

// Row-indexed family of integer test vectors: row b is the vector phi(b)
// evaluated against every coordinate ("test") a.  The canonical instance is
// the subset-inclusion system, where rows are k-subsets of [n] in colex
// order, columns are t-subsets, and phi(b)_a = 1 iff a is contained in b.
// Immutable after construction.
class IncidenceSystem {
 public:
  // Inclusion system for parameters (n, k, t).
  static IncidenceSystem design(int n, int k, int t, const SizeCaps& caps = {});

  // Arbitrary integer system; rows may be any vectors.
  static IncidenceSystem from_matrix(std::vector<std::vector<std::int64_t>> m,
                                     const SizeCaps& caps = {});

  std::size_t num_blocks() const { return rows_; }   // |B|
  std::size_t num_tests() const { return cols_; }    // |A|
  std::int64_t entry(std::size_t b, std::size_t a) const { return dense_[b * cols_ + a]; }

  // Nonzero entries of row b as (column, value) pairs.
  const std::vector<std::pair<std::uint32_t, std::int64_t>>& row_support(std::size_t b) const {
    return support_[b];
  }

  const std::vector<Int>& column_sums() const { return col_sums_; }
  Int row_sum(std::size_t b) const;

  // Largest |entry| over the whole system.
  std::int64_t max_abs_entry() const { return max_abs_; }

  bool is_design() const { return params_.has_value(); }
  int n() const;
  int k() const;
  int t() const;

  // Blocks as k-sets (design systems only).
  KSet block(std::size_t b) const;
  std::uint64_t block_rank(const KSet& s) const;

 private:
  IncidenceSystem() = default;
  void finalize();

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> dense_;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> support_;
  std::vector<Int> col_sums_;
  std::int64_t max_abs_ = 0;

  struct DesignMeta {
    int n, k, t;
  };
  std::optional<DesignMeta> params_;
};

}  // namespace largeset
