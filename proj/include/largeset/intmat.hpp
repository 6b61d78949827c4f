#pragma once

#include <cstddef>
#include <vector>

#include "largeset/bigint.hpp"

namespace largeset {

// Dense matrix over the integers (arbitrary precision).  Row operations are
// the primitives the normal-form algorithms need; all of them are exact.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMat identity(std::size_t d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool operator==(const IntMat& o) const = default;

  IntMat transposed() const;
  IntMat operator*(const IntMat& o) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);
  void addmul_row(std::size_t dst, std::size_t src, const Int& c);  // row dst += c * row src
  void addmul_col(std::size_t dst, std::size_t src, const Int& c);

  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Exact determinant via fraction-free (Bareiss) elimination.
Int det_bareiss(IntMat a);

using RatVec = std::vector<Rat>;

class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RatMat identity(std::size_t d);
  static RatMat from_int(const IntMat& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool operator==(const RatMat& o) const = default;
  RatMat operator*(const RatMat& o) const;
  RatMat transposed() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Gauss-Jordan inverse; throws NotFullRank if singular.
RatMat rat_inverse(const RatMat& m);

// Exact determinant by fraction elimination (independent of det_bareiss;
// used as a cross-check oracle).
Rat det_fraction(RatMat m);

// Kronecker product (a ox b)((i1,i2),(j1,j2)) = a(i1,j1) * b(i2,j2).
RatMat kronecker(const RatMat& a, const RatMat& b);

}  // namespace largeset
