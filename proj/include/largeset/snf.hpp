#pragma once

#include "largeset/intmat.hpp"

namespace largeset {

// S = U * A * W with U, W unimodular and S diagonal, d1 | d2 | ... >= 0.
struct SmithDecomposition {
  IntMat u, s, w;

  // Exact reconstruction + chain + unimodularity check (used by the
  // in-build assertions and the tests).
  bool verify_against(const IntMat& a) const;
};

// Pivot choice: smallest nonzero magnitude, ties broken by lowest row then
// lowest column, which keeps coefficient growth tame and the output
// deterministic.
SmithDecomposition smith_normal_form(const IntMat& a);

// Row-style Hermite form via unimodular row operations: echelon with
// positive pivots and entries above each pivot reduced into [0, pivot).
// Zero rows sink to the bottom; `rank` counts the nonzero ones.
struct HermiteResult {
  IntMat h;
  std::size_t rank = 0;
};
HermiteResult hermite_row_reduce(IntMat g);

// Same reduction, also returning the unimodular transform T with h = T * g.
struct HermiteTransformResult {
  IntMat h;
  IntMat t;
  std::size_t rank = 0;
};
HermiteTransformResult hermite_row_reduce_with_transform(const IntMat& g);

}  // namespace largeset
