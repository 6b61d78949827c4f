#pragma once

#include <cstdint>
#include <vector>

#include "largeset/bigint.hpp"
#include "largeset/incidence.hpp"
#include "largeset/intmat.hpp"

namespace largeset {

// tau : B -> {1..l}, i.i.d. uniform per block when sampled.
struct Assignment {
  std::vector<std::uint32_t> bins;  // values in [1, l]
  std::uint32_t l = 1;
};

Assignment sample_assignment(std::uint64_t seed, std::size_t num_blocks, std::uint32_t l);

// Coordinates of Z^{(l-1)|A|} are pairs (a, j) with a over tests and j over
// bins 1..l-1, flattened a-major: index = a*(l-1) + (j-1).  This matches the
// Kronecker order Sigma = R (x) Mfac.
std::size_t flat_index(std::size_t a, std::uint32_t j, std::uint32_t l);

// X = sum_b Phi(b, tau(b)); slot j collects phi(b) over blocks with
// tau(b) = j, and bin l contributes nothing.
std::vector<Int> statistic_x(const Assignment& tau, const IncidenceSystem& sys);

// (l-1) copies of (1/l) * column sums, in the flat layout above.
RatVec mean_x(const IncidenceSystem& sys, std::uint32_t l);

struct MomentData {
  RatVec mean;       // E[X], flat layout
  IntMat r;          // R(a,a') = sum_b phi(b)_a phi(b)_{a'}
  RatMat m_factor;   // (l-1)x(l-1): diag (l-1)/l^2, off-diag -1/l^2
  Int det_r;         // exact (Bareiss)
  std::uint32_t l = 1;
  std::size_t dim_a = 0, num_blocks = 0;

  std::size_t dimension() const { return dim_a * (l - 1); }
  RatMat sigma() const;          // R (x) Mfac, materialized
  Rat det_sigma() const;         // det(R)^(l-1) / l^(l*|A|), exact
};

MomentData covariance(const IncidenceSystem& sys, std::uint32_t l);

}  // namespace largeset
