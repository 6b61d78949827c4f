#include "largeset/process.hpp"

#include "largeset/errors.hpp"
#include "largeset/rng.hpp"

namespace largeset {

Assignment sample_assignment(std::uint64_t seed, std::size_t num_blocks, std::uint32_t l) {
  if (l < 1) fail(ErrorKind::InvalidParams, "require l >= 1");
  Assignment tau;
  tau.l = l;
  tau.bins.resize(num_blocks);
  DetRng rng(seed);
  for (std::size_t b = 0; b < num_blocks; ++b)
    tau.bins[b] = static_cast<std::uint32_t>(rng.below(l)) + 1;
  return tau;
}

std::size_t flat_index(std::size_t a, std::uint32_t j, std::uint32_t l) {
  return a * (l - 1) + (j - 1);
}

std::vector<Int> statistic_x(const Assignment& tau, const IncidenceSystem& sys) {
  if (tau.bins.size() != sys.num_blocks())
    fail(ErrorKind::DimensionMismatch, "assignment length differs from |B|");
  const std::uint32_t l = tau.l;
  std::vector<Int> x(sys.num_tests() * (l - 1), 0);
  for (std::size_t b = 0; b < tau.bins.size(); ++b) {
    const std::uint32_t j = tau.bins[b];
    if (j < 1 || j > l) fail(ErrorKind::InvalidParams, "bin value outside [1, l]");
    if (j == l) continue;
    for (const auto& [a, v] : sys.row_support(b)) x[flat_index(a, j, l)] += v;
  }
  return x;
}

RatVec mean_x(const IncidenceSystem& sys, std::uint32_t l) {
  if (l < 1) fail(ErrorKind::InvalidParams, "require l >= 1");
  RatVec mean(sys.num_tests() * (l - 1));
  const auto& sums = sys.column_sums();
  for (std::size_t a = 0; a < sys.num_tests(); ++a)
    for (std::uint32_t j = 1; j < l; ++j) mean[flat_index(a, j, l)] = Rat(sums[a], Int(l));
  return mean;
}

RatMat MomentData::sigma() const {
  return kronecker(RatMat::from_int(r), m_factor);
}

Rat MomentData::det_sigma() const {
  // det(R (x) M) = det(R)^(l-1) * det(M)^|A| and det(M) = l^-l.
  Rat d = 1;
  for (std::uint32_t i = 1; i < l; ++i) d *= Rat(det_r);
  return d / Rat(int_pow(Int(l), static_cast<unsigned long>(l) * dim_a));
}

MomentData covariance(const IncidenceSystem& sys, std::uint32_t l) {
  if (l < 1) fail(ErrorKind::InvalidParams, "require l >= 1");
  MomentData md;
  md.l = l;
  md.dim_a = sys.num_tests();
  md.num_blocks = sys.num_blocks();
  md.mean = mean_x(sys, l);

  md.r = IntMat(md.dim_a, md.dim_a);
  for (std::size_t b = 0; b < sys.num_blocks(); ++b) {
    const auto& sup = sys.row_support(b);
    for (const auto& [a1, v1] : sup)
      for (const auto& [a2, v2] : sup) md.r.at(a1, a2) += Int(v1) * v2;
  }
  md.det_r = det_bareiss(md.r);

  md.m_factor = RatMat(l - 1, l - 1);
  const Rat diag(Int(l) - 1, Int(l) * l), off(Int(-1), Int(l) * l);
  for (std::uint32_t i = 0; i + 1 < l; ++i)
    for (std::uint32_t j = 0; j + 1 < l; ++j) md.m_factor.at(i, j) = (i == j) ? diag : off;
  return md;
}

}  // namespace largeset
