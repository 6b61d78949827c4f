#include "largeset/norms.hpp"

#include <cmath>

#include "largeset/errors.hpp"

namespace largeset {

NormReport norms(const Theta& theta, const IncidenceSystem& sys) {
  if (theta.dim != sys.num_tests())
    fail(ErrorKind::DimensionMismatch, "Theta dimension differs from |A|");
  NormReport rep;
  const double nb = static_cast<double>(sys.num_blocks());
  for (std::size_t j = 1; j <= theta.parts; ++j) {
    double sq = 0.0, frac_sq = 0.0;
    for (std::size_t b = 0; b < sys.num_blocks(); ++b) {
      double dot = 0.0;
      for (const auto& [a, v] : sys.row_support(b)) dot += v * theta.at(j, a);
      rep.ii_inf = std::max(rep.ii_inf, std::fabs(dot));
      sq += dot * dot;
      // fractional part in [-1/2, 1/2)
      double r = dot - std::floor(dot + 0.5);
      rep.iii_inf = std::max(rep.iii_inf, std::fabs(r));
      frac_sq += r * r;
    }
    rep.ii_2 = std::max(rep.ii_2, std::sqrt(sq / nb));
    rep.iii_2 = std::max(rep.iii_2, std::sqrt(frac_sq / nb));
  }
  return rep;
}

double norm_constant_m(std::size_t dim_a, double c2, double c_m) {
  if (c_m <= 0 || c2 <= 0) fail(ErrorKind::InvalidParams, "constants must be positive");
  const double inner = static_cast<double>(dim_a) * std::log(2.0 * c2 * static_cast<double>(dim_a));
  return c_m * std::pow(inner, 1.5);
}

}  // namespace largeset
