#pragma once

#include "largeset/charfn.hpp"
#include "largeset/incidence.hpp"

namespace largeset {

// The four pairing norms of Theta against the rows phi(b), each taken as a
// max over the l-1 slots:
//   ii_inf  = max_j max_b |<phi(b), theta_j>|
//   ii_2    = max_j ((1/|B|) sum_b <phi(b), theta_j>^2)^(1/2)   (the R-norm)
//   iii_*   = same with <phi(b), theta_j> replaced by its fractional part
//             r in [-1/2, 1/2).
struct NormReport {
  double ii_inf = 0.0;
  double ii_2 = 0.0;
  double iii_inf = 0.0;
  double iii_2 = 0.0;
};

NormReport norms(const Theta& theta, const IncidenceSystem& sys);

// C_M * (|A| * log(2 * c2 * |A|))^(3/2)
double norm_constant_m(std::size_t dim_a, double c2, double c_m);

}  // namespace largeset
