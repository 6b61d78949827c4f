#pragma once

#include <complex>
#include <vector>

#include "largeset/incidence.hpp"
#include "largeset/process.hpp"

namespace largeset {

// Fourier variable Theta = (theta_1, ..., theta_{l-1}), each theta_j over A.
struct Theta {
  std::size_t parts = 0;  // l - 1
  std::size_t dim = 0;    // |A|
  std::vector<double> v;  // parts * dim, slot-major: v[(j-1)*dim + a]

  static Theta zero(std::size_t parts, std::size_t dim);
  double at(std::size_t j, std::size_t a) const { return v[(j - 1) * dim + a]; }
  double& at(std::size_t j, std::size_t a) { return v[(j - 1) * dim + a]; }
};

// E[e^{2 pi i <X, Theta>}] = prod_b (1/l)(1 + sum_j e^{2 pi i <phi(b), theta_j>}).
std::complex<double> char_fn_x(const Theta& theta, const IncidenceSystem& sys, std::uint32_t l);

// Characteristic function of the Gaussian surrogate:
// exp(2 pi i <E[X], Theta> - 2 pi^2 Theta^t Sigma Theta).
std::complex<double> gaussian_char(const Theta& theta, const MomentData& moments);

// log f_Y(E[X]) = -(d/2) log(2 pi) - (1/2) log det Sigma, d = (l-1)|A|.
// det Sigma is computed exactly first; throws SingularCovariance if <= 0.
double log_gaussian_density_at_mean(const MomentData& moments);

// f(x) = (1/l)(1 + sum_j e^{i x_j}) for x in R^{l-1}.
std::complex<double> f_multiplier(const std::vector<double>& x, std::uint32_t l);

// |f(x)| <= exp(-|x|_inf^2 / (8 l)), meaningful for |x|_inf <= pi.
bool check_f_bound(const std::vector<double>& x, std::uint32_t l);

// | log f(x) - (i/l sum x_j - (1/2l)(1 - 1/l) sum x_j^2
//              + (1/2l^2) sum_{j != j'} x_j x_{j'}) |, the third-order
// remainder of the expansion; meaningful for |x|_inf <= 1.
double check_f_approx(const std::vector<double>& x, std::uint32_t l);

}  // namespace largeset
