#include "largeset/charfn.hpp"

#include <cmath>

#include "largeset/errors.hpp"

namespace largeset {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Theta Theta::zero(std::size_t parts, std::size_t dim) {
  Theta t;
  t.parts = parts;
  t.dim = dim;
  t.v.assign(parts * dim, 0.0);
  return t;
}

std::complex<double> char_fn_x(const Theta& theta, const IncidenceSystem& sys, std::uint32_t l) {
  if (l < 1) fail(ErrorKind::InvalidParams, "require l >= 1");
  if (theta.parts != l - 1 || theta.dim != sys.num_tests())
    fail(ErrorKind::DimensionMismatch, "Theta shape does not match (l-1, |A|)");
  std::complex<double> prod = 1.0;
  std::vector<double> x(l - 1);
  for (std::size_t b = 0; b < sys.num_blocks(); ++b) {
    const auto& sup = sys.row_support(b);
    for (std::uint32_t j = 1; j < l; ++j) {
      double dot = 0.0;
      for (const auto& [a, v] : sup) dot += v * theta.at(j, a);
      x[j - 1] = kTwoPi * dot;
    }
    prod *= f_multiplier(x, l);
  }
  return prod;
}

std::complex<double> gaussian_char(const Theta& theta, const MomentData& moments) {
  const std::uint32_t l = moments.l;
  if (theta.parts != l - 1 || theta.dim != moments.dim_a)
    fail(ErrorKind::DimensionMismatch, "Theta shape does not match moments");
  // <E[X], Theta> with E[X] block-constant over j
  double phase = 0.0;
  for (std::uint32_t j = 1; j < l; ++j)
    for (std::size_t a = 0; a < moments.dim_a; ++a)
      phase += to_double(moments.mean[flat_index(a, j, l)]) * theta.at(j, a);
  // Theta^t (R (x) M) Theta = sum_{j,j'} M(j,j') * theta_j^t R theta_j'
  double quad = 0.0;
  for (std::uint32_t j = 1; j < l; ++j)
    for (std::uint32_t jp = 1; jp < l; ++jp) {
      const double mjj = to_double(moments.m_factor.at(j - 1, jp - 1));
      if (mjj == 0.0) continue;
      double form = 0.0;
      for (std::size_t a = 0; a < moments.dim_a; ++a) {
        double row = 0.0;
        for (std::size_t ap = 0; ap < moments.dim_a; ++ap)
          row += to_double(moments.r.at(a, ap)) * theta.at(jp, ap);
        form += theta.at(j, a) * row;
      }
      quad += mjj * form;
    }
  const double re = -2.0 * M_PI * M_PI * quad;
  const double im = kTwoPi * phase;
  return std::exp(re) * std::complex<double>(std::cos(im), std::sin(im));
}

double log_gaussian_density_at_mean(const MomentData& moments) {
  const Rat det = moments.det_sigma();
  if (det <= 0) fail(ErrorKind::SingularCovariance, "covariance determinant is not positive");
  const double d = static_cast<double>(moments.dimension());
  return -(d / 2.0) * std::log(kTwoPi) - 0.5 * log_rat(det);
}

std::complex<double> f_multiplier(const std::vector<double>& x, std::uint32_t l) {
  if (l < 1) fail(ErrorKind::InvalidParams, "require l >= 1");
  if (x.size() != static_cast<std::size_t>(l) - 1)
    fail(ErrorKind::DimensionMismatch, "x must have length l-1");
  std::complex<double> s = 1.0;
  for (double xj : x) s += std::complex<double>(std::cos(xj), std::sin(xj));
  return s / static_cast<double>(l);
}

bool check_f_bound(const std::vector<double>& x, std::uint32_t l) {
  double maxabs = 0.0;
  for (double xj : x) maxabs = std::max(maxabs, std::fabs(xj));
  const double lhs = std::abs(f_multiplier(x, l));
  const double rhs = std::exp(-maxabs * maxabs / (8.0 * l));
  return lhs <= rhs;
}

double check_f_approx(const std::vector<double>& x, std::uint32_t l) {
  const std::complex<double> f = f_multiplier(x, l);
  double s1 = 0.0, s2 = 0.0;
  for (double xj : x) {
    s1 += xj;
    s2 += xj * xj;
  }
  const double cross = s1 * s1 - s2;  // sum_{j != j'} x_j x_{j'}
  const double linv = 1.0 / l;
  const std::complex<double> model(-0.5 * linv * (1.0 - linv) * s2 + 0.5 * linv * linv * cross,
                                   linv * s1);
  return std::abs(std::log(f) - model);
}

}  // namespace largeset
