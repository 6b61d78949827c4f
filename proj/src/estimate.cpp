#include "largeset/estimate.hpp"

#include <cmath>
#include <limits>

#include "largeset/charfn.hpp"
#include "largeset/errors.hpp"
#include "largeset/norms.hpp"
#include "largeset/params.hpp"

namespace largeset {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = 0.6931471805599453094;
constexpr double kLn2Pi = 1.8378770664093454836;

struct BoundInputs {
  double log_det_product;  // log det L(Phi)
  double log_f_y;          // log f_Y(E[X])
  double num_blocks;       // |B|
  double dim_a;            // |A|
  double l;
  double m_const;
  double c3;
};

IBounds i_bounds_core(double eps, const BoundInputs& in, const EstimateConstants& c) {
  IBounds ib;
  const double i1_eps_cap = std::pow(c.i1 * in.m_const * in.num_blocks, -1.0 / 3.0);
  if (!(eps <= i1_eps_cap)) {
    ib.i1_ok = false;
    ib.i1_reason = "requires eps <= (C*M*|B|)^(-1/3)";
  }
  if (in.c3 < 2.0) {
    ib.i2_ok = false;
    ib.i2_reason = "requires c3 >= 2";
  } else if (!(eps <= 1.0 / (in.c3 * in.m_const))) {
    ib.i2_ok = false;
    ib.i2_reason = "requires eps <= 1/(c3*M)";
  }

  const double decay = in.num_blocks * eps * eps / (in.l * in.l);
  ib.log_i1 = std::log(c.i1) + 3.0 * std::log(in.l) + std::log(in.m_const) +
              1.5 * std::log(in.dim_a) - 0.5 * std::log(in.num_blocks) + in.log_f_y;
  ib.log_i2 = -in.log_det_product - decay;
  ib.log_i3 = (in.l > 1.0)
                  ? in.log_f_y + std::log(in.l - 1.0) + 0.5 * in.dim_a * kLn2 -
                        M_PI * M_PI * decay
                  : -kInf;
  return ib;
}

BoundInputs gather_inputs(const IncidenceSystem& sys, std::uint32_t l, const Int& c3,
                          const MomentData& moments, const EstimateConstants& c) {
  const LatticeBasis lat = lattice_of(sys);
  const Int det_prod = product_lattice_determinant(lat, l);
  BoundInputs in;
  in.log_det_product = log_int(det_prod);
  in.log_f_y = log_gaussian_density_at_mean(moments);
  in.num_blocks = static_cast<double>(sys.num_blocks());
  in.dim_a = static_cast<double>(sys.num_tests());
  in.l = static_cast<double>(l);
  in.m_const = norm_constant_m(sys.num_tests(), c.c2, c.norm);
  in.c3 = to_double(c3);
  return in;
}

}  // namespace

IBounds evaluate_i_bounds(double eps, const IncidenceSystem& sys, std::uint32_t l,
                          const Int& c3, const MomentData& moments,
                          const EstimateConstants& constants) {
  if (eps <= 0) fail(ErrorKind::InvalidParams, "require eps > 0");
  return i_bounds_core(eps, gather_inputs(sys, l, c3, moments, constants), constants);
}

IBounds bounds_I(double eps, const IncidenceSystem& sys, std::uint32_t l, const Int& c3,
                 const MomentData& moments, const EstimateConstants& constants) {
  IBounds ib = evaluate_i_bounds(eps, sys, l, c3, moments, constants);
  if (!ib.i1_ok)
    fail(ErrorKind::PreconditionViolated, "I1 bound: " + ib.i1_reason);
  if (!ib.i2_ok)
    fail(ErrorKind::PreconditionViolated, "I2 bound: " + ib.i2_reason);
  return ib;
}

ThresholdCheck partition_size_threshold(const Int& num_blocks, const Int& dim_v, long long l,
                                        const Rat& c2, const Int& c3, double c_main) {
  if (num_blocks < 1 || dim_v < 1 || l < 1 || c2 <= 0 || c3 < 1 || c_main <= 0)
    fail(ErrorKind::InvalidParams, "threshold inputs must be positive");
  ThresholdCheck tc;
  tc.log_lhs = log_int(num_blocks);
  const Rat inner = Rat(dim_v) * c2 * Rat(c3) * l;
  const double log_inner = log_rat(inner);
  if (log_inner <= 0) {
    // log^3(...) <= 0 makes the right side nonpositive; any |B| >= 1 passes.
    tc.log_rhs = -kInf;
    tc.holds = true;
    return tc;
  }
  tc.log_rhs = std::log(c_main) + 6.0 * log_int(dim_v) + 6.0 * std::log(double(l)) +
               3.0 * log_int(c3) + 3.0 * std::log(log_inner);
  tc.holds = tc.log_lhs >= tc.log_rhs;
  return tc;
}

ThresholdCheck single_subset_size_threshold(const Int& subset_size, const Int& num_blocks,
                                            const Int& dim_v, const Rat& c2, const Int& c3,
                                            double c_single) {
  if (num_blocks < 1 || dim_v < 1 || c2 <= 0 || c3 < 1 || c_single <= 0)
    fail(ErrorKind::InvalidParams, "threshold inputs must be positive");
  ThresholdCheck tc;
  const Int lhs = subset_size < num_blocks - subset_size ? subset_size
                                                         : num_blocks - subset_size;
  if (lhs <= 0) {
    tc.log_lhs = -kInf;
    tc.holds = false;
  } else {
    tc.log_lhs = log_int(lhs);
  }
  const double log_inner = std::log(2.0) + log_int(c3) + log_int(dim_v);
  tc.log_rhs = std::log(c_single) + log_rat(c2) + 2.0 * log_int(c3) +
               6.0 * log_int(dim_v) + 6.0 * std::log(log_inner);
  if (lhs > 0) tc.holds = tc.log_lhs >= tc.log_rhs;
  return tc;
}

EstimateReport estimate_success_probability(const IncidenceSystem& sys, std::uint32_t l,
                                            std::optional<Int> c3_in,
                                            const EstimateConstants& constants) {
  if (l < 1) fail(ErrorKind::InvalidParams, "require l >= 1");
  if (constants.thm_main <= 0 || constants.thm_single <= 0 || constants.norm <= 0 ||
      constants.i1 <= 0 || constants.eps_choice <= 0 || constants.c2 <= 0)
    fail(ErrorKind::InvalidParams, "constants must be positive");

  EstimateReport rep;
  rep.num_blocks = sys.num_blocks();
  rep.dim_v = sys.num_tests();
  rep.l = l;
  rep.constants = constants;
  rep.c2 = Rat(constants.c2);  // exact dyadic value of the configured double

  if (c3_in) {
    if (*c3_in < 1) fail(ErrorKind::InvalidParams, "require c3 >= 1");
    rep.c3 = *c3_in;
    rep.c3_source = "user";
  } else if (sys.is_design()) {
    rep.c3 = c3_design_bound(sys.n(), sys.t());
    rep.c3_source = "design-formula";
  } else {
    fail(ErrorKind::InvalidParams, "c3 must be supplied for general systems");
  }

  const LatticeBasis lat = lattice_of(sys);
  if (!lat.full_rank())
    fail(ErrorKind::NotFullRank, "incidence lattice is not full rank");
  rep.det_l_phi = lattice_determinant(lat);
  rep.det_l_phi_product = product_lattice_determinant(lat, l);
  rep.c1 = divisibility_parameter(sys);

  if (!check_main_divisibility(sys, l))
    fail(ErrorKind::NotApplicable,
         "main divisibility fails: (1/l) sum phi(b) is not a lattice vector");

  const MomentData moments = covariance(sys, l);
  rep.log_gaussian_density_at_mean = log_gaussian_density_at_mean(moments);
  const double log_det_prod = log_int(rep.det_l_phi_product);
  rep.log_point_estimate = log_det_prod + rep.log_gaussian_density_at_mean;
  rep.point_estimate = std::exp(rep.log_point_estimate);

  rep.m_const = norm_constant_m(rep.dim_v, constants.c2, constants.norm);
  const double nb = static_cast<double>(rep.num_blocks);
  const double c3d = to_double(rep.c3);
  if (constants.eps_override) {
    if (*constants.eps_override <= 0) fail(ErrorKind::InvalidParams, "require eps > 0");
    rep.eps = *constants.eps_override;
    rep.eps_overridden = true;
  } else {
    const double eps0 = std::pow(constants.eps_choice * rep.m_const * nb, -1.0 / 3.0);
    const double cap = 1.0 / (c3d * rep.m_const);
    rep.eps = eps0;
    if (eps0 > cap) {
      rep.eps = cap;
      rep.eps_clamped = true;
    }
  }

  BoundInputs in;
  in.log_det_product = log_det_prod;
  in.log_f_y = rep.log_gaussian_density_at_mean;
  in.num_blocks = nb;
  in.dim_a = static_cast<double>(rep.dim_v);
  in.l = static_cast<double>(l);
  in.m_const = rep.m_const;
  in.c3 = c3d;
  rep.ibounds = i_bounds_core(rep.eps, in, constants);

  rep.alpha1 = constants.i1 * in.l * in.l * in.l * rep.m_const *
               std::pow(in.dim_a, 1.5) / std::sqrt(nb);
  const double decay = nb * rep.eps * rep.eps / (in.l * in.l);
  rep.log_alpha2 = -decay;
  rep.log_alpha3 = (l > 1) ? std::log(in.l - 1.0) + 0.5 * in.dim_a * kLn2 -
                                 M_PI * M_PI * decay
                           : -kInf;

  const double log_quarter = -2.0 * kLn2;
  rep.alpha_conditions_met = rep.alpha1 <= 0.25 && rep.log_alpha3 <= log_quarter &&
                             rep.log_alpha2 <= log_quarter + rep.log_gaussian_density_at_mean;
  rep.lower_bound_valid = rep.alpha_conditions_met && rep.ibounds.i1_ok && rep.ibounds.i2_ok;
  rep.log_lower_bound = rep.log_point_estimate + log_quarter;

  const Int b_int = static_cast<long long>(rep.num_blocks);
  const Int dim_int = static_cast<long long>(rep.dim_v);
  const Rat c2_rat = rep.c2;
  if (b_int % l == 0) {
    const Int part = b_int / l;
    rep.c1_divides_part_size = (part % rep.c1 == 0);
    rep.single_threshold = single_subset_size_threshold(part, b_int, dim_int, c2_rat,
                                                        rep.c3, constants.thm_single);
  } else {
    rep.c1_divides_part_size = false;
    rep.single_threshold = single_subset_size_threshold(floor_div(b_int, l), b_int, dim_int,
                                                        c2_rat, rep.c3, constants.thm_single);
  }
  rep.main_threshold =
      partition_size_threshold(b_int, dim_int, l, c2_rat, rep.c3, constants.thm_main);
  return rep;
}

}  // namespace largeset
