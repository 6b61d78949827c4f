#pragma once

#include <optional>
#include <string>

#include "largeset/incidence.hpp"
#include "largeset/lattice.hpp"
#include "largeset/process.hpp"

namespace largeset {

// Every unspecified absolute constant in the analytic pipeline, surfaced as
// configuration and echoed in reports.  Defaults are all 1.
struct EstimateConstants {
  double thm_main = 1.0;    // C in the partition-size threshold
  double thm_single = 1.0;  // C in the single-subset threshold
  double norm = 1.0;        // C in the norm constant M
  double i1 = 1.0;          // C in the I1 bound / its eps precondition
  double eps_choice = 1.0;  // C1 in eps = (C1 * M * |B|)^(-1/3)
  double c2 = 1.0;          // l_inf bound on an integer basis of V
  std::optional<double> eps_override;
};

// The three tail bounds, natural logs.  I1 and I3 are stated relative to
// f_Y(E[X]) in the source lemmas; the log values here include that factor.
struct IBounds {
  double log_i1 = 0.0;
  double log_i2 = 0.0;
  double log_i3 = 0.0;
  bool i1_ok = true;  // eps <= (C_i1 * M * |B|)^(-1/3)
  bool i2_ok = true;  // c3 >= 2 and eps <= 1/(c3 * M)
  std::string i1_reason, i2_reason;
};

// Non-throwing evaluator: precondition failures are reported in the flags.
IBounds evaluate_i_bounds(double eps, const IncidenceSystem& sys, std::uint32_t l,
                          const Int& c3, const MomentData& moments,
                          const EstimateConstants& constants);

// Contract form: throws PreconditionViolated naming the failing lemma
// hypothesis instead of returning flags.
IBounds bounds_I(double eps, const IncidenceSystem& sys, std::uint32_t l, const Int& c3,
                 const MomentData& moments, const EstimateConstants& constants);

struct ThresholdCheck {
  bool holds = false;
  double log_lhs = 0.0;  // natural logs; -inf encodes 0
  double log_rhs = 0.0;
};

// |B| >= C * dim^6 * l^6 * c3^3 * log^3(dim * c2 * c3 * l)
ThresholdCheck partition_size_threshold(const Int& num_blocks, const Int& dim_v, long long l,
                                        const Rat& c2, const Int& c3, double c_main);

// min(N, |B|-N) >= C * c2 * c3^2 * dim^6 * log^6(2 * c3 * dim)
ThresholdCheck single_subset_size_threshold(const Int& subset_size, const Int& num_blocks,
                                            const Int& dim_v, const Rat& c2, const Int& c3,
                                            double c_single);

struct EstimateReport {
  std::size_t num_blocks = 0, dim_v = 0;
  std::uint32_t l = 1;
  Int det_l_phi = 1;          // det L(phi)
  Int det_l_phi_product = 1;  // det L(Phi) = det L(phi)^(l-1)
  Int c1 = 1;
  Rat c2 = 1;
  Int c3 = 1;
  std::string c3_source;  // "design-formula" or "user"
  EstimateConstants constants;
  double m_const = 0.0;
  double eps = 0.0;
  bool eps_clamped = false;
  bool eps_overridden = false;

  double log_gaussian_density_at_mean = 0.0;
  double log_point_estimate = 0.0;  // log(det L(Phi) * f_Y(E[X]))
  double point_estimate = 0.0;      // may underflow to 0; log form is authoritative

  IBounds ibounds;
  // alpha_1 = I1 / f_Y (dimensionless); alpha_2 = I2; alpha_3 = I3
  double alpha1 = 0.0;
  double log_alpha2 = 0.0;
  double log_alpha3 = 0.0;
  bool alpha_conditions_met = false;
  bool lower_bound_valid = false;
  double log_lower_bound = 0.0;  // log(det * f_Y / 4) when valid

  bool c1_divides_part_size = false;  // c1 | |B|/l when |B|/l integral
  ThresholdCheck main_threshold;
  ThresholdCheck single_threshold;  // at N = |B|/l
};

// Full pipeline; requires check_main_divisibility(sys, l) (else NotApplicable).
// c3 defaults to the design-formula bound for inclusion systems and must be
// supplied for general systems.
EstimateReport estimate_success_probability(const IncidenceSystem& sys, std::uint32_t l,
                                            std::optional<Int> c3,
                                            const EstimateConstants& constants);

}  // namespace largeset
