#include "doctest.h"
#include "largeset/process.hpp"
#include "largeset/rng.hpp"

#include <cmath>
#include <vector>

using namespace largeset;

TEST_CASE("flat layout is a-major") {
  const std::uint32_t l = 3;
  CHECK(flat_index(0, 1, l) == 0);
  CHECK(flat_index(0, 2, l) == 1);
  CHECK(flat_index(1, 1, l) == 2);
  CHECK(flat_index(2, 2, l) == 5);
}

TEST_CASE("statistic accumulates phi over slots; bin l drops out") {
  const IncidenceSystem sys = IncidenceSystem::design(4, 2, 1);
  Assignment tau;
  tau.l = 2;
  tau.bins = {1, 2, 1, 2, 1, 2};  // blocks {1,2},{2,3},{2,4} land in slot 1
  const std::vector<Int> x = statistic_x(tau, sys);
  REQUIRE(x.size() == 4);  // |A| * (l-1)
  CHECK(x[0] == 1);
  CHECK(x[1] == 3);
  CHECK(x[2] == 1);
  CHECK(x[3] == 1);

  // all blocks in the dropped bin -> zero vector
  tau.bins = {2, 2, 2, 2, 2, 2};
  for (const Int& v : statistic_x(tau, sys)) CHECK(v == 0);
}

TEST_CASE("mean is (1/l) of the column sums, repeated per slot") {
  const IncidenceSystem sys = IncidenceSystem::design(4, 2, 1);
  const RatVec mu = mean_x(sys, 3);
  REQUIRE(mu.size() == 8);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::uint32_t j = 1; j <= 2; ++j) CHECK(mu[flat_index(a, j, 3)] == Rat(3, 3));
}

TEST_CASE("covariance pieces for (4,2,1): R = 2I + J, det R = 48") {
  const MomentData md = covariance(IncidenceSystem::design(4, 2, 1), 3);
  REQUIRE(md.dim_a == 4);
  REQUIRE(md.num_blocks == 6);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) CHECK(md.r.at(a, b) == (a == b ? 3 : 1));
  CHECK(md.det_r == 48);
  // Mfac for l=3: diag 2/9, off-diagonal -1/9
  CHECK(md.m_factor.at(0, 0) == Rat(2, 9));
  CHECK(md.m_factor.at(1, 1) == Rat(2, 9));
  CHECK(md.m_factor.at(0, 1) == Rat(-1, 9));
  CHECK(md.dimension() == 8);
}

TEST_CASE("sigma materialization matches the factored form and its exact determinant") {
  for (const std::uint32_t l : {2u, 3u}) {
    const MomentData md = covariance(IncidenceSystem::design(4, 2, 1), l);
    const RatMat sigma = md.sigma();
    REQUIRE(sigma.rows() == md.dimension());
    for (std::size_t a = 0; a < md.dim_a; ++a)
      for (std::size_t a2 = 0; a2 < md.dim_a; ++a2)
        for (std::uint32_t j = 1; j < l; ++j)
          for (std::uint32_t j2 = 1; j2 < l; ++j2)
            CHECK(sigma.at(flat_index(a, j, l), flat_index(a2, j2, l)) ==
                  Rat(md.r.at(a, a2)) * md.m_factor.at(j - 1, j2 - 1));
    CHECK(det_fraction(sigma) == md.det_sigma());
  }
}

TEST_CASE("closed-form det sigma") {
  // det Sigma = det(R)^(l-1) / l^(l |A|)
  const MomentData md = covariance(IncidenceSystem::design(4, 2, 1), 3);
  CHECK(md.det_sigma() == Rat(Int(48) * 48, int_pow(3, 12)));
}

TEST_CASE("empirical mean and covariance match the model (5 sigma)") {
  const IncidenceSystem sys = IncidenceSystem::design(4, 2, 1);
  const std::uint32_t l = 3;
  const MomentData md = covariance(sys, l);
  const std::size_t d = md.dimension();
  const RatMat sigma = md.sigma();

  const int trials = 20000;
  std::vector<double> mu(d);
  for (std::size_t i = 0; i < d; ++i) mu[i] = to_double(md.mean[i]);

  std::vector<std::vector<double>> devs(trials, std::vector<double>(d));
  for (int s = 0; s < trials; ++s) {
    const Assignment tau = sample_assignment(stream_seed(2718, s), sys.num_blocks(), l);
    const std::vector<Int> x = statistic_x(tau, sys);
    for (std::size_t i = 0; i < d; ++i)
      devs[s][i] = static_cast<double>(to_int64(x[i])) - mu[i];
  }

  // mean: each coordinate within 5 * sqrt(Var_ii / N)
  for (std::size_t i = 0; i < d; ++i) {
    double m = 0;
    for (int s = 0; s < trials; ++s) m += devs[s][i];
    m /= trials;
    const double se = std::sqrt(to_double(sigma.at(i, i)) / trials);
    CHECK(std::abs(m) < 5 * se);
  }

  // covariance: entrywise within 5 empirical standard errors (variance of
  // the product statistic estimated from its own fourth moments)
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      double mz = 0, mz2 = 0;
      for (int s = 0; s < trials; ++s) {
        const double z = devs[s][i] * devs[s][j];
        mz += z;
        mz2 += z * z;
      }
      mz /= trials;
      mz2 /= trials;
      const double se = std::sqrt(std::max(mz2 - mz * mz, 1e-12) / trials);
      CHECK(std::abs(mz - to_double(sigma.at(i, j))) < 5 * se);
    }
}
