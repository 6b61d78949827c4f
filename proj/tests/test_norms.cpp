#include "doctest.h"
#include "largeset/lattice.hpp"
#include "largeset/norms.hpp"
#include "largeset/rng.hpp"

#include <cmath>

using namespace largeset;

namespace {
Theta random_theta(DetRng& rng, std::size_t parts, std::size_t dim, double scale) {
  Theta th = Theta::zero(parts, dim);
  for (double& v : th.v) v = (2.0 * rng.unit() - 1.0) * scale;
  return th;
}
}  // namespace

TEST_CASE("norms vanish at zero and order correctly") {
  const IncidenceSystem sys = IncidenceSystem::design(4, 2, 1);
  const Theta zero = Theta::zero(2, 4);
  const NormReport z = norms(zero, sys);
  CHECK(z.ii_inf == 0.0);
  CHECK(z.ii_2 == 0.0);
  CHECK(z.iii_inf == 0.0);
  CHECK(z.iii_2 == 0.0);

  DetRng rng(61);
  for (int rep = 0; rep < 300; ++rep) {
    const Theta th = random_theta(rng, 2, 4, 2.0);
    const NormReport r = norms(th, sys);
    // quadratic mean <= max
    CHECK(r.ii_2 <= r.ii_inf + 1e-12);
    CHECK(r.iii_2 <= r.iii_inf + 1e-12);
    // fractional part never exceeds the raw pairing, and caps at 1/2
    CHECK(r.iii_inf <= r.ii_inf + 1e-12);
    CHECK(r.iii_2 <= r.ii_2 + 1e-12);
    CHECK(r.iii_inf <= 0.5);
    CHECK(r.iii_inf >= 0.0);
  }
}

TEST_CASE("fractional norms are invariant under dual-lattice shifts") {
  const IncidenceSystem sys = IncidenceSystem::design(4, 2, 1);
  const RatMat dual = dual_basis(lattice_of(sys));
  DetRng rng(67);
  for (int rep = 0; rep < 200; ++rep) {
    Theta th = random_theta(rng, 2, 4, 0.8);
    const NormReport before = norms(th, sys);
    // add an integer combination of dual rows to slot 1 (entries are exact
    // halves so the doubles stay exact)
    for (std::size_t r = 0; r < dual.rows(); ++r) {
      const double c = static_cast<double>(static_cast<long long>(rng.below(5)) - 2);
      for (std::size_t a = 0; a < 4; ++a) th.at(1, a) += c * to_double(dual.at(r, a));
    }
    const NormReport after = norms(th, sys);
    CHECK(after.iii_inf == doctest::Approx(before.iii_inf).epsilon(1e-12));
    CHECK(after.iii_2 == doctest::Approx(before.iii_2).epsilon(1e-12));
  }
}

TEST_CASE("hand-computed norms on a single-slot instance") {
  // theta puts weight 0.3 on test {1} only; pairings over the 6 edges of K4:
  // edges containing 1 pair to 0.3, the rest to 0
  const IncidenceSystem sys = IncidenceSystem::design(4, 2, 1);
  Theta th = Theta::zero(1, 4);
  th.at(1, 0) = 0.3;
  const NormReport r = norms(th, sys);
  CHECK(r.ii_inf == doctest::Approx(0.3));
  CHECK(r.ii_2 == doctest::Approx(std::sqrt(3 * 0.3 * 0.3 / 6.0)));
  CHECK(r.iii_inf == doctest::Approx(0.3));
  CHECK(r.iii_2 == doctest::Approx(std::sqrt(3 * 0.3 * 0.3 / 6.0)));

  // pairing of 0.75 wraps to -0.25 in the fractional norms
  th.at(1, 0) = 0.75;
  const NormReport w = norms(th, sys);
  CHECK(w.ii_inf == doctest::Approx(0.75));
  CHECK(w.iii_inf == doctest::Approx(0.25));
}

TEST_CASE("norm constant M formula") {
  const double expected = std::pow(36.0 * std::log(2.0 * 36.0), 1.5);
  CHECK(norm_constant_m(36, 1.0, 1.0) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(norm_constant_m(36, 2.0, 1.0) > norm_constant_m(36, 1.0, 1.0));
  CHECK(norm_constant_m(36, 1.0, 2.5) == doctest::Approx(2.5 * expected).epsilon(1e-12));
}
