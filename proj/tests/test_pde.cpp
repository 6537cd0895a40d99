#include "doctest.h"

#include <cmath>

#include "contpath/contcoeff.hpp"
#include "contpath/multiseries.hpp"
#include "contpath/pde.hpp"

using namespace contpath;

TEST_SUITE("pde") {

TEST_CASE("series residual vanishes on the trustworthy range") {
  const pde::ResidualReport r2 = pde::pde_residual_series(2, 12);
  CHECK(r2.dimension == 2);
  CHECK(r2.cap == 12);
  CHECK(r2.trustworthy_degree == 8);
  CHECK(r2.clean());
  CHECK(r2.max_abs_coefficient == 0);
  CHECK(r2.offending_exponents.empty());

  const pde::ResidualReport r3 = pde::pde_residual_series(3, 12);
  CHECK(r3.trustworthy_degree == 6);
  CHECK(r3.clean());

  // Minimal admissible cap: trustworthy range is just the constant term.
  const pde::ResidualReport tight = pde::pde_residual_series(2, 4);
  CHECK(tight.trustworthy_degree == 0);
  CHECK(tight.clean());

  CHECK_THROWS_AS(pde::pde_residual_series(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(pde::pde_residual_series(1, 10), std::invalid_argument);
}

TEST_CASE("two-variable operator identity, checked via series algebra") {
  // For d = 2 the identity collapses to d_x d_y M = M.  Verify it directly on
  // the derivative table of the Borel-transformed generating function.
  const contcoeff::ContinuousMultinomial cm(2, 12);
  const series::MultiSeries& m = cm.borel_route_table();  // cap 10
  const series::MultiSeries mixed =
      partial_derivative(partial_derivative(m, 1), 2);    // cap 8
  const series::MultiSeries diff = subtract(mixed, truncated(m, mixed.cap()));
  CHECK(diff.is_zero());
}

TEST_CASE("numeric residual at interior points") {
  // Central differences of the closed form: residual is O(step^2).
  CHECK(pde::pde_residual_numeric(1.0, 1.0, 1e-4) < 1e-6);
  CHECK(pde::pde_residual_numeric(2.0, 3.0, 1e-4) < 1e-5);

  // Halving the step divides the residual by ~4 while it is still above the
  // rounding floor.
  const double coarse = pde::pde_residual_numeric(1.5, 2.5, 0.02);
  const double fine = pde::pde_residual_numeric(1.5, 2.5, 0.01);
  const double ratio = coarse / fine;
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);

  CHECK_THROWS_AS(pde::pde_residual_numeric(1.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(pde::pde_residual_numeric(1.0, 1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(pde::pde_residual_numeric(0.05, 1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(pde::pde_residual_numeric(1.0, 0.05, 0.1), std::invalid_argument);
}

TEST_CASE("discrete difference identity on binomials") {
  CHECK(pde::binomial_difference_check(0, 0));
  CHECK(pde::binomial_difference_check(3, 2));
  CHECK(pde::binomial_difference_check(5, 0));
  CHECK(pde::binomial_difference_check(0, 7));
  for (long long n = 0; n <= 12; ++n) {
    for (long long k = 0; k <= 12; ++k) {
      CHECK(pde::binomial_difference_check(n, k));
    }
  }
  CHECK_THROWS_AS(pde::binomial_difference_check(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(pde::binomial_difference_check(0, -1), std::invalid_argument);
}

}  // TEST_SUITE
