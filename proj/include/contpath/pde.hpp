#pragma once

#include <vector>

#include "contpath/exponents.hpp"
#include "contpath/numeric.hpp"

namespace contpath::pde {

// Result of the exact coefficient-level check of the identity
//   prod_j (1 + d_j) M = sum_i prod_{j != i} (1 + d_j) M
// for M the mixed derivative of the Borel-transformed word-count generating
// function.  Coefficients of total degree <= trustworthy_degree are reliable;
// higher degrees are truncation artifacts and excluded by contract.
struct ResidualReport {
  int dimension = 0;
  int cap = 0;
  int trustworthy_degree = 0;  // cap - 2*dimension
  Rational max_abs_coefficient = 0;
  std::vector<Exponents> offending_exponents;

  bool clean() const { return offending_exponents.empty(); }
};

// Requires dimension >= 2 and cap >= 2*dimension.
ResidualReport pde_residual_series(int dimension, int cap);

// d = 2 pointwise check of the mixed-derivative identity d_x d_y f = f for
// the closed-form continuous binomial: central-difference mixed partial minus
// the value, returned as an absolute residual (O(step^2) when the identity
// holds).  Requires x > step, y > step, step > 0.
double pde_residual_numeric(double x, double y, double step);

// Exact discrete analogue: forward differences in both arguments of
// C(n+k, k) reproduce C(n+k, k).  Requires n, k >= 0.
bool binomial_difference_check(long long n, long long k);

}  // namespace contpath::pde
