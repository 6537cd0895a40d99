#include "contpath/pde.hpp"

#include <cmath>
#include <stdexcept>

#include "contpath/contcoeff.hpp"
#include "contpath/multiseries.hpp"

namespace contpath::pde {

namespace {

// (1 + d_axis) s; the result cap drops by one through add()'s min-cap rule.
series::MultiSeries one_plus_derivative(const series::MultiSeries& s, int axis) {
  return add(s, partial_derivative(s, axis));
}

}  // namespace

ResidualReport pde_residual_series(int dimension, int cap) {
  if (dimension < 2) {
    throw std::invalid_argument("pde_residual_series: dimension must be >= 2");
  }
  if (cap < 2 * dimension) {
    throw std::invalid_argument("pde_residual_series: cap must be >= 2*dimension");
  }

  // M = d_1...d_d borel(F), cap drops to cap - d.
  series::MultiSeries m = series::borel(series::expand_smirnov_gf(dimension, cap));
  for (int axis = 1; axis <= dimension; ++axis) m = partial_derivative(m, axis);

  // Left side: all d operators; right side: sum over i of all but operator i.
  series::MultiSeries left = m;
  for (int axis = 1; axis <= dimension; ++axis) left = one_plus_derivative(left, axis);

  series::MultiSeries right(dimension, left.cap());
  for (int skip = 1; skip <= dimension; ++skip) {
    series::MultiSeries partial = m;
    for (int axis = 1; axis <= dimension; ++axis) {
      if (axis != skip) partial = one_plus_derivative(partial, axis);
    }
    right = add(right, partial);
  }

  const series::MultiSeries residual = subtract(left, right);

  ResidualReport report;
  report.dimension = dimension;
  report.cap = cap;
  report.trustworthy_degree = cap - 2 * dimension;
  for (const auto& [e, c] : residual.terms()) {
    if (e.total_degree() > report.trustworthy_degree) continue;
    report.offending_exponents.push_back(e);
    const Rational magnitude = c < 0 ? Rational(-c) : c;
    if (magnitude > report.max_abs_coefficient) report.max_abs_coefficient = magnitude;
  }
  return report;
}

double pde_residual_numeric(double x, double y, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("pde_residual_numeric: step must be positive");
  }
  if (!(x > step) || !(y > step)) {
    throw std::invalid_argument("pde_residual_numeric: requires x > step and y > step");
  }
  const auto f = [](double a, double b) {
    return contcoeff::continuous_binomial_closed(a, b).value;
  };
  const double mixed = (f(x + step, y + step) - f(x + step, y - step) -
                        f(x - step, y + step) + f(x - step, y - step)) /
                       (4.0 * step * step);
  return std::fabs(mixed - f(x, y));
}

bool binomial_difference_check(long long n, long long k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("binomial_difference_check: requires n, k >= 0");
  }
  // Forward difference in n then in k of C(n+k, k), compared with C(n+k, k).
  const BigInt lhs = binomial(n + k + 2, k + 1) - binomial(n + k + 1, k + 1) -
                     binomial(n + k + 1, k) + binomial(n + k, k);
  return lhs == binomial(n + k, k);
}

}  // namespace contpath::pde
