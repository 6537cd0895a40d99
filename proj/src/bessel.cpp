#include "contpath/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "contpath/numeric.hpp"

namespace contpath::bessel {

EvalResult bessel_i(int nu, double z, double tol, int max_terms) {
  if (nu < 0) throw std::invalid_argument("bessel_i: order must be >= 0");
  if (!std::isfinite(z) || z < 0.0) {
    throw std::invalid_argument("bessel_i: argument must be finite and >= 0");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("bessel_i: tolerance must be positive");
  if (max_terms < 1) throw std::invalid_argument("bessel_i: max_terms must be >= 1");

  const double half = z / 2.0;
  const double q = half * half;

  // term_0 = (z/2)^nu / nu!, built incrementally to avoid overflow.
  double term = 1.0;
  for (int i = 1; i <= nu; ++i) term *= half / i;

  double sum = 0.0;
  double comp = 0.0;  // Kahan compensation
  for (int m = 0; m < max_terms; ++m) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;

    const double next = term * q / ((m + 1.0) * (m + 1.0 + nu));
    const double ratio_after_next = q / ((m + 2.0) * (m + 2.0 + nu));
    const double threshold = sum == 0.0 ? tol : tol * std::fabs(sum);
    if (std::fabs(next) <= threshold && ratio_after_next < 1.0) {
      EvalResult out;
      out.value = sum;
      out.tail_bound = std::fabs(next) / (1.0 - ratio_after_next);
      out.terms_used = m + 1;
      return out;
    }
    term = next;
  }
  throw ResourceLimitError("bessel_i: series did not converge within " +
                           std::to_string(max_terms) + " terms");
}

}  // namespace contpath::bessel
