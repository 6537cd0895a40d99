#pragma once

#include <vector>

#include "contpath/eval_result.hpp"
#include "contpath/multiseries.hpp"
#include "contpath/numeric.hpp"

namespace contpath::contcoeff {

// Flag set on EvalResult when the requested cap is below the dimension, in
// which case no frequency vector contributes and the value is 0 by contract.
inline constexpr const char* kCapBelowDimensionFlag = "cap_below_dimension";

// d = 2 closed form 2*I_0(2*sqrt(xy)) + (x+y)*I_1(2*sqrt(xy))/sqrt(xy); the
// removable singularity on the axes evaluates to 2 + x + y.
EvalResult continuous_binomial_closed(double x, double y, double tol = 1e-15);

// Truncation cap giving super-exponentially small dropped terms at desk
// scale: max(d, ceil(2*e*max_i x_i) + 10).
int default_cap(const std::vector<double>& x);

// Evaluator for the continuous multinomial in a fixed dimension and cap.
// Construction expands the adjacently-distinct-word generating function once;
// evaluations amortize it across grid sweeps.
class ContinuousMultinomial {
 public:
  // Requires dimension >= 2 and cap >= dimension.
  ContinuousMultinomial(int dimension, int cap);

  int dimension() const { return gf_.dimension(); }
  int cap() const { return gf_.cap(); }
  const series::MultiSeries& word_count_gf() const { return gf_; }

  // Direct route: sum over frequency vectors nu with all nu_i >= 1 and
  // |nu| <= cap of count(nu) * prod_i x_i^(nu_i-1)/(nu_i-1)!.  Terms with any
  // nu_i = 0 contribute zero (the 1/(-1)! convention).  Accumulated in exact
  // rationals, converted to double once; tail_bound is a geometric estimate
  // of the dropped bands |nu| > cap.
  EvalResult series_value(const std::vector<double>& x) const;
  Rational series_value_exact(const std::vector<Rational>& x) const;

  // Borel route: evaluates d_1...d_d applied to the Borel transform of the
  // generating function (computed coefficient-exactly, evaluated in floating
  // point).
  EvalResult borel_value(const std::vector<double>& x) const;

  // Coefficient tables of the two routes, both over monomials x^(nu-1) with
  // cap() - dimension() as the degree cap.  They must agree exactly; they are
  // built by independent code paths (direct factorial division vs Borel
  // transform followed by differentiation).
  series::MultiSeries series_route_table() const;
  const series::MultiSeries& borel_route_table() const { return borel_table_; }

 private:
  series::MultiSeries gf_;
  series::MultiSeries borel_table_;
};

// Free-function forms; cap < d yields a flagged zero result instead of an
// exception.  Both require d >= 2 and componentwise non-negative x.
EvalResult continuous_multinomial_series(const std::vector<double>& x, int cap);
EvalResult continuous_multinomial_borel(const std::vector<double>& x, int cap);

}  // namespace contpath::contcoeff
