#include "contpath/contcoeff.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "contpath/bessel.hpp"

namespace contpath::contcoeff {

namespace {

void require_nonnegative(const std::vector<double>& x, const char* who) {
  for (double v : x) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument(std::string(who) + ": entries must be finite and >= 0");
    }
  }
}

// Geometric estimate of everything dropped beyond the top band, from the
// magnitudes of the last two retained bands.
double tail_from_bands(double prev_band, double top_band) {
  if (top_band == 0.0) return 0.0;
  if (prev_band > 0.0) {
    const double ratio = top_band / prev_band;
    if (ratio < 1.0) return top_band * ratio / (1.0 - ratio);
  }
  return top_band;
}

series::MultiSeries checked_gf(int dimension, int cap) {
  if (dimension < 2) {
    throw std::invalid_argument("ContinuousMultinomial: dimension must be >= 2");
  }
  if (cap < dimension) {
    throw std::invalid_argument("ContinuousMultinomial: cap must be >= dimension");
  }
  return series::expand_smirnov_gf(dimension, cap);
}

series::MultiSeries derivative_all_axes(series::MultiSeries s) {
  for (int axis = 1; axis <= s.dimension(); ++axis) s = partial_derivative(s, axis);
  return s;
}

}  // namespace

EvalResult continuous_binomial_closed(double x, double y, double tol) {
  if (!std::isfinite(x) || !std::isfinite(y) || x < 0.0 || y < 0.0) {
    throw std::invalid_argument("continuous_binomial_closed: x, y must be finite and >= 0");
  }
  EvalResult out;
  if (x == 0.0 || y == 0.0) {
    out.value = 2.0 + x + y;
    return out;
  }
  const double s = std::sqrt(x * y);
  const EvalResult i0 = bessel::bessel_i(0, 2.0 * s, tol);
  const EvalResult i1 = bessel::bessel_i(1, 2.0 * s, tol);
  out.value = 2.0 * i0.value + (x + y) * i1.value / s;
  out.tail_bound = 2.0 * i0.tail_bound + (x + y) * i1.tail_bound / s;
  out.terms_used = i0.terms_used + i1.terms_used;
  return out;
}

int default_cap(const std::vector<double>& x) {
  if (x.empty()) throw std::invalid_argument("default_cap: empty input");
  require_nonnegative(x, "default_cap");
  double max_x = 0.0;
  for (double v : x) max_x = std::max(max_x, v);
  const int d = static_cast<int>(x.size());
  const int from_scale = static_cast<int>(std::ceil(2.0 * std::numbers::e * max_x)) + 10;
  return std::max(d, from_scale);
}

ContinuousMultinomial::ContinuousMultinomial(int dimension, int cap)
    : gf_(checked_gf(dimension, cap)),
      borel_table_(derivative_all_axes(series::borel(gf_))) {}

Rational ContinuousMultinomial::series_value_exact(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != dimension()) {
    throw std::invalid_argument("series_value_exact: point dimension mismatch");
  }
  const int d = dimension();
  // Power tables for exponents nu_i - 1 <= cap - 1.
  std::vector<std::vector<Rational>> powers(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    powers[i].resize(static_cast<std::size_t>(cap()));
    powers[i][0] = 1;
    for (int k = 1; k < cap(); ++k) powers[i][static_cast<std::size_t>(k)] = powers[i][k - 1] * x[i];
  }
  std::vector<Rational> inv_factorial(static_cast<std::size_t>(cap()));
  inv_factorial[0] = 1;
  for (int k = 1; k < cap(); ++k) {
    inv_factorial[static_cast<std::size_t>(k)] = inv_factorial[k - 1] / k;
  }

  Rational sum = 0;
  for (const auto& [nu, count] : gf_.terms()) {
    if (nu.min_entry() < 1) continue;
    Rational term = count;
    for (int i = 0; i < d; ++i) {
      const auto e = static_cast<std::size_t>(nu[i] - 1);
      term *= powers[static_cast<std::size_t>(i)][e] * inv_factorial[e];
    }
    sum += term;
  }
  return sum;
}

EvalResult ContinuousMultinomial::series_value(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dimension()) {
    throw std::invalid_argument("series_value: point dimension mismatch");
  }
  require_nonnegative(x, "series_value");
  const int d = dimension();

  std::vector<Rational> exact_point;
  exact_point.reserve(x.size());
  for (double v : x) exact_point.push_back(rational_from_double(v));

  std::vector<std::vector<Rational>> powers(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    powers[i].resize(static_cast<std::size_t>(cap()));
    powers[i][0] = 1;
    for (int k = 1; k < cap(); ++k) {
      powers[i][static_cast<std::size_t>(k)] = powers[i][k - 1] * exact_point[i];
    }
  }
  std::vector<Rational> inv_factorial(static_cast<std::size_t>(cap()));
  inv_factorial[0] = 1;
  for (int k = 1; k < cap(); ++k) {
    inv_factorial[static_cast<std::size_t>(k)] = inv_factorial[k - 1] / k;
  }

  // Exact per-band sums (band = total frequency |nu|); one rounding site at
  // the end.
  std::vector<Rational> band(static_cast<std::size_t>(cap()) + 1);
  int terms_used = 0;
  for (const auto& [nu, count] : gf_.terms()) {
    if (nu.min_entry() < 1) continue;
    Rational term = count;
    for (int i = 0; i < d; ++i) {
      const auto e = static_cast<std::size_t>(nu[i] - 1);
      term *= powers[static_cast<std::size_t>(i)][e] * inv_factorial[e];
    }
    band[static_cast<std::size_t>(nu.total_degree())] += term;
    ++terms_used;
  }

  Rational total = 0;
  for (const Rational& b : band) total += b;

  EvalResult out;
  out.value = to_double(total);
  out.terms_used = terms_used;
  const double top = std::fabs(to_double(band[static_cast<std::size_t>(cap())]));
  const double prev = cap() >= 1
                          ? std::fabs(to_double(band[static_cast<std::size_t>(cap()) - 1]))
                          : 0.0;
  out.tail_bound = tail_from_bands(prev, top);
  return out;
}

EvalResult ContinuousMultinomial::borel_value(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dimension()) {
    throw std::invalid_argument("borel_value: point dimension mismatch");
  }
  require_nonnegative(x, "borel_value");

  // Per-degree magnitudes of the derivative table; degree k corresponds to
  // frequency band |nu| = k + dimension.
  std::vector<double> band_abs(static_cast<std::size_t>(borel_table_.cap()) + 1, 0.0);
  std::vector<std::vector<double>> powers(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    powers[i].resize(static_cast<std::size_t>(borel_table_.cap()) + 1);
    powers[i][0] = 1.0;
    for (int k = 1; k <= borel_table_.cap(); ++k) {
      powers[i][static_cast<std::size_t>(k)] = powers[i][k - 1] * x[i];
    }
  }

  EvalResult out;
  double value = 0.0;
  for (const auto& [e, c] : borel_table_.terms()) {
    double monomial = to_double(c);
    for (int i = 0; i < e.size(); ++i) {
      monomial *= powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[i])];
    }
    value += monomial;
    band_abs[static_cast<std::size_t>(e.total_degree())] += std::fabs(monomial);
    ++out.terms_used;
  }
  out.value = value;
  const int top = borel_table_.cap();
  out.tail_bound = tail_from_bands(top >= 1 ? band_abs[static_cast<std::size_t>(top) - 1] : 0.0,
                                   band_abs[static_cast<std::size_t>(top)]);
  return out;
}

series::MultiSeries ContinuousMultinomial::series_route_table() const {
  // Direct construction: monomial exponent mu = nu - (1,...,1), coefficient
  // count(nu) / prod (nu_i - 1)!.
  const int d = dimension();
  series::MultiSeries table(d, cap() - d);
  std::vector<Rational> inv_factorial(static_cast<std::size_t>(cap()));
  inv_factorial[0] = 1;
  for (int k = 1; k < cap(); ++k) {
    inv_factorial[static_cast<std::size_t>(k)] = inv_factorial[k - 1] / k;
  }
  for (const auto& [nu, count] : gf_.terms()) {
    if (nu.min_entry() < 1) continue;
    Rational coef = count;
    std::vector<int> mu(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      mu[static_cast<std::size_t>(i)] = nu[i] - 1;
      coef *= inv_factorial[static_cast<std::size_t>(nu[i] - 1)];
    }
    table.set_coefficient(Exponents(std::move(mu)), coef);
  }
  return table;
}

namespace {

EvalResult flagged_zero() {
  EvalResult out;
  out.flag = kCapBelowDimensionFlag;
  return out;
}

void require_multinomial_point(const std::vector<double>& x) {
  if (x.size() < 2) {
    throw std::invalid_argument("continuous multinomial requires d >= 2");
  }
  require_nonnegative(x, "continuous multinomial");
}

}  // namespace

EvalResult continuous_multinomial_series(const std::vector<double>& x, int cap) {
  require_multinomial_point(x);
  if (cap < static_cast<int>(x.size())) return flagged_zero();
  return ContinuousMultinomial(static_cast<int>(x.size()), cap).series_value(x);
}

EvalResult continuous_multinomial_borel(const std::vector<double>& x, int cap) {
  require_multinomial_point(x);
  if (cap < static_cast<int>(x.size())) return flagged_zero();
  return ContinuousMultinomial(static_cast<int>(x.size()), cap).borel_value(x);
}

}  // namespace contpath::contcoeff
