#include "contpath/geometry.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace contpath::geometry {

Measure parse_measure(std::string_view name) {
  if (name == "riemannian") return Measure::riemannian;
  if (name == "cd") return Measure::cd;
  throw std::invalid_argument("measure must be 'riemannian' or 'cd'");
}

std::string measure_name(Measure measure) {
  return measure == Measure::riemannian ? "riemannian" : "cd";
}

double simplex_volume(int parts, double y, Measure measure) {
  if (parts < 1) throw std::invalid_argument("simplex_volume: parts must be >= 1");
  if (!std::isfinite(y) || y < 0.0) {
    throw std::invalid_argument("simplex_volume: y must be finite and >= 0");
  }
  double value = 1.0;
  for (int k = 1; k < parts; ++k) value *= y / k;  // y^(m-1)/(m-1)!
  if (measure == Measure::riemannian) value *= std::sqrt(static_cast<double>(parts));
  return value;
}

Rational simplex_volume_cd_exact(int parts, const Rational& y) {
  if (parts < 1) throw std::invalid_argument("simplex_volume_cd_exact: parts must be >= 1");
  if (y < 0) throw std::invalid_argument("simplex_volume_cd_exact: y must be >= 0");
  return rational_pow(y, parts - 1) / Rational(factorial(parts - 1));
}

PatternPolytope::PatternPolytope(smirnov::SmirnovWord word, std::vector<Rational> target)
    : word_(std::move(word)), target_(std::move(target)), nu_(frequency_vector(word_)) {
  if (static_cast<int>(target_.size()) != word_.alphabet_size()) {
    throw std::invalid_argument("PatternPolytope: target length must equal alphabet size");
  }
  for (const Rational& t : target_) {
    if (t < 0) throw std::invalid_argument("PatternPolytope: target entries must be >= 0");
  }
}

double pattern_volume(const PatternPolytope& p, Measure measure) {
  double product = 1.0;
  for (int i = 0; i < p.nu().size(); ++i) {
    if (p.nu()[i] == 0) return 0.0;
    product *= simplex_volume(p.nu()[i], to_double(p.target()[static_cast<std::size_t>(i)]),
                              measure);
  }
  return product;
}

Rational pattern_volume_cd_exact(const PatternPolytope& p) {
  Rational product = 1;
  for (int i = 0; i < p.nu().size(); ++i) {
    if (p.nu()[i] == 0) return 0;
    product *= simplex_volume_cd_exact(p.nu()[i], p.target()[static_cast<std::size_t>(i)]);
  }
  return product;
}

namespace {

void require_moduli_args(std::size_t d, int cap) {
  if (d < 1) throw std::invalid_argument("moduli volume: dimension must be >= 1");
  if (cap < static_cast<int>(d)) {
    throw std::invalid_argument("moduli volume: cap must be >= dimension");
  }
}

}  // namespace

double moduli_volume_truncated(const std::vector<double>& x, int cap, Measure measure) {
  require_moduli_args(x.size(), cap);
  for (double v : x) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("moduli volume: entries must be finite and >= 0");
    }
  }
  const smirnov::SmirnovCountTable table(static_cast<int>(x.size()), cap);
  double sum = 0.0;
  for (const auto& [nu, count] : table.generating_function().terms()) {
    if (nu.total_degree() == 0 || nu.min_entry() < 1) continue;
    double term = to_double(Rational(count));
    for (int i = 0; i < nu.size(); ++i) {
      term *= simplex_volume(nu[i], x[static_cast<std::size_t>(i)], measure);
    }
    sum += term;
  }
  return sum;
}

Rational moduli_volume_cd_exact(const std::vector<Rational>& x, int cap) {
  require_moduli_args(x.size(), cap);
  for (const Rational& v : x) {
    if (v < 0) throw std::invalid_argument("moduli volume: entries must be >= 0");
  }
  const smirnov::SmirnovCountTable table(static_cast<int>(x.size()), cap);
  Rational sum = 0;
  for (const auto& [nu, count] : table.generating_function().terms()) {
    if (nu.total_degree() == 0 || nu.min_entry() < 1) continue;
    Rational term = count;
    for (int i = 0; i < nu.size(); ++i) {
      term *= simplex_volume_cd_exact(nu[i], x[static_cast<std::size_t>(i)]);
    }
    sum += term;
  }
  return sum;
}

BigInt multinomial(const std::vector<long long>& q) {
  long long total = 0;
  for (long long v : q) {
    if (v < 0) throw std::invalid_argument("multinomial: entries must be >= 0");
    total += v;
  }
  if (total > 100000) throw ResourceLimitError("multinomial: total too large");
  BigInt result = factorial(static_cast<int>(total));
  for (long long v : q) result /= factorial(static_cast<int>(v));
  return result;
}

BigInt count_lattice_paths(const std::vector<long long>& q) {
  if (q.empty()) throw std::invalid_argument("count_lattice_paths: empty target");
  std::size_t cells = 1;
  const std::size_t limit = series::max_series_terms();
  for (long long v : q) {
    if (v < 0) throw std::invalid_argument("count_lattice_paths: entries must be >= 0");
    const auto extent = static_cast<std::size_t>(v) + 1;
    if (cells > limit / extent) {
      throw ResourceLimitError(
          "count_lattice_paths: DP table exceeds the configured size limit "
          "(set CONTPATH_MAX_SERIES_TERMS to raise it)");
    }
    cells *= extent;
  }

  // Row-major strides; cell index increases with every coordinate, so a
  // single forward sweep sees all predecessors before each cell.
  const std::size_t d = q.size();
  std::vector<std::size_t> stride(d);
  std::size_t s = 1;
  for (std::size_t i = d; i-- > 0;) {
    stride[i] = s;
    s *= static_cast<std::size_t>(q[i]) + 1;
  }

  std::vector<BigInt> dp(cells);
  std::vector<long long> idx(d, 0);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    if (cell == 0) {
      dp[0] = 1;
    } else {
      BigInt total = 0;
      for (std::size_t i = 0; i < d; ++i) {
        if (idx[i] > 0) total += dp[cell - stride[i]];
      }
      dp[cell] = std::move(total);
    }
    for (std::size_t i = d; i-- > 0;) {
      if (++idx[i] <= q[i]) break;
      idx[i] = 0;
    }
  }
  return dp[cells - 1];
}

BigInt lattice_points_in_pattern(const PatternPolytope& p) {
  std::vector<long long> q;
  q.reserve(p.target().size());
  for (const Rational& t : p.target()) {
    if (denominator(t) != 1 || t < 1) {
      throw std::invalid_argument(
          "lattice_points_in_pattern: target entries must be positive integers");
    }
    q.push_back(numerator(t).convert_to<long long>());
  }
  BigInt product = 1;
  for (int i = 0; i < p.nu().size(); ++i) {
    if (p.nu()[i] == 0) return 0;
    product *= binomial(q[static_cast<std::size_t>(i)] - 1, p.nu()[i] - 1);
    if (product == 0) return 0;
  }
  return product;
}

BigInt discrete_recovery_sum(const std::vector<long long>& q) {
  if (q.empty()) throw std::invalid_argument("discrete_recovery_sum: empty target");
  long long total = 0;
  for (long long v : q) {
    if (v < 1) {
      throw std::invalid_argument("discrete_recovery_sum: entries must be >= 1");
    }
    total += v;
  }
  if (total > 10000) {
    throw ResourceLimitError("discrete_recovery_sum: sum of targets too large");
  }

  const smirnov::SmirnovCountTable table(static_cast<int>(q.size()), static_cast<int>(total));
  BigInt sum = 0;
  for (const auto& [nu, count] : table.generating_function().terms()) {
    if (nu.total_degree() == 0 || nu.min_entry() < 1) continue;
    bool feasible = true;
    for (int i = 0; i < nu.size(); ++i) {
      if (nu[i] > q[static_cast<std::size_t>(i)]) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    BigInt term = numerator(Rational(count));
    for (int i = 0; i < nu.size(); ++i) {
      term *= binomial(q[static_cast<std::size_t>(i)] - 1, nu[i] - 1);
    }
    sum += term;
  }
  return sum;
}

}  // namespace contpath::geometry
