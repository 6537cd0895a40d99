#include "contpath/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "contpath/contcoeff.hpp"
#include "contpath/geometry.hpp"
#include "contpath/pde.hpp"
#include "contpath/smirnov.hpp"
#include "contpath/todd.hpp"

namespace contpath::verify {

namespace {

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buffer[512];
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- independent oracles ---------------------------------------------------

// Frequency census of all adjacently-distinct words of length n over {1..d},
// by plain odometer enumeration (no recursion shared with the library path).
std::map<std::vector<int>, long long> brute_force_frequency_census(int d, int n) {
  std::map<std::vector<int>, long long> census;
  std::vector<int> word(static_cast<std::size_t>(n), 1);
  while (true) {
    bool smirnov_ok = true;
    for (int i = 1; i < n; ++i) {
      if (word[static_cast<std::size_t>(i)] == word[static_cast<std::size_t>(i) - 1]) {
        smirnov_ok = false;
        break;
      }
    }
    if (smirnov_ok) {
      std::vector<int> freq(static_cast<std::size_t>(d), 0);
      for (int letter : word) ++freq[static_cast<std::size_t>(letter - 1)];
      ++census[freq];
    }
    int pos = n - 1;
    while (pos >= 0 && word[static_cast<std::size_t>(pos)] == d) {
      word[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++word[static_cast<std::size_t>(pos)];
  }
  return census;
}

// Count of integer points a_1..a_n >= 1 with sum == x (resp. <= x), by
// direct recursive enumeration without binomial formulas.
long long brute_positive_sum_eq(int n, long long x) {
  if (n == 0) return x == 0 ? 1 : 0;
  long long total = 0;
  for (long long a = 1; a <= x; ++a) total += brute_positive_sum_eq(n - 1, x - a);
  return total;
}

long long brute_positive_sum_le(int n, long long x) {
  long long total = 0;
  for (long long s = n; s <= x; ++s) total += brute_positive_sum_eq(n, s);
  return total;
}

// 30-term exact-rational double-series oracle for the value at x = y = 1:
// sum_m 2/(m!)^2 + 2/(m!(m+1)!).
Rational spot_oracle_30_terms() {
  Rational sum = 0;
  Rational m_factorial = 1;
  for (int m = 0; m < 30; ++m) {
    if (m > 0) m_factorial *= m;
    const Rational next_factorial = m_factorial * (m + 1);
    sum += 2 / (m_factorial * m_factorial) + 2 / (m_factorial * next_factorial);
  }
  return sum;
}

// Bernoulli numbers by triangular inversion of sum_m z^m/(m+1)!, independent
// of the recurrence inside `todd`.
std::vector<Rational> bernoulli_by_series_reciprocal(int max_index) {
  std::vector<Rational> a(static_cast<std::size_t>(max_index) + 1);
  Rational f = 1;  // (m+1)!
  for (int m = 0; m <= max_index; ++m) {
    f *= m + 1;
    a[static_cast<std::size_t>(m)] = 1 / f;
  }
  std::vector<Rational> r(static_cast<std::size_t>(max_index) + 1);
  r[0] = 1;
  for (int nn = 1; nn <= max_index; ++nn) {
    Rational acc = 0;
    for (int k = 0; k < nn; ++k) {
      acc += r[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(nn - k)];
    }
    r[static_cast<std::size_t>(nn)] = -acc;
  }
  Rational k_factorial = 1;
  for (int k = 0; k <= max_index; ++k) {
    if (k > 0) k_factorial *= k;
    r[static_cast<std::size_t>(k)] *= k_factorial;
  }
  return r;
}

// ---- the nine checks --------------------------------------------------------

void check_closed_form_vs_series(const Options&, CheckResult& r) {
  const auto start = std::chrono::steady_clock::now();
  const contcoeff::ContinuousMultinomial evaluator(2, 40);
  const double grid[] = {0.25, 0.5, 1.0, 2.0, 4.0};
  double worst_rel = 0.0;
  double worst_x = 0.0;
  double worst_y = 0.0;
  for (double x : grid) {
    for (double y : grid) {
      const double closed = contcoeff::continuous_binomial_closed(x, y).value;
      const double series = evaluator.series_value({x, y}).value;
      const double rel = std::fabs(closed - series) / closed;
      if (rel > worst_rel) {
        worst_rel = rel;
        worst_x = x;
        worst_y = y;
      }
    }
  }
  const double elapsed = seconds_since(start);
  r.pass = worst_rel <= 1e-10 && elapsed < 1.0;
  r.detail = fmt("closed form vs series(cap=40), 5x5 grid: max rel diff %.2e at (%g,%g); within 1 s budget: %s",
                 worst_rel, worst_x, worst_y, elapsed < 1.0 ? "yes" : "NO");
}

void check_spot_value_oracle(const Options&, CheckResult& r) {
  const double oracle = to_double(spot_oracle_30_terms());
  const double closed = contcoeff::continuous_binomial_closed(1.0, 1.0).value;
  const double diff = std::fabs(closed - oracle);
  r.pass = diff <= 1e-6;
  r.detail = fmt("value at (1,1) = %.17g vs 30-term rational oracle %.17g; |diff| = %.2e (tol 1e-6)",
                 closed, oracle, diff);
}

void check_route_equivalence(const Options&, CheckResult& r) {
  r.pass = true;
  std::string parts;
  for (int d = 2; d <= 4; ++d) {
    const contcoeff::ContinuousMultinomial cm(d, 12);
    const bool equal = cm.series_route_table() == cm.borel_route_table();
    r.pass = r.pass && equal;
    parts += fmt("%sd=%d:%s(%zu terms)", parts.empty() ? "" : ", ", d,
                 equal ? "equal" : "DIFFER", cm.borel_route_table().term_count());
  }
  r.detail = "direct vs Borel-route coefficient tables, cap=12, exact: " + parts;
}

void check_pde_identity(const Options&, CheckResult& r) {
  r.pass = true;
  std::string parts;
  for (int d = 2; d <= 4; ++d) {
    const pde::ResidualReport report = pde::pde_residual_series(d, 12);
    r.pass = r.pass && report.clean();
    parts += fmt("%sd=%d deg<=%d:%s", parts.empty() ? "" : ", ", d,
                 report.trustworthy_degree, report.clean() ? "0" : "NONZERO");
  }
  const double points[][2] = {{1.0, 1.0}, {2.0, 3.0}};
  for (const auto& p : points) {
    const double residual = pde::pde_residual_numeric(p[0], p[1], 1e-4);
    const double value = contcoeff::continuous_binomial_closed(p[0], p[1]).value;
    const double rel = residual / value;
    r.pass = r.pass && rel <= 1e-6;
    parts += fmt(", numeric(%g,%g) rel %.1e", p[0], p[1], rel);
  }
  r.detail = "series residuals (cap=12) and step-1e-4 numeric residuals: " + parts;
}

void check_todd_kp_recovery(const Options& options, CheckResult& r) {
  const auto start = std::chrono::steady_clock::now();
  const int max_n = options.quick ? 4 : 6;
  const long long max_x = options.quick ? 8 : 12;
  int cells = 0;
  r.pass = true;
  std::string first_failure;
  for (int n = 1; n <= max_n && r.pass; ++n) {
    for (long long x = n; x <= max_x && r.pass; ++x) {
      const Rational two =
          todd::kp_discretize(todd::perturbed_simplex_volume(n, x, todd::SimplexVariant::two_sided));
      const Rational up =
          todd::kp_discretize(todd::perturbed_simplex_volume(n, x, todd::SimplexVariant::upper));
      const Rational low =
          todd::kp_discretize(todd::perturbed_simplex_volume(n, x, todd::SimplexVariant::lower));
      const bool ok = two == Rational(binomial(x - 1, n - 1)) &&
                      up == Rational(binomial(x, n)) &&
                      low == Rational(binomial(x - 1, n)) &&
                      two == Rational(brute_positive_sum_eq(n, x)) &&
                      up == Rational(brute_positive_sum_le(n, x)) &&
                      low == Rational(brute_positive_sum_le(n, x - 1));
      if (!ok && first_failure.empty()) first_failure = fmt(" FIRST FAILURE at n=%d x=%lld", n, x);
      r.pass = r.pass && ok;
      ++cells;
    }
  }
  const double elapsed = seconds_since(start);
  r.pass = r.pass && elapsed < 10.0;
  r.detail = fmt("%d (n,x) cells x 3 variants, exact binomial + brute-force counts;%s within 10 s budget: %s",
                 cells, first_failure.c_str(), elapsed < 10.0 ? "yes" : "NO");
}

void check_smirnov_counts(const Options& options, CheckResult& r) {
  const int max_total = options.quick ? 6 : 8;
  r.pass = true;
  long long vectors_checked = 0;
  for (int d = 1; d <= 4 && r.pass; ++d) {
    const smirnov::SmirnovCountTable table(d, max_total);
    for (int n = 0; n <= max_total && r.pass; ++n) {
      const auto census = brute_force_frequency_census(d, n);
      // Walk every composition of n into d non-negative parts.
      std::vector<int> nu(static_cast<std::size_t>(d), 0);
      nu.back() = n;
      BigInt band_sum = 0;
      while (true) {
        const auto it = census.find(nu);
        const long long expected = it == census.end() ? 0 : it->second;
        const BigInt got = table.count(smirnov::FrequencyVector(nu));
        if (got != expected) {
          r.pass = false;
          break;
        }
        band_sum += got;
        ++vectors_checked;
        // Next composition in colex-style odometer order.
        int i = d - 1;
        while (i > 0 && nu[static_cast<std::size_t>(i)] == 0) --i;
        if (i == 0) break;
        const int moved = nu[static_cast<std::size_t>(i)];
        nu[static_cast<std::size_t>(i)] = 0;
        ++nu[static_cast<std::size_t>(i) - 1];
        nu.back() = moved - 1;
      }
      // Band total: d*(d-1)^(n-1) words of length n >= 1, one empty word.
      BigInt expected_band = 1;
      if (n >= 1) {
        expected_band = d;
        for (int k = 1; k < n; ++k) expected_band *= d - 1;
      }
      r.pass = r.pass && band_sum == expected_band;
    }
  }
  r.detail = fmt("counts vs brute-force census, d<=4, |nu|<=%d: %lld frequency vectors; band totals d(d-1)^(n-1)",
                 max_total, vectors_checked);
}

void check_discrete_recovery(const Options&, CheckResult& r) {
  r.pass = true;
  int cases = 0;
  std::string spot;
  // All q with 1 <= d <= 3, q_i >= 1, sum q_i <= 10.
  for (int d = 1; d <= 3; ++d) {
    std::function<void(std::vector<long long>&, int, long long)> fill =
        [&](std::vector<long long>& q, int left, long long budget) {
          if (!r.pass) return;
          if (left == 0) {
            const BigInt recovered = geometry::discrete_recovery_sum(q);
            const BigInt paths = geometry::count_lattice_paths(q);
            const BigInt direct = geometry::multinomial(q);
            r.pass = r.pass && recovered == paths && paths == direct;
            ++cases;
            if (q == std::vector<long long>{2, 1}) {
              spot = fmt("; q=(2,1) -> %s", recovered.str().c_str());
            }
            return;
          }
          for (long long v = 1; v + (left - 1) <= budget; ++v) {
            q.push_back(v);
            fill(q, left - 1, budget - v);
            q.pop_back();
          }
        };
    std::vector<long long> q;
    fill(q, d, 10);
  }
  r.detail = fmt("recovery sum == DP path count == multinomial on %d targets (d<=3, sum q<=10)%s",
                 cases, spot.c_str());
}

void check_measure_ratio(const Options&, CheckResult& r) {
  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<int> pick_d(2, 4);
  std::uniform_real_distribution<double> pick_x(0.1, 5.0);
  double worst_rel = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int d = pick_d(rng);
    std::uniform_int_distribution<int> pick_len(d, 9);
    std::vector<int> letters;
    // Regenerate until the word uses every letter (zero frequencies make the
    // ratio law degenerate 0/0 by design).
    while (true) {
      const int length = pick_len(rng);
      letters.clear();
      std::uniform_int_distribution<int> first(1, d);
      letters.push_back(first(rng));
      std::uniform_int_distribution<int> offset(1, d - 1);
      for (int i = 1; i < length; ++i) {
        const int next = (letters.back() - 1 + offset(rng)) % d + 1;
        letters.push_back(next);
      }
      std::vector<bool> used(static_cast<std::size_t>(d), false);
      for (int l : letters) used[static_cast<std::size_t>(l - 1)] = true;
      bool all = true;
      for (bool u : used) all = all && u;
      if (all) break;
    }
    const smirnov::SmirnovWord word(d, letters);
    std::vector<Rational> target;
    for (int i = 0; i < d; ++i) target.push_back(rational_from_double(pick_x(rng)));
    const geometry::PatternPolytope pattern(word, target);

    const double riemannian = geometry::pattern_volume(pattern, geometry::Measure::riemannian);
    const double cd = geometry::pattern_volume(pattern, geometry::Measure::cd);
    double expected = 1.0;
    for (int i = 0; i < pattern.nu().size(); ++i) {
      expected *= std::sqrt(static_cast<double>(pattern.nu()[i]));
    }
    worst_rel = std::max(worst_rel, std::fabs(riemannian / cd - expected) / expected);
  }
  const bool sqrt2_exact =
      geometry::simplex_volume(2, 1.0, geometry::Measure::riemannian) == std::sqrt(2.0);
  r.pass = worst_rel <= 1e-12 && sqrt2_exact;
  r.detail = fmt("riemannian/cd == prod sqrt(nu_i) on 100 random patterns, max rel dev %.2e; simplex(2,1) %s sqrt(2)",
                 worst_rel, sqrt2_exact ? "==" : "!=");
}

void check_bernoulli_todd(const Options&, CheckResult& r) {
  const todd::BernoulliTable produced = todd::bernoulli_numbers(8);
  const std::vector<Rational> oracle = bernoulli_by_series_reciprocal(8);
  const char* frozen[] = {"1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30"};
  r.pass = true;
  for (int k = 0; k <= 8; ++k) {
    r.pass = r.pass && produced.value(k) == oracle[static_cast<std::size_t>(k)] &&
             produced.value(k) == parse_fraction(frozen[k]);
  }
  const bool todd4 = todd::todd_coefficient(4) == Rational(-1, 720);
  r.pass = r.pass && todd4;
  r.detail = fmt("B_0..B_8 recurrence == series-reciprocal oracle == frozen list; Todd k=4 coefficient %s -1/720",
                 todd4 ? "==" : "!=");
}

}  // namespace

std::vector<CheckResult> run_all(const Options& options) {
  using CheckFn = void (*)(const Options&, CheckResult&);
  const std::pair<const char*, CheckFn> checks[] = {
      {"closed_form_vs_series_grid", check_closed_form_vs_series},
      {"spot_value_rational_oracle", check_spot_value_oracle},
      {"borel_series_route_equivalence", check_route_equivalence},
      {"pde_identity", check_pde_identity},
      {"todd_kp_recovery", check_todd_kp_recovery},
      {"smirnov_count_oracle", check_smirnov_counts},
      {"discrete_recovery_identity", check_discrete_recovery},
      {"measure_ratio_law", check_measure_ratio},
      {"bernoulli_todd_coefficients", check_bernoulli_todd},
  };
  std::vector<CheckResult> results;
  for (const auto& [name, fn] : checks) {
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(options, r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = seconds_since(start);
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace contpath::verify
