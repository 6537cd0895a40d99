#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "contpath/numeric.hpp"
#include "contpath/smirnov.hpp"

namespace contpath::geometry {

enum class Measure { riemannian, cd };

Measure parse_measure(std::string_view name);
std::string measure_name(Measure measure);

// Volume of the simplex {t in R^m : t_i >= 0, sum t_i = y} inside its affine
// hull: y^(m-1)*sqrt(m)/(m-1)! under the induced Riemannian metric, or the
// renormalized y^(m-1)/(m-1)! without the sqrt(m) factor.
double simplex_volume(int parts, double y, Measure measure);
Rational simplex_volume_cd_exact(int parts, const Rational& y);

// Product-of-simplices polytope of step lengths: one simplex factor per
// direction i, splitting travel target_i into nu_i parts, where nu is the
// letter-frequency vector of the pattern word.
class PatternPolytope {
 public:
  // target.size() must equal the word's alphabet size; entries must be >= 0.
  PatternPolytope(smirnov::SmirnovWord word, std::vector<Rational> target);

  const smirnov::SmirnovWord& word() const { return word_; }
  const std::vector<Rational>& target() const { return target_; }
  const smirnov::FrequencyVector& nu() const { return nu_; }
  // Meaningful when every nu_i >= 1: |word| - d.
  int polytope_dimension() const { return word_.length() - word_.alphabet_size(); }

 private:
  smirnov::SmirnovWord word_;
  std::vector<Rational> target_;
  smirnov::FrequencyVector nu_;
};

// Product over i of simplex_volume(nu_i, target_i, measure); any nu_i = 0
// makes the pattern degenerate and the volume 0 by convention.
double pattern_volume(const PatternPolytope& p, Measure measure);
Rational pattern_volume_cd_exact(const PatternPolytope& p);

// Sum of pattern volumes over all words of length <= cap (organized as a sum
// over frequency vectors weighted by word counts).  Requires cap >= d.
double moduli_volume_truncated(const std::vector<double>& x, int cap, Measure measure);
Rational moduli_volume_cd_exact(const std::vector<Rational>& x, int cap);

// (sum q_i)! / prod q_i!, exact.
BigInt multinomial(const std::vector<long long>& q);

// Dynamic-programming count of monotone unit-step paths from the origin to q;
// independent of multinomial().
BigInt count_lattice_paths(const std::vector<long long>& q);

// Number of lattice paths with the given pattern: prod_i C(q_i-1, nu_i-1),
// the ways to split each coordinate's (positive integer) travel q_i into nu_i
// strictly positive integer steps.  Zero when some q_i < nu_i or nu_i = 0.
BigInt lattice_points_in_pattern(const PatternPolytope& p);

// Sum over frequency vectors nu with 1 <= nu_i <= q_i of
// count_smirnov(nu) * prod_i C(q_i-1, nu_i-1); equals count_lattice_paths(q).
BigInt discrete_recovery_sum(const std::vector<long long>& q);

}  // namespace contpath::geometry
