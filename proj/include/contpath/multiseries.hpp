#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "contpath/exponents.hpp"
#include "contpath/numeric.hpp"

namespace contpath::series {

// Multivariate power series in `dimension` variables, truncated to total
// degree `cap`, with exact rational coefficients.
//
// Canonical form invariants (maintained by every operation):
//   * only nonzero coefficients are stored,
//   * every stored exponent vector has length dimension() and total degree
//     at most cap(),
//   * terms are keyed by exponent vector in lexicographic order.
class MultiSeries {
 public:
  using TermMap = std::map<Exponents, Rational>;

  MultiSeries(int dimension, int cap);
  static MultiSeries constant(int dimension, int cap, const Rational& value);

  int dimension() const { return dimension_; }
  int cap() const { return cap_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Zero when the exponent is absent.
  const Rational& coefficient(const Exponents& e) const;
  // Validates dimension and degree; a zero value erases the term.
  void set_coefficient(const Exponents& e, const Rational& value);

  bool operator==(const MultiSeries& other) const = default;

 private:
  int dimension_;
  int cap_;
  TermMap terms_;
};

// Binary operations require equal dimensions; the result carries the smaller
// of the two caps (degrees beyond it are unreliable in either operand).
MultiSeries add(const MultiSeries& a, const MultiSeries& b);
MultiSeries subtract(const MultiSeries& a, const MultiSeries& b);
MultiSeries scale(const MultiSeries& a, const Rational& factor);
MultiSeries multiply(const MultiSeries& a, const MultiSeries& b);

// Copy restricted to total degree <= new_cap (which becomes the new cap).
MultiSeries truncated(const MultiSeries& a, int new_cap);

// Coefficient-wise scaling by 1/(nu_1! ... nu_d!), and its exact inverse.
MultiSeries borel(const MultiSeries& a);
MultiSeries inverse_borel(const MultiSeries& a);

// d/dx_axis with axis in {1, ..., dimension}; the result cap drops by one
// (never below zero) because the top band of the antiderivative is unknown.
MultiSeries partial_derivative(const MultiSeries& a, int axis);

// Truncation of 1 / (1 - sum_i x_i/(1+x_i)) to total degree `cap`: the
// generating function whose coefficient at nu counts words over an alphabet
// of `dimension` letters, with letter frequencies nu, in which no two
// adjacent letters are equal.  Throws ResourceLimitError when the dense term
// bound C(cap+dimension, dimension) exceeds max_series_terms().
MultiSeries expand_smirnov_gf(int dimension, int cap);

double evaluate(const MultiSeries& a, const std::vector<double>& point);
Rational evaluate_exact(const MultiSeries& a, const std::vector<Rational>& point);

struct Evaluation {
  double value = 0.0;
  // Sum of |coefficient * monomial| over the top band (total degree == cap):
  // a cheap indicator of how much the truncation is still contributing.
  double top_band_magnitude = 0.0;
  int terms_used = 0;
};
Evaluation evaluate_with_tail(const MultiSeries& a, const std::vector<double>& point);

// Canonical single-line JSON: {"d":...,"cap":...,"terms":[{"exp":[...],"coef":"p/q"},...]}
// with terms in lexicographic exponent order.  from_json accepts terms in any
// order, drops explicit zeros, and rejects duplicate exponents; round-trips
// are bit-exact in both directions on canonical input.
std::string to_json(const MultiSeries& a);
MultiSeries from_json(std::string_view text);

// Series size bound used by dense expansions; configurable through the
// CONTPATH_MAX_SERIES_TERMS environment variable (default 2000000).
std::size_t max_series_terms();

}  // namespace contpath::series
