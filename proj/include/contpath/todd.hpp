#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "contpath/numeric.hpp"

namespace contpath::todd {

// Exact Bernoulli numbers B_0..B_K with the B(0) convention (B_1 = -1/2).
class BernoulliTable {
 public:
  explicit BernoulliTable(std::vector<Rational> values);

  int max_index() const { return static_cast<int>(values_.size()) - 1; }
  const Rational& value(int k) const;
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

BernoulliTable bernoulli_numbers(int max_index);

// Coefficient of (d/dh)^k in the Todd operator: (-1)^k * B_k / k!.
Rational todd_coefficient(int k);

// Polynomial with exact rational coefficients in a fixed ordered list of
// named perturbation variables.  Canonical form: no zero coefficients.
class PerturbationPolynomial {
 public:
  explicit PerturbationPolynomial(std::vector<std::string> variables);
  static PerturbationPolynomial constant(std::vector<std::string> variables,
                                         const Rational& value);

  const std::vector<std::string>& variables() const { return variables_; }
  int variable_count() const { return static_cast<int>(variables_.size()); }
  // Index of a named variable; throws when absent.
  int variable_index(std::string_view name) const;

  using TermMap = std::map<std::vector<int>, Rational>;
  const TermMap& terms() const { return terms_; }
  const Rational& coefficient(const std::vector<int>& exponents) const;
  // Accumulates onto any existing term; erases resulting zeros.
  void add_term(const std::vector<int>& exponents, const Rational& value);

  int degree_in(std::string_view name) const;
  int total_degree() const;
  Rational value_at_zero() const;
  std::string str() const;

  bool operator==(const PerturbationPolynomial& other) const = default;

 private:
  std::vector<std::string> variables_;
  TermMap terms_;
};

// Arithmetic requires identical variable lists (same names, same order).
PerturbationPolynomial add(const PerturbationPolynomial& a, const PerturbationPolynomial& b);
PerturbationPolynomial subtract(const PerturbationPolynomial& a,
                                const PerturbationPolynomial& b);
PerturbationPolynomial multiply(const PerturbationPolynomial& a,
                                const PerturbationPolynomial& b);
PerturbationPolynomial scale(const PerturbationPolynomial& a, const Rational& factor);
PerturbationPolynomial derivative(const PerturbationPolynomial& a, std::string_view name);
// Sets the named variable to zero (drops terms with a positive exponent in
// it); the variable slot is kept so variable lists stay comparable.
PerturbationPolynomial substitute_zero(const PerturbationPolynomial& a,
                                       std::string_view name);
// Reindexes onto a superset variable list, matching variables by name.
PerturbationPolynomial with_variables(const PerturbationPolynomial& a,
                                      std::vector<std::string> variables);

// Todd operator in one variable: sum_{k=0}^{deg} (-1)^k (B_k/k!) (d/d var)^k.
// Exact and finite: the series truncates at the polynomial's degree in var.
PerturbationPolynomial todd_apply(const PerturbationPolynomial& p, std::string_view name);

enum class SimplexVariant { two_sided, upper, lower };
SimplexVariant parse_variant(std::string_view name);
std::string variant_name(SimplexVariant variant);

// Volume polynomial of the perturbed discrete-simplex family at dilation x:
//   upper     = (x + h_plus - sum h_i)^n / n!        vars (h1..hn, h_plus)
//   lower     = (x - h_minus - sum h_i)^n / n!       vars (h1..hn, h_minus)
//   two_sided = upper - lower                        vars (h1..hn, h_plus, h_minus)
PerturbationPolynomial perturbed_simplex_volume(int n, long long x, SimplexVariant variant);

// Khovanskii-Pukhlikov discretization: Todd operator applied in every
// variable, evaluated at zero perturbation.  Asserts that the application
// order does not matter.
Rational kp_discretize(const PerturbationPolynomial& p);
// Variant eliminating each variable right after its Todd application; must
// agree with kp_discretize.
Rational kp_discretize_eliminating(const PerturbationPolynomial& p);

}  // namespace contpath::todd
