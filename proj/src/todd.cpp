#include "contpath/todd.hpp"

#include <algorithm>
#include <stdexcept>

namespace contpath::todd {

BernoulliTable::BernoulliTable(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty() || values_[0] != 1) {
    throw std::invalid_argument("BernoulliTable: B_0 must be 1");
  }
  for (std::size_t k = 3; k < values_.size(); k += 2) {
    if (values_[k] != 0) {
      throw std::invalid_argument("BernoulliTable: B_k must vanish for odd k >= 3");
    }
  }
}

const Rational& BernoulliTable::value(int k) const {
  if (k < 0 || k > max_index()) {
    throw std::invalid_argument("BernoulliTable: index out of range");
  }
  return values_[static_cast<std::size_t>(k)];
}

BernoulliTable bernoulli_numbers(int max_index) {
  if (max_index < 0) throw std::invalid_argument("bernoulli_numbers: negative index");
  std::vector<Rational> b(static_cast<std::size_t>(max_index) + 1);
  b[0] = 1;
  // From z/(e^z - 1) = sum B_k z^k / k!:
  //   B_n = -1/(n+1) * sum_{k=0}^{n-1} C(n+1, k) B_k.
  for (int n = 1; n <= max_index; ++n) {
    Rational acc = 0;
    for (int k = 0; k < n; ++k) {
      acc += Rational(binomial(n + 1, k)) * b[static_cast<std::size_t>(k)];
    }
    b[static_cast<std::size_t>(n)] = -acc / (n + 1);
  }
  return BernoulliTable(std::move(b));
}

Rational todd_coefficient(int k) {
  if (k < 0) throw std::invalid_argument("todd_coefficient: negative index");
  const Rational bk = bernoulli_numbers(k).value(k);
  const Rational coef = bk / Rational(factorial(k));
  return k % 2 == 0 ? coef : -coef;
}

PerturbationPolynomial::PerturbationPolynomial(std::vector<std::string> variables)
    : variables_(std::move(variables)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].empty()) {
      throw std::invalid_argument("PerturbationPolynomial: empty variable name");
    }
    for (std::size_t j = i + 1; j < variables_.size(); ++j) {
      if (variables_[i] == variables_[j]) {
        throw std::invalid_argument("PerturbationPolynomial: duplicate variable name");
      }
    }
  }
}

PerturbationPolynomial PerturbationPolynomial::constant(std::vector<std::string> variables,
                                                        const Rational& value) {
  PerturbationPolynomial out(std::move(variables));
  out.add_term(std::vector<int>(out.variables_.size(), 0), value);
  return out;
}

int PerturbationPolynomial::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("PerturbationPolynomial: unknown variable '" +
                              std::string(name) + "'");
}

const Rational& PerturbationPolynomial::coefficient(const std::vector<int>& exponents) const {
  static const Rational kZero = 0;
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? kZero : it->second;
}

void PerturbationPolynomial::add_term(const std::vector<int>& exponents,
                                      const Rational& value) {
  if (exponents.size() != variables_.size()) {
    throw std::invalid_argument("PerturbationPolynomial: exponent arity mismatch");
  }
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("PerturbationPolynomial: negative exponent");
  }
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

int PerturbationPolynomial::degree_in(std::string_view name) const {
  const auto index = static_cast<std::size_t>(variable_index(name));
  int degree = 0;
  for (const auto& [e, c] : terms_) degree = std::max(degree, e[index]);
  return degree;
}

int PerturbationPolynomial::total_degree() const {
  int degree = 0;
  for (const auto& [e, c] : terms_) {
    int sum = 0;
    for (int v : e) sum += v;
    degree = std::max(degree, sum);
  }
  return degree;
}

Rational PerturbationPolynomial::value_at_zero() const {
  return coefficient(std::vector<int>(variables_.size(), 0));
}

std::string PerturbationPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + to_fraction_string(c) + ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += "*" + variables_[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

namespace {

void require_same_variables(const PerturbationPolynomial& a,
                            const PerturbationPolynomial& b) {
  if (a.variables() != b.variables()) {
    throw std::invalid_argument("PerturbationPolynomial: variable lists differ");
  }
}

}  // namespace

PerturbationPolynomial add(const PerturbationPolynomial& a, const PerturbationPolynomial& b) {
  require_same_variables(a, b);
  PerturbationPolynomial out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

PerturbationPolynomial subtract(const PerturbationPolynomial& a,
                                const PerturbationPolynomial& b) {
  require_same_variables(a, b);
  PerturbationPolynomial out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
  return out;
}

PerturbationPolynomial multiply(const PerturbationPolynomial& a,
                                const PerturbationPolynomial& b) {
  require_same_variables(a, b);
  PerturbationPolynomial out(a.variables());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

PerturbationPolynomial scale(const PerturbationPolynomial& a, const Rational& factor) {
  PerturbationPolynomial out(a.variables());
  if (factor == 0) return out;
  for (const auto& [e, c] : a.terms()) out.add_term(e, c * factor);
  return out;
}

PerturbationPolynomial derivative(const PerturbationPolynomial& a, std::string_view name) {
  const auto index = static_cast<std::size_t>(a.variable_index(name));
  PerturbationPolynomial out(a.variables());
  for (const auto& [e, c] : a.terms()) {
    if (e[index] == 0) continue;
    std::vector<int> reduced = e;
    --reduced[index];
    out.add_term(reduced, c * e[index]);
  }
  return out;
}

PerturbationPolynomial substitute_zero(const PerturbationPolynomial& a,
                                       std::string_view name) {
  const auto index = static_cast<std::size_t>(a.variable_index(name));
  PerturbationPolynomial out(a.variables());
  for (const auto& [e, c] : a.terms()) {
    if (e[index] == 0) out.add_term(e, c);
  }
  return out;
}

PerturbationPolynomial with_variables(const PerturbationPolynomial& a,
                                      std::vector<std::string> variables) {
  PerturbationPolynomial out(std::move(variables));
  std::vector<std::size_t> slot(a.variables().size());
  for (std::size_t i = 0; i < a.variables().size(); ++i) {
    slot[i] = static_cast<std::size_t>(out.variable_index(a.variables()[i]));
  }
  for (const auto& [e, c] : a.terms()) {
    std::vector<int> mapped(static_cast<std::size_t>(out.variable_count()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) mapped[slot[i]] = e[i];
    out.add_term(mapped, c);
  }
  return out;
}

PerturbationPolynomial todd_apply(const PerturbationPolynomial& p, std::string_view name) {
  const int degree = p.degree_in(name);
  const BernoulliTable bernoulli = bernoulli_numbers(degree);
  PerturbationPolynomial out(p.variables());
  PerturbationPolynomial dk = p;  // (d/d name)^k p
  Rational k_factorial = 1;
  for (int k = 0; k <= degree; ++k) {
    if (k > 0) {
      dk = derivative(dk, name);
      k_factorial *= k;
    }
    Rational coef = bernoulli.value(k) / k_factorial;
    if (k % 2 == 1) coef = -coef;
    out = add(out, scale(dk, coef));
  }
  return out;
}

SimplexVariant parse_variant(std::string_view name) {
  if (name == "two_sided") return SimplexVariant::two_sided;
  if (name == "upper") return SimplexVariant::upper;
  if (name == "lower") return SimplexVariant::lower;
  throw std::invalid_argument("variant must be 'two_sided', 'upper' or 'lower'");
}

std::string variant_name(SimplexVariant variant) {
  switch (variant) {
    case SimplexVariant::two_sided:
      return "two_sided";
    case SimplexVariant::upper:
      return "upper";
    case SimplexVariant::lower:
      return "lower";
  }
  throw std::logic_error("variant_name: unreachable");
}

namespace {

std::vector<std::string> simplex_variables(int n, SimplexVariant variant) {
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("h" + std::to_string(i));
  if (variant != SimplexVariant::lower) vars.push_back("h_plus");
  if (variant != SimplexVariant::upper) vars.push_back("h_minus");
  return vars;
}

PerturbationPolynomial power(const PerturbationPolynomial& base, int exponent) {
  PerturbationPolynomial out = PerturbationPolynomial::constant(base.variables(), 1);
  for (int i = 0; i < exponent; ++i) out = multiply(out, base);
  return out;
}

// (x + sign_pm * h_pm - sum h_i)^n / n! on the given variable list.
PerturbationPolynomial one_sided_volume(int n, long long x, const std::string& pm_name,
                                        int sign_pm,
                                        const std::vector<std::string>& vars) {
  PerturbationPolynomial linear(vars);
  std::vector<int> e(vars.size(), 0);
  linear.add_term(e, Rational(x));
  for (int i = 0; i < n; ++i) {
    std::fill(e.begin(), e.end(), 0);
    e[static_cast<std::size_t>(i)] = 1;
    linear.add_term(e, -1);
  }
  std::fill(e.begin(), e.end(), 0);
  e[static_cast<std::size_t>(linear.variable_index(pm_name))] = 1;
  linear.add_term(e, sign_pm);
  return scale(power(linear, n), Rational(1) / Rational(factorial(n)));
}

}  // namespace

PerturbationPolynomial perturbed_simplex_volume(int n, long long x, SimplexVariant variant) {
  if (n < 1) throw std::invalid_argument("perturbed_simplex_volume: n must be >= 1");
  if (x < 1) throw std::invalid_argument("perturbed_simplex_volume: x must be >= 1");
  const std::vector<std::string> vars = simplex_variables(n, variant);
  switch (variant) {
    case SimplexVariant::upper:
      return one_sided_volume(n, x, "h_plus", +1, vars);
    case SimplexVariant::lower:
      return one_sided_volume(n, x, "h_minus", -1, vars);
    case SimplexVariant::two_sided:
      return subtract(one_sided_volume(n, x, "h_plus", +1, vars),
                      one_sided_volume(n, x, "h_minus", -1, vars));
  }
  throw std::logic_error("perturbed_simplex_volume: unreachable");
}

Rational kp_discretize(const PerturbationPolynomial& p) {
  PerturbationPolynomial forward = p;
  for (const std::string& name : p.variables()) forward = todd_apply(forward, name);

  PerturbationPolynomial backward = p;
  for (auto it = p.variables().rbegin(); it != p.variables().rend(); ++it) {
    backward = todd_apply(backward, *it);
  }
  if (!(forward == backward)) {
    throw std::logic_error("kp_discretize: Todd application order changed the result");
  }
  return forward.value_at_zero();
}

Rational kp_discretize_eliminating(const PerturbationPolynomial& p) {
  PerturbationPolynomial reduced = p;
  for (const std::string& name : p.variables()) {
    reduced = substitute_zero(todd_apply(reduced, name), name);
  }
  return reduced.value_at_zero();
}

}  // namespace contpath::todd
