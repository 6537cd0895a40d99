#include "contpath/numeric.hpp"

#include <cmath>
#include <limits>

namespace contpath {

std::string to_fraction_string(const Rational& value) {
  return value.str();  // cpp_rational::str() is already "p" or "p/q", reduced
}

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  if (!is_integer_token(num_part)) {
    throw std::invalid_argument("parse_fraction: malformed numerator in '" +
                                std::string(text) + "'");
  }
  const BigInt num{std::string(num_part)};
  if (slash == std::string_view::npos) return Rational(num);

  std::string_view den_part = text.substr(slash + 1);
  if (!is_integer_token(den_part)) {
    throw std::invalid_argument("parse_fraction: malformed denominator in '" +
                                std::string(text) + "'");
  }
  const BigInt den{std::string(den_part)};
  if (den == 0) {
    throw std::invalid_argument("parse_fraction: zero denominator in '" +
                                std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("rational_from_double: value is not finite");
  }
  return Rational(value);  // exact: doubles are dyadic rationals
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(long long n, long long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper index");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: the partial product is always a binomial coefficient
  }
  return result;
}

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("rational_pow: 0 to a negative power");
    return 1 / rational_pow(base, -exponent);
  }
  Rational result = 1;
  Rational square = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result *= square;
    e >>= 1;
    if (e > 0) square *= square;
  }
  return result;
}

}  // namespace contpath
