#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace contpath {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when a computation would exceed a configured size bound (as opposed
// to a malformed input, which raises std::invalid_argument).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical fraction text: "p" for integers, "p/q" with q > 0 and gcd(p,q)=1
// otherwise.  parse_fraction accepts exactly this grammar plus unreduced
// fractions, and round-trips with to_fraction_string.
std::string to_fraction_string(const Rational& value);
Rational parse_fraction(std::string_view text);

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double value);
double to_double(const Rational& value);

BigInt factorial(int n);

// Binomial coefficient with the usual conventions: zero when k < 0 or k > n.
// Requires n >= 0.
BigInt binomial(long long n, long long k);

Rational rational_pow(const Rational& base, int exponent);

}  // namespace contpath
