#include "doctest.h"

#include <cstdlib>
#include <map>

#include "contpath/multiseries.hpp"

using namespace contpath;
using series::MultiSeries;

namespace {

MultiSeries linear_1_plus(int dimension, int cap, int axis) {
  MultiSeries s = MultiSeries::constant(dimension, cap, 1);
  s.set_coefficient(Exponents::zeros(dimension).bumped(axis, 1), 1);
  return s;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("construction and coefficient bookkeeping") {
  CHECK_THROWS_AS(MultiSeries(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(MultiSeries(2, -1), std::invalid_argument);

  MultiSeries s(2, 3);
  CHECK(s.is_zero());
  s.set_coefficient({1, 2}, Rational(5, 3));
  CHECK(s.coefficient({1, 2}) == Rational(5, 3));
  CHECK(s.coefficient({2, 1}) == 0);
  CHECK(s.term_count() == 1);

  s.set_coefficient({1, 2}, 0);  // zero erases
  CHECK(s.is_zero());

  CHECK_THROWS_AS(s.set_coefficient({1, 2, 3}, 1), std::invalid_argument);  // arity
  CHECK_THROWS_AS(s.set_coefficient({2, 2}, 1), std::invalid_argument);     // degree > cap
  CHECK_THROWS_AS(Exponents({-1, 0}), std::invalid_argument);
}

TEST_CASE("add, subtract, scale") {
  const MultiSeries a = linear_1_plus(2, 4, 0);  // 1 + x
  const MultiSeries b = linear_1_plus(2, 4, 1);  // 1 + y

  const MultiSeries sum = add(a, b);
  CHECK(sum.coefficient({0, 0}) == 2);
  CHECK(sum.coefficient({1, 0}) == 1);
  CHECK(sum.coefficient({0, 1}) == 1);

  CHECK(subtract(a, a).is_zero());
  const MultiSeries scaled = scale(a, Rational(-2, 3));
  CHECK(scaled.coefficient({0, 0}) == Rational(-2, 3));
  CHECK(scale(a, 0).is_zero());

  CHECK_THROWS_AS(add(a, MultiSeries(3, 4)), std::invalid_argument);
}

TEST_CASE("multiply with truncation") {
  const MultiSeries a = linear_1_plus(2, 2, 0);
  const MultiSeries b = linear_1_plus(2, 2, 1);
  const MultiSeries ab = multiply(a, b);  // 1 + x + y + xy
  CHECK(ab.term_count() == 4);
  CHECK(ab.coefficient({1, 1}) == 1);

  // (x+y)^2 truncated at cap 1 has nothing left.
  MultiSeries xy(2, 1);
  xy.set_coefficient({1, 0}, 1);
  xy.set_coefficient({0, 1}, 1);
  CHECK(multiply(xy, xy).is_zero());

  // Mixed caps take the minimum.
  CHECK(multiply(linear_1_plus(2, 5, 0), linear_1_plus(2, 3, 1)).cap() == 3);
}

TEST_CASE("multiply matches a naive convolution") {
  MultiSeries a(3, 5);
  a.set_coefficient({0, 0, 0}, Rational(1, 2));
  a.set_coefficient({1, 0, 2}, Rational(-3));
  a.set_coefficient({0, 2, 0}, Rational(7, 5));
  MultiSeries b(3, 5);
  b.set_coefficient({0, 1, 0}, Rational(2));
  b.set_coefficient({2, 0, 0}, Rational(-1, 3));
  b.set_coefficient({1, 1, 1}, Rational(11));

  std::map<std::vector<int>, Rational> expected;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      if (ea.total_degree() + eb.total_degree() > 5) continue;
      expected[(ea + eb).entries()] += ca * cb;
    }
  }
  const MultiSeries product = multiply(a, b);
  std::size_t nonzero = 0;
  for (const auto& [e, c] : expected) {
    if (c == 0) continue;
    ++nonzero;
    CHECK(product.coefficient(Exponents(e)) == c);
  }
  CHECK(product.term_count() == nonzero);
}

TEST_CASE("multiply falls back to the generic path in high dimension") {
  // 22 variables at cap 7 cannot pack into 64 bits (22 * 3 = 66).
  const int d = 22;
  const MultiSeries a = linear_1_plus(d, 7, 0);
  const MultiSeries b = linear_1_plus(d, 7, d - 1);
  const MultiSeries ab = multiply(a, b);
  CHECK(ab.term_count() == 4);
  CHECK(ab.coefficient(Exponents::zeros(d).bumped(0, 1).bumped(d - 1, 1)) == 1);
}

TEST_CASE("truncated") {
  MultiSeries s(2, 4);
  s.set_coefficient({0, 0}, 1);
  s.set_coefficient({2, 2}, 5);
  const MultiSeries t = truncated(s, 2);
  CHECK(t.cap() == 2);
  CHECK(t.term_count() == 1);
  CHECK(t.coefficient({0, 0}) == 1);
}

TEST_CASE("borel transform and its inverse") {
  MultiSeries s(2, 5);
  s.set_coefficient({2, 3}, Rational(7));
  s.set_coefficient({1, 0}, Rational(-4, 9));
  const MultiSeries b = borel(s);
  CHECK(b.coefficient({2, 3}) == Rational(7) / Rational(2 * 6));
  CHECK(b.coefficient({1, 0}) == Rational(-4, 9));
  CHECK(inverse_borel(b) == s);
  CHECK(borel(inverse_borel(s)) == s);
}

TEST_CASE("partial_derivative") {
  MultiSeries s(2, 3);         // x^2 y + 2 y
  s.set_coefficient({2, 1}, 1);
  s.set_coefficient({0, 1}, 2);

  const MultiSeries dx = partial_derivative(s, 1);
  CHECK(dx.cap() == 2);
  CHECK(dx.coefficient({1, 1}) == 2);
  CHECK(dx.term_count() == 1);

  const MultiSeries dy = partial_derivative(s, 2);
  CHECK(dy.coefficient({2, 0}) == 1);
  CHECK(dy.coefficient({0, 0}) == 2);

  CHECK_THROWS_AS(partial_derivative(s, 0), std::invalid_argument);
  CHECK_THROWS_AS(partial_derivative(s, 3), std::invalid_argument);

  // Mixed partials commute.
  MultiSeries f(2, 6);
  f.set_coefficient({3, 2}, Rational(5, 7));
  f.set_coefficient({1, 4}, Rational(-2));
  f.set_coefficient({2, 2}, Rational(9));
  CHECK(partial_derivative(partial_derivative(f, 1), 2) ==
        partial_derivative(partial_derivative(f, 2), 1));
}

TEST_CASE("evaluate") {
  MultiSeries s(2, 3);  // 1 + 2xy + x^2
  s.set_coefficient({0, 0}, 1);
  s.set_coefficient({1, 1}, 2);
  s.set_coefficient({2, 0}, 1);

  CHECK(evaluate(s, {2.0, 3.0}) == doctest::Approx(1 + 12 + 4).epsilon(1e-15));
  CHECK(evaluate_exact(s, {Rational(1, 2), Rational(1, 3)}) ==
        Rational(1) + Rational(2) * Rational(1, 6) + Rational(1, 4));
  CHECK_THROWS_AS(evaluate(s, {1.0}), std::invalid_argument);

  const series::Evaluation ev = evaluate_with_tail(s, {1.0, 1.0});
  CHECK(ev.value == doctest::Approx(4.0));
  CHECK(ev.terms_used == 3);
  CHECK(ev.top_band_magnitude == doctest::Approx(0.0));  // no degree-3 terms
}

TEST_CASE("word-count generating function expansion") {
  const MultiSeries f = series::expand_smirnov_gf(2, 4);
  CHECK(f.coefficient({0, 0}) == 1);
  CHECK(f.coefficient({1, 0}) == 1);
  CHECK(f.coefficient({0, 1}) == 1);
  CHECK(f.coefficient({1, 1}) == 2);  // "12" and "21"
  CHECK(f.coefficient({2, 0}) == 0);  // "11" forbidden
  CHECK(f.coefficient({2, 1}) == 1);  // "121"
  CHECK(f.coefficient({2, 2}) == 2);  // "1212", "2121"
  CHECK(f.coefficient({3, 1}) == 0);

  const MultiSeries f1 = series::expand_smirnov_gf(1, 3);
  CHECK(f1.coefficient({0}) == 1);
  CHECK(f1.coefficient({1}) == 1);
  CHECK(f1.coefficient({2}) == 0);
  CHECK(f1.coefficient({3}) == 0);

  CHECK(series::expand_smirnov_gf(3, 3).coefficient({1, 1, 1}) == 6);
  CHECK(series::expand_smirnov_gf(2, 0) == MultiSeries::constant(2, 0, 1));

  // Band sums count all words of each length: d*(d-1)^(n-1).
  const MultiSeries f3 = series::expand_smirnov_gf(3, 5);
  std::map<int, Rational> band;
  for (const auto& [e, c] : f3.terms()) band[e.total_degree()] += c;
  CHECK(band[0] == 1);
  for (int n = 1; n <= 5; ++n) {
    Rational expected = 3;
    for (int k = 1; k < n; ++k) expected *= 2;
    CHECK(band[n] == expected);
  }
}

TEST_CASE("expansion honors the size limit from the environment") {
  unsetenv("CONTPATH_MAX_SERIES_TERMS");
  REQUIRE(series::max_series_terms() == 2000000);
  setenv("CONTPATH_MAX_SERIES_TERMS", "10", 1);
  CHECK(series::max_series_terms() == 10);
  CHECK_THROWS_AS(series::expand_smirnov_gf(3, 12), ResourceLimitError);
  unsetenv("CONTPATH_MAX_SERIES_TERMS");
  CHECK_NOTHROW(series::expand_smirnov_gf(3, 12));
}

TEST_CASE("JSON serialization is canonical and bit-exact") {
  MultiSeries s(2, 3);
  s.set_coefficient({1, 1}, Rational(-2, 3));
  s.set_coefficient({0, 1}, 1);
  const std::string expected =
      R"({"d":2,"cap":3,"terms":[{"exp":[0,1],"coef":"1"},{"exp":[1,1],"coef":"-2/3"}]})";
  CHECK(series::to_json(s) == expected);
  CHECK(series::from_json(expected) == s);
  CHECK(series::to_json(series::from_json(expected)) == expected);

  const MultiSeries empty(1, 0);
  CHECK(series::to_json(empty) == R"({"d":1,"cap":0,"terms":[]})");
  CHECK(series::from_json(series::to_json(empty)) == empty);

  // Round-trip of a computed series.
  const MultiSeries f = series::expand_smirnov_gf(3, 6);
  CHECK(series::from_json(series::to_json(f)) == f);
}

TEST_CASE("JSON parsing normalizes and validates") {
  // Terms out of order are re-sorted; explicit zeros are dropped.
  const MultiSeries s = series::from_json(
      R"({"d":2,"cap":3,"terms":[{"exp":[1,1],"coef":"4/2"},{"exp":[0,0],"coef":"1"},{"exp":[1,0],"coef":"0"}]})");
  CHECK(s.term_count() == 2);
  CHECK(s.coefficient({1, 1}) == 2);
  CHECK(series::to_json(s) ==
        R"({"d":2,"cap":3,"terms":[{"exp":[0,0],"coef":"1"},{"exp":[1,1],"coef":"2"}]})");

  CHECK_THROWS_AS(series::from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(series::from_json(R"({"d":2,"cap":3})"), std::invalid_argument);
  CHECK_THROWS_AS(series::from_json(R"({"d":2,"cap":3,"terms":[{"exp":[1],"coef":"1"}]})"),
                  std::invalid_argument);  // exponent arity
  CHECK_THROWS_AS(series::from_json(R"({"d":1,"cap":3,"terms":[{"exp":[1],"coef":1}]})"),
                  std::invalid_argument);  // coef must be a string
  CHECK_THROWS_AS(
      series::from_json(
          R"({"d":1,"cap":3,"terms":[{"exp":[1],"coef":"1"},{"exp":[1],"coef":"2"}]})"),
      std::invalid_argument);  // duplicate exponent
  CHECK_THROWS_AS(series::from_json(R"({"d":1,"cap":2,"terms":[{"exp":[3],"coef":"1"}]})"),
                  std::invalid_argument);  // degree beyond cap
}

}  // TEST_SUITE
