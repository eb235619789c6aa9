#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "onestep/rational.hpp"

using namespace onestep;

TEST_CASE("decimal literals parse to exact rationals") {
  CHECK(rational_from_decimal("2") == Rational(2));
  CHECK(rational_from_decimal("2.0") == Rational(2));
  CHECK(rational_from_decimal("0.1") == Rational(1, 10));
  CHECK(rational_from_decimal("-0.25") == Rational(-1, 4));
  CHECK(rational_from_decimal("2.5e-3") == Rational(1, 400));
  CHECK(rational_from_decimal("1e3") == Rational(1000));
  CHECK(rational_from_decimal("+12.50") == Rational(25, 2));
  CHECK(rational_from_decimal(".5") == Rational(1, 2));
  CHECK(rational_from_decimal("5.") == Rational(5));
}

TEST_CASE("malformed decimals are rejected") {
  CHECK_THROWS_AS(rational_from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_decimal("."), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_decimal("1e"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_decimal("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_decimal("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_decimal("1 "), std::invalid_argument);
}

TEST_CASE("fraction rendering is lowest-terms p/q") {
  CHECK(to_string(Rational(1, 10)) == "1/10");
  CHECK(to_string(Rational(2, 4)) == "1/2");
  CHECK(to_string(Rational(-3, 9)) == "-1/3");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("decimal rendering round-trips terminating fractions") {
  CHECK(to_decimal_string(Rational(1, 10)) == "0.1");
  CHECK(to_decimal_string(Rational(25, 2)) == "12.5");
  CHECK(to_decimal_string(Rational(-1, 4)) == "-0.25");
  CHECK(to_decimal_string(Rational(3)) == "3");
  CHECK(to_decimal_string(Rational(1, 400)) == "0.0025");
  CHECK_THROWS_AS(to_decimal_string(Rational(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(to_decimal_string(Rational(1, 7)), std::invalid_argument);

  for (int num = -40; num <= 40; ++num) {
    for (const int den : {1, 2, 4, 5, 8, 10, 16, 20, 25, 32, 40}) {
      const Rational value(num, den);
      CHECK(rational_from_decimal(to_decimal_string(value)) == value);
    }
  }
}

TEST_CASE("p/q literals parse") {
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("-3/4") == Rational(-3, 4));
  CHECK(rational_from_string("0.1") == Rational(1, 10));
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  // 256! has 507 decimal digits; the generator equivalence check at cap 256
  // multiplies numbers this large.
  CHECK(factorial(256).str().size() == 507);
}

TEST_CASE("falling factorial counts arrangements") {
  CHECK(falling_factorial(Integer(5), 0) == 1);
  CHECK(falling_factorial(Integer(5), 1) == 5);
  CHECK(falling_factorial(Integer(5), 2) == 20);
  CHECK(falling_factorial(Integer(5), 5) == 120);
  CHECK(falling_factorial(Integer(4), 5) == 0);
  CHECK(falling_factorial(Integer(0), 1) == 0);
  CHECK(falling_factorial(Integer(0), 0) == 1);

  // n! / (n-k)! oracle on the whole small domain.
  for (std::uint64_t n = 0; n <= 12; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      CHECK(falling_factorial(Integer(n), k) == factorial(n) / factorial(n - k));
    }
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(52, 5) == 2598960);
  // Pascal rule over a block.
  for (std::uint64_t n = 1; n <= 20; ++n) {
    for (std::uint64_t k = 1; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("to_double") {
  CHECK(to_double(Rational(1, 2)) == 0.5);
  CHECK(to_double(Rational(-1, 4)) == -0.25);
}
