#include "onestep/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace onestep {

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
}

}  // namespace

Rational rational_from_decimal(std::string_view text) {
  if (text.empty()) bad_number(text);
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }

  Integer mantissa = 0;
  std::int64_t frac_digits = 0;
  bool any_digits = false;
  for (; pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; ++pos) {
    mantissa = mantissa * 10 + (text[pos] - '0');
    any_digits = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    for (; pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; ++pos) {
      mantissa = mantissa * 10 + (text[pos] - '0');
      ++frac_digits;
      any_digits = true;
    }
  }
  if (!any_digits) bad_number(text);

  std::int64_t exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    if (pos == text.size()) bad_number(text);
    for (; pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; ++pos) {
      exponent = exponent * 10 + (text[pos] - '0');
      if (exponent > 100000) bad_number(text);
    }
    if (exp_negative) exponent = -exponent;
  }
  if (pos != text.size()) bad_number(text);

  std::int64_t net = exponent - frac_digits;
  Rational value(mantissa);
  if (net > 0) {
    value *= Rational(boost::multiprecision::pow(Integer(10), static_cast<unsigned>(net)));
  } else if (net < 0) {
    value /= Rational(boost::multiprecision::pow(Integer(10), static_cast<unsigned>(-net)));
  }
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& value) {
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  bool negative = num < 0;
  if (negative) num = -num;

  // Strip factors of 2 and 5; whatever remains blocks a finite expansion.
  std::uint64_t twos = 0;
  std::uint64_t fives = 0;
  Integer rest = den;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) {
    throw std::invalid_argument("rational " + to_string(value) +
                                " has no finite decimal expansion");
  }
  const std::uint64_t digits = twos > fives ? twos : fives;
  // Scale numerator so the denominator becomes 10^digits.
  if (twos < digits) num *= boost::multiprecision::pow(Integer(2), static_cast<unsigned>(digits - twos));
  if (fives < digits) num *= boost::multiprecision::pow(Integer(5), static_cast<unsigned>(digits - fives));

  std::string body = num.str();
  std::string out = negative ? "-" : "";
  if (digits == 0) {
    out += body;
    return out;
  }
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  out += body;
  return out;
}

Rational rational_from_string(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return rational_from_decimal(text);
  const Rational num = rational_from_decimal(text.substr(0, slash));
  const Rational den = rational_from_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Integer factorial(std::uint64_t n) {
  Integer out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

Integer falling_factorial(const Integer& x, std::uint64_t k) {
  Integer out = 1;
  for (std::uint64_t j = 0; j < k; ++j) {
    out *= x - j;
    if (out == 0) return out;
  }
  return out;
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer out = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    out *= n - k + j;
    out /= j;
  }
  return out;
}

}  // namespace onestep
