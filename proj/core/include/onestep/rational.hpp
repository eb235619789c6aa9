#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace onestep {

/// Arbitrary-precision integer and exact rational scalar used wherever a
/// result must be checked for exact (not floating) equality.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses a decimal literal with optional sign and exponent ("2", "-0.1",
/// "2.5e-3") into the exact rational it denotes. Throws std::invalid_argument
/// on malformed input.
Rational rational_from_decimal(std::string_view text);

/// Renders a rational as "p" or "p/q" in lowest terms.
std::string to_string(const Rational& value);

/// Renders a rational back as a decimal literal. Only rationals whose reduced
/// denominator is of the form 2^a 5^b admit a finite decimal expansion;
/// anything else throws std::invalid_argument.
std::string to_decimal_string(const Rational& value);

/// Parses either a decimal literal or a "p/q" fraction.
Rational rational_from_string(std::string_view text);

double to_double(const Rational& value);

Integer factorial(std::uint64_t n);

/// x(x-1)...(x-k+1); equals 0 whenever 0 <= x < k.
Integer falling_factorial(const Integer& x, std::uint64_t k);

Integer binomial(std::uint64_t n, std::uint64_t k);

}  // namespace onestep
