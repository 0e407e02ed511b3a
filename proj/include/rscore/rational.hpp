#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rscore {

// Exact rational used for every publication count.
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& value);

// Decimal rendering rounded half away from zero, e.g. 7/3 -> "2.333333".
std::string format_fixed(const Rational& value, int fractional_digits);

// Always "p/q" in lowest terms, including integers ("3/1").
std::string format_exact(const Rational& value);

}  // namespace rscore
