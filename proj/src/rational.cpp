#include "rscore/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace rscore {

using boost::multiprecision::cpp_int;

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string format_fixed(const Rational& value, int fractional_digits) {
  cpp_int scale = 1;
  for (int i = 0; i < fractional_digits; ++i) scale *= 10;

  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  const cpp_int magnitude = negative ? cpp_int(-num) : num;
  // round(|num| * scale / den), halves away from zero
  const cpp_int scaled = (magnitude * scale * 2 + den) / (den * 2);

  std::string digits = scaled.str();
  if (fractional_digits > 0) {
    if (digits.size() <= static_cast<std::size_t>(fractional_digits)) {
      digits.insert(0, fractional_digits + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - fractional_digits, 1, '.');
  }
  if (negative && scaled != 0) digits.insert(0, 1, '-');
  return digits;
}

std::string format_exact(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

}  // namespace rscore
