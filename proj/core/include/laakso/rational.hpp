#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace laakso {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with q > 0; integers are written "p/1" so every field parses the same way.
std::string to_string(const Rational& value);

// Accepts "p/q", "p", and plain decimals such as "0.3" or "-1.25e-2" (read exactly).
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);
double to_double(const BigInt& value);

bool is_integer(const Rational& value);

Rational pow(const Rational& base, int exponent);
BigInt pow(const BigInt& base, unsigned exponent);

// Exact binary value of a finite double.
Rational from_double(double value);

}  // namespace laakso
