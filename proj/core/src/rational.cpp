#include "laakso/rational.hpp"

#include <cctype>
#include <cmath>

#include "laakso/errors.hpp"

namespace laakso {

std::string to_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view original) {
  if (digits.empty()) {
    throw ValidationError("malformed number '" + std::string(original) + "'");
  }
  BigInt out = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw ValidationError("malformed number '" + std::string(original) + "'");
    }
    out = out * 10 + (c - '0');
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational out;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt p = parse_integer(text.substr(0, slash), original);
    const BigInt q = parse_integer(text.substr(slash + 1), original);
    if (q == 0) {
      throw ValidationError("zero denominator in '" + std::string(original) + "'");
    }
    out = Rational(p, q);
  } else {
    int exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      const BigInt magnitude = parse_integer(exp_text, original);
      if (magnitude > 4000) {
        throw ValidationError("exponent out of range in '" + std::string(original) + "'");
      }
      exponent = static_cast<int>(magnitude) * (exp_negative ? -1 : 1);
      text = text.substr(0, e);
    }
    std::string digits;
    int frac_digits = 0;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
      frac_digits = static_cast<int>(text.size() - dot - 1);
      if (digits.empty()) {
        throw ValidationError("malformed number '" + std::string(original) + "'");
      }
    } else {
      digits = std::string(text);
    }
    out = Rational(parse_integer(digits, original)) * pow(Rational(10), exponent - frac_digits);
  }
  return negative ? Rational(-out) : out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

double to_double(const BigInt& value) { return value.convert_to<double>(); }

bool is_integer(const Rational& value) { return denominator(value) == 1; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) {
      throw ValidationError("zero raised to a negative power");
    }
    return pow(Rational(1) / base, -exponent);
  }
  const BigInt p = boost::multiprecision::pow(numerator(base), static_cast<unsigned>(exponent));
  const BigInt q = boost::multiprecision::pow(denominator(base), static_cast<unsigned>(exponent));
  return Rational(p, q);
}

BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

Rational from_double(double value) {
  if (!std::isfinite(value)) {
    throw ValidationError("non-finite value cannot be made exact");
  }
  int exp = 0;
  const double mantissa = std::frexp(value, &exp);
  // mantissa * 2^53 is an exact integer for doubles
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  return Rational(scaled) * pow(Rational(2), exp - 53);
}

}  // namespace laakso
