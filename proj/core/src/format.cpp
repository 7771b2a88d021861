#include "laakso/format.hpp"

#include <charconv>
#include <cmath>

#include "laakso/errors.hpp"

namespace laakso {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_complex(std::complex<double> value) {
  std::string im = format_double(std::abs(value.imag()));
  return format_double(value.real()) + (std::signbit(value.imag()) ? "-" : "+") + im + "i";
}

namespace {

double parse_real(const std::string& text, const std::string& original) {
  double out = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc() || res.ptr != end) {
    throw ValidationError("cannot parse complex number '" + original + "'");
  }
  return out;
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
  if (text.empty()) throw ValidationError("empty complex number");
  if (text.back() != 'i') return {parse_real(text, text), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not part of an exponent or the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_of = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_real(part, text);
  };
  if (split == std::string::npos) return {0.0, imag_of(body)};
  return {parse_real(body.substr(0, split), text), imag_of(body.substr(split))};
}

}  // namespace laakso
