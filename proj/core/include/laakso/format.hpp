#pragma once

#include <complex>
#include <string>

namespace laakso {

// Shortest decimal that reads back as the same double (locale independent).
std::string format_double(double value);

// "a+bi" / "a-bi"
std::string format_complex(std::complex<double> value);

// Parses "a", "bi", "a+bi", "a-bi".
std::complex<double> parse_complex(const std::string& text);

}  // namespace laakso
