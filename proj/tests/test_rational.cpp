#include <gtest/gtest.h>

#include "laakso/errors.hpp"
#include "laakso/format.hpp"
#include "laakso/rational.hpp"

namespace laakso {
namespace {

TEST(Rational, ParsesFractionsAndDecimalsExactly) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("4"), Rational(4));
  EXPECT_EQ(parse_rational("0.3"), Rational(3, 10));
  EXPECT_EQ(parse_rational("-1.25e-2"), Rational(-1, 80));
  EXPECT_EQ(parse_rational("2.5E1"), Rational(25));
}

TEST(Rational, RejectsMalformedInput) {
  EXPECT_THROW(parse_rational("abc"), ValidationError);
  EXPECT_THROW(parse_rational("1/0"), ValidationError);
  EXPECT_THROW(parse_rational(""), ValidationError);
  EXPECT_THROW(parse_rational("1.2.3"), ValidationError);
}

TEST(Rational, PrintsReducedFractionWithPositiveDenominator) {
  EXPECT_EQ(to_string(Rational(6) / Rational(-4)), "-3/2");
  EXPECT_EQ(to_string(Rational(7)), "7/1");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
}

TEST(Rational, PowersAndConversions) {
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(pow(BigInt(10), 20u), BigInt("100000000000000000000"));
  EXPECT_TRUE(is_integer(Rational(8, 4)));
  EXPECT_FALSE(is_integer(Rational(3, 4)));
  EXPECT_DOUBLE_EQ(to_double(Rational(1, 3)), 1.0 / 3.0);
  EXPECT_EQ(from_double(0.375), Rational(3, 8));
  EXPECT_NE(from_double(0.1), Rational(1, 10));
  EXPECT_EQ(to_double(from_double(0.1)), 0.1);
  EXPECT_THROW(pow(Rational(0), -1), ValidationError);
}

TEST(Format, ShortestRoundTripDoubles) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-2.5), "-2.5");
  EXPECT_EQ(format_double(0.0), "0");
  EXPECT_EQ(format_double(1e-20), "1e-20");
}

TEST(Format, ComplexRoundTrip) {
  EXPECT_EQ(format_complex({1.5, -2.0}), "1.5-2i");
  EXPECT_EQ(format_complex({0.5, 14.0}), "0.5+14i");
  EXPECT_EQ(parse_complex("2+1i"), std::complex<double>(2, 1));
  EXPECT_EQ(parse_complex("-0.5-14.25i"), std::complex<double>(-0.5, -14.25));
  EXPECT_EQ(parse_complex("3i"), std::complex<double>(0, 3));
  EXPECT_EQ(parse_complex("-i"), std::complex<double>(0, -1));
  EXPECT_EQ(parse_complex("1e-3+2e+1i"), std::complex<double>(1e-3, 20));
  EXPECT_EQ(parse_complex("7"), std::complex<double>(7, 0));
  EXPECT_THROW(parse_complex("2+xi"), ValidationError);
  EXPECT_THROW(parse_complex(""), ValidationError);
}

}  // namespace
}  // namespace laakso
