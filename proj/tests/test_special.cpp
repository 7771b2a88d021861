#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "laakso/pole.hpp"
#include "laakso/special.hpp"
#include "test_support.hpp"

namespace laakso {
namespace {

using C = std::complex<double>;

C pair_of(const nlohmann::json& v) { return {v[0].get<double>(), v[1].get<double>()}; }

TEST(Special, BernoulliNumbers) {
  EXPECT_EQ(bernoulli(0), Rational(1));
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(3), Rational(0));
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
  EXPECT_EQ(bernoulli(20), Rational(-174611, 330));
  EXPECT_NO_THROW(bernoulli(240));
  EXPECT_ANY_THROW(bernoulli(241));
}

TEST(Special, ExactValuesAtNegativeIntegers) {
  EXPECT_EQ(hurwitz_neg_int(1, Rational(1)), Rational(-1, 12));
  EXPECT_EQ(hurwitz_neg_int(3, Rational(1)), Rational(1, 120));
  EXPECT_EQ(hurwitz_neg_int(1, Rational(1, 2)), Rational(1, 24));
  EXPECT_EQ(hurwitz_neg_int(3, Rational(1, 2)), Rational(-7, 960));
  EXPECT_EQ(hurwitz_neg_int(0, Rational(1, 3)), Rational(1, 6));
  EXPECT_EQ(bernoulli_polynomial(2, Rational(1, 2)), Rational(-1, 12));
}

TEST(Special, FloatingValuesAtNegativeIntegers) {
  EXPECT_NEAR(riemann_zeta(-1.0).real(), -1.0 / 12.0, 1e-12);
  EXPECT_NEAR(riemann_zeta(-3.0).real(), 1.0 / 120.0, 1e-12);
  EXPECT_NEAR(hurwitz_zeta(-1.0, 0.5).real(), 1.0 / 24.0, 1e-12);
  EXPECT_NEAR(hurwitz_zeta(-3.0, 0.5).real(), -7.0 / 960.0, 1e-12);
  EXPECT_NEAR(riemann_zeta(0.0).real(), -0.5, 1e-14);
  EXPECT_NEAR(riemann_zeta(2.0).real(), std::numbers::pi * std::numbers::pi / 6.0, 1e-14);
}

TEST(Special, FirstNontrivialZero) {
  EXPECT_LE(std::abs(riemann_zeta(C(0.5, 14.134725141))), 1e-8);
  const double ref = test::oracle_values()["special"]["zeta_R(0.5+14.134725141i)_abs"];
  EXPECT_NEAR(std::abs(riemann_zeta(C(0.5, 14.134725141))), ref, 1e-12);
}

TEST(Special, ComplexValuesAgainstReference) {
  const auto& sp = test::oracle_values()["special"];
  EXPECT_LT(test::rel_err(riemann_zeta(C(2, 3)), pair_of(sp["zeta_R(2+3i)"])), 1e-12);
  EXPECT_LT(test::rel_err(riemann_zeta(C(-2.5, 1)), pair_of(sp["zeta_R(-2.5+1i)"])), 1e-11);
  EXPECT_LT(test::rel_err(riemann_zeta(C(-40, 0.5)), pair_of(sp["zeta_R(-40+0.5i)"])), 1e-10);
  EXPECT_LT(std::abs(hurwitz_zeta(2.5, 0.3).real() / sp["zeta_H(2.5,0.3)"].get<double>() - 1.0), 1e-13);
  EXPECT_LT(std::abs(hurwitz_zeta(-1.5, 0.25).real() / sp["zeta_H(-1.5,0.25)"].get<double>() - 1.0), 1e-11);
  EXPECT_LT(test::rel_err(hurwitz_zeta(C(3, 4), 0.75), pair_of(sp["zeta_H(3+4i,0.75)"])), 1e-12);
  EXPECT_LT(test::rel_err(hurwitz_zeta(C(0.5, 20), 1.5), pair_of(sp["zeta_H(0.5+20i,1.5)"])), 1e-10);
}

TEST(Special, FunctionalEquation) {
  for (double s : {2.0, 3.0, 4.0, 2.5, 0.3}) {
    const double lhs = riemann_zeta(1.0 - s).real();
    const double rhs = 2.0 * std::pow(2.0 * std::numbers::pi, -s) * std::cos(std::numbers::pi * s / 2.0) *
                       std::tgamma(s) * riemann_zeta(s).real();
    EXPECT_NEAR(lhs, rhs, 1e-8 * std::max(1.0, std::abs(rhs))) << "s=" << s;
  }
}

TEST(Special, ConjugateSymmetry) {
  const C s(0.7, 8.25);
  EXPECT_LT(std::abs(riemann_zeta(std::conj(s)) - std::conj(riemann_zeta(s))), 1e-14);
  EXPECT_LT(std::abs(hurwitz_zeta(std::conj(s), 0.4) - std::conj(hurwitz_zeta(s, 0.4))), 1e-14);
}

TEST(Special, PoleAtOne) {
  EXPECT_THROW(riemann_zeta(1.0), PoleError);
  try {
    hurwitz_zeta(1.0, 0.5);
    FAIL();
  } catch (const PoleError& e) {
    EXPECT_EQ(e.pole().location, C(1.0, 0.0));
    EXPECT_EQ(e.pole().order, 1);
  }
  EXPECT_NO_THROW(riemann_zeta(C(1.0, 1e-3)));
}

}  // namespace
}  // namespace laakso
