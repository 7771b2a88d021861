#pragma once

#include <complex>

#include "laakso/pole.hpp"
#include "laakso/rational.hpp"

namespace laakso {

// Exact Bernoulli number B_n with B_1 = -1/2; n <= 240.
const Rational& bernoulli(int n);

// B_n(x) = sum_k C(n,k) B_k x^(n-k).
Rational bernoulli_polynomial(int n, const Rational& x);

// zeta_H(-n, a) = -B_{n+1}(a)/(n+1), exact, for n >= 0 and a > 0.
Rational hurwitz_neg_int(int n, const Rational& a);

// Hurwitz zeta for real a > 0 by Euler-Maclaurin summation; analytic in s != 1.
ComplexValue hurwitz_zeta(ComplexValue s, double a);

// riemann_zeta(s) = hurwitz_zeta(s, 1).
ComplexValue riemann_zeta(ComplexValue s);

}  // namespace laakso
