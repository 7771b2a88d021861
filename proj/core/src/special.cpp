#include "laakso/special.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "laakso/format.hpp"

namespace laakso {

PoleError::PoleError(PoleDescriptor pole)
    : NumericalGuardError("evaluation at s = " + format_complex(pole.location) +
                          " is too close to a pole of " + pole.tower),
      pole_(std::move(pole)) {}

namespace {

constexpr int max_bernoulli = 240;

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = [] {
    std::vector<Rational> b(max_bernoulli + 1);
    b[0] = 1;
    // sum_{k=0}^{n} C(n+1, k) B_k = 0
    for (int n = 1; n <= max_bernoulli; ++n) {
      if (n > 1 && n % 2 == 1) {
        b[static_cast<std::size_t>(n)] = 0;
        continue;
      }
      Rational acc = 0;
      BigInt binom = 1;  // C(n+1, 0)
      for (int k = 0; k < n; ++k) {
        acc += Rational(binom) * b[static_cast<std::size_t>(k)];
        binom = binom * (n + 1 - k) / (k + 1);
      }
      b[static_cast<std::size_t>(n)] = -acc / (n + 1);
    }
    return b;
  }();
  return table;
}

// B_{2j}/(2j)! as long double, j = 1..
const std::vector<long double>& scaled_even_bernoulli() {
  static const std::vector<long double> table = [] {
    std::vector<long double> out(max_bernoulli / 2 + 1, 0.0L);
    BigInt fact = 1;
    for (int n = 1; n <= max_bernoulli; ++n) {
      fact *= n;
      if (n % 2 == 0) {
        const Rational v = bernoulli(n) / Rational(fact);
        out[static_cast<std::size_t>(n / 2)] =
            numerator(v).convert_to<long double>() / denominator(v).convert_to<long double>();
      }
    }
    return out;
  }();
  return table;
}

using cld = std::complex<long double>;

constexpr long double pi_l = 3.141592653589793238462643383279502884L;

// log Gamma(z) for Re z > 0: shift Re z past 20, then the Stirling series.
cld log_gamma(cld z) {
  cld shift = 0;
  while (z.real() < 20.0L) {
    shift += std::log(z);
    z += 1.0L;
  }
  cld out = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2.0L * pi_l);
  const cld z2 = z * z;
  cld zp = z;
  for (int k = 1; k <= 12; ++k) {
    const Rational c = bernoulli(2 * k) / Rational(2 * k * (2 * k - 1));
    out += (numerator(c).convert_to<long double>() / denominator(c).convert_to<long double>()) / zp;
    zp *= z2;
  }
  return out - shift;
}

// Far left of the critical strip the Euler-Maclaurin partial sums cancel
// catastrophically, so use the functional equation with t = 1 - s:
// zeta(s, a) = 2 Gamma(t) (2 pi)^-t sum_n cos(pi t/2 - 2 pi n a) n^-t, 0 < a <= 1.
cld hurwitz_reflected(cld s, long double a) {
  const cld t = 1.0L - s;
  const cld phase = pi_l * t / 2.0L;
  cld sum = 0;
  for (int n = 1; n <= 100000; ++n) {
    const long double nl = n;
    const cld term = std::cos(phase - 2.0L * pi_l * nl * a) * std::exp(-t * std::log(nl));
    sum += term;
    if (std::exp(-t.real() * std::log(nl)) < 1e-21L) break;
  }
  return 2.0L * std::exp(log_gamma(t) - t * std::log(2.0L * pi_l)) * sum;
}

cld hurwitz_euler_maclaurin(cld s, long double a) {
  const long double mod = std::abs(s);
  const int N = std::max(10, static_cast<int>(std::ceil(mod / 2.0L)));

  cld sum = 0;
  for (int k = 0; k < N; ++k) sum += std::exp(-s * std::log(a + k));
  const long double x = a + N;
  const long double logx = std::log(x);
  const cld x_pow = std::exp(-s * logx);  // x^{-s}
  sum += x * x_pow / (s - 1.0L) + 0.5L * x_pow;

  // sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^{-s-2j+1}
  const auto& b = scaled_even_bernoulli();
  cld poch = s;                 // s(s+1)...(s+2j-2)
  cld x_term = x_pow / x;       // x^{-s-2j+1}
  long double prev = INFINITY;
  for (std::size_t j = 1; j < b.size(); ++j) {
    const cld term = b[j] * poch * x_term;
    const long double mag = std::abs(term);
    if (mag > prev) break;  // asymptotic series has started to diverge
    sum += term;
    if (mag <= 1e-21L * std::abs(sum) || mag == 0.0L) break;
    prev = mag;
    const long double m = static_cast<long double>(2 * j - 1);
    poch *= (s + m) * (s + m + 1.0L);
    x_term /= x * x;
  }
  return sum;
}

}  // namespace

const Rational& bernoulli(int n) {
  if (n < 0 || n > max_bernoulli) {
    throw ValidationError("Bernoulli index " + std::to_string(n) + " outside [0, " +
                          std::to_string(max_bernoulli) + "]");
  }
  return bernoulli_table()[static_cast<std::size_t>(n)];
}

Rational bernoulli_polynomial(int n, const Rational& x) {
  Rational out = 0;
  BigInt binom = 1;
  for (int k = 0; k <= n; ++k) {
    out += Rational(binom) * bernoulli(k) * pow(x, n - k);
    binom = binom * (n - k) / (k + 1);
  }
  return out;
}

Rational hurwitz_neg_int(int n, const Rational& a) {
  if (n < 0) throw ValidationError("hurwitz_neg_int needs n >= 0");
  if (a <= 0) throw ValidationError("hurwitz_neg_int needs a > 0");
  return -bernoulli_polynomial(n + 1, a) / (n + 1);
}

ComplexValue hurwitz_zeta(ComplexValue s_in, double a_in) {
  if (!(a_in > 0.0)) throw ValidationError("hurwitz_zeta needs a > 0");
  if (s_in == ComplexValue(1.0, 0.0)) {
    throw PoleError(PoleDescriptor{s_in, 1, "zeta_H(s,a) at s=1", 0, 0.0, true});
  }
  const cld s(s_in.real(), s_in.imag());
  cld out;
  if (s_in.real() < -8.0) {
    // Reduce a into (0, 1] and add back the leading terms.
    long double a = a_in;
    cld head = 0;
    while (a > 1.0L) {
      a -= 1.0L;
      head += std::exp(-s * std::log(a));
    }
    out = hurwitz_reflected(s, a) - head;
  } else {
    out = hurwitz_euler_maclaurin(s, a_in);
  }
  return {static_cast<double>(out.real()), static_cast<double>(out.imag())};
}

ComplexValue riemann_zeta(ComplexValue s) {
  if (s == ComplexValue(1.0, 0.0)) {
    throw PoleError(PoleDescriptor{s, 1, "zeta_R(s) at s=1", 0, 0.0, true});
  }
  return hurwitz_zeta(s, 1.0);
}

}  // namespace laakso
