#include "laakso/zeta.hpp"

#include <cmath>
#include <numbers>

#include "laakso/errors.hpp"
#include "laakso/format.hpp"
#include "laakso/special.hpp"

namespace laakso {

std::string to_string(SumMethod method) {
  return method == SumMethod::direct_convergent ? "direct-convergent" : "zeta-regularized";
}

namespace {

constexpr double ln2 = std::numbers::ln2;
constexpr double pole_guard = 1e-12;

double log_d(const JSequence& seq, int n) {
  double out = 0.0;
  for (int i = 1; i <= n; ++i) out += std::log(static_cast<double>(seq.j(i)));
  return out;
}

double log_abs(const Rational& r) {
  // Rationals here are small apart from d_n, which enters through log_d.
  return std::log(std::abs(to_double(r)));
}

bool term_vanishes(const EigenFamily& f, const MultiplicityTerm& t) {
  if (t.coef == 0) return true;
  if (!t.uses_j_minus_2) return false;
  for (int e : f.seq.entries()) {
    if (e != 2) return false;
  }
  return true;
}

// coef * 2^(n+ts) * d_(n+dt)^p * (j_n-2)^q * scale(n)^(-2s)
ComplexValue term_value(const EigenFamily& f, const MultiplicityTerm& t, int n, ComplexValue s) {
  if (t.coef == 0) return 0.0;
  double log_mag = log_abs(t.coef) + (n + t.two_shift) * ln2;
  if (t.d_power != 0) log_mag += t.d_power * log_d(f.seq, n + t.d_shift);
  if (t.uses_j_minus_2) {
    const int jm2 = f.seq.j(n) - 2;
    if (jm2 == 0) return 0.0;
    log_mag += std::log(static_cast<double>(jm2));
  }
  const double log_scale =
      log_abs(f.scale_coef) + log_d(f.seq, n + f.scale_d_shift) - log_abs(f.length);
  const ComplexValue v = std::exp(ComplexValue(log_mag, 0.0) - 2.0 * s * log_scale);
  return t.coef < 0 ? -v : v;
}

double term_magnitude(const EigenFamily& f, const MultiplicityTerm& t, int n, double sigma) {
  return std::abs(term_value(f, t, n, ComplexValue(sigma, 0.0)));
}

// Ratio of a term's value over one full period of the sequence.
ComplexValue period_ratio(const EigenFamily& f, const MultiplicityTerm& t, ComplexValue s) {
  const int N = f.seq.period();
  const double log_R = log_d(f.seq, N);
  return std::exp(ComplexValue(N * ln2 + t.d_power * log_R, 0.0) - 2.0 * s * log_R);
}

std::string tower_name(const JSequence& seq, int d_power) {
  const int N = seq.period();
  const std::string two = N == 1 ? "2" : "2^" + std::to_string(N);
  const std::string exponent = d_power == 0 ? "-2s" : std::to_string(d_power) + "-2s";
  return "1-" + two + "*" + seq.period_product().str() + "^(" + exponent + ")";
}

PoleDescriptor geometric_pole(const JSequence& seq, int d_power, ComplexValue s) {
  const double log_R = log_d(seq, seq.period());
  const int k = static_cast<int>(std::lround(s.imag() * log_R / std::numbers::pi));
  return PoleDescriptor{s, 1, tower_name(seq, d_power), k, 0.0, true};
}

ComplexValue k_factor(ComplexValue s, const Rational& a) {
  try {
    return std::exp(-2.0 * s * std::log(std::numbers::pi)) * hurwitz_zeta(2.0 * s, to_double(a));
  } catch (const PoleError&) {
    throw PoleError(PoleDescriptor{s, 1, "zeta_R(2s)", 0, 0.0, true});
  }
}

ComplexValue level_sum(const EigenFamily& f, ComplexValue s) {
  ComplexValue total = 0.0;
  if (f.n_max && *f.n_max < f.n_min) return total;
  for (const auto& t : f.terms) {
    if (term_vanishes(f, t)) continue;
    if (f.n_max) {
      for (int n = f.n_min; n <= *f.n_max; ++n) total += term_value(f, t, n, s);
      continue;
    }
    ComplexValue block = 0.0;
    for (int i = 0; i < f.seq.period(); ++i) block += term_value(f, t, f.n_min + i, s);
    const ComplexValue Q = period_ratio(f, t, s);
    if (std::abs(1.0 - Q) < pole_guard) throw PoleError(geometric_pole(f.seq, t.d_power, s));
    total += block / (1.0 - Q);
  }
  return total;
}

bool family_vanishes(const EigenFamily& f) {
  if (f.n_max && *f.n_max < f.n_min) return true;
  for (const auto& t : f.terms) {
    if (!term_vanishes(f, t)) return false;
  }
  return true;
}

}  // namespace

ComplexValue zeta_interval(ComplexValue s) { return k_factor(s, Rational(1)); }

ComplexValue zeta_family(const EigenFamily& family, ComplexValue s) {
  if (family_vanishes(family)) return 0.0;
  const ComplexValue levels = level_sum(family, s);
  return k_factor(s, family.hurwitz_a()) * levels;
}

ComplexValue zeta_families(const std::vector<EigenFamily>& families, ComplexValue s) {
  ComplexValue total = 0.0;
  for (const auto& f : families) total += zeta_family(f, s);
  return total;
}

ComplexValue zeta_laakso_closed(const JSequence& seq, ComplexValue s) {
  return zeta_families(family_stream(FreeSource{seq, std::nullopt, false}), s);
}

ComplexValue zeta_finite(const JSequence& seq, int m, ComplexValue s) {
  if (m < 0) throw ValidationError("level m must be >= 0");
  return zeta_families(family_stream(FreeSource{seq, m, false}), s);
}

ComplexValue zeta_finite(int j, int m, ComplexValue s) {
  return zeta_finite(make_sequence({j}, 1), m, s);
}

ComplexValue zeta_plated(const PlateConfig& cfg, ComplexValue s) {
  return zeta_families(family_stream(PlatedSource{cfg, std::nullopt}), s);
}

RegularizedSum zeta_direct(const EnumeratedSpectrum& spec, ComplexValue s, double tail_bound) {
  if (spec.families.empty()) {
    throw ValidationError("zeta_direct needs a spectrum that records its families");
  }
  if (!(tail_bound > 0.0)) throw ValidationError("tail bound must be positive");
  if (s.real() <= 0.5) {
    throw CertificationError("Re(s) = " + format_double(s.real()) +
                             " does not exceed 1/2; the k-sums diverge and no cutoff can certify "
                             "a direct sum");
  }

  RegularizedSum out;
  out.method = SumMethod::direct_convergent;

  ComplexValue partial = 0.0;
  for (const auto& e : spec.entries) {
    if (e.lambda <= 0.0) continue;
    partial += static_cast<double>(e.multiplicity) * std::exp(-s * std::log(e.lambda));
  }
  out.terms.push_back({"enumerated", partial});
  out.value = partial;

  const double per_family = tail_bound / static_cast<double>(spec.families.size());
  for (const auto& f : spec.families) {
    if (family_vanishes(f)) continue;
    ComplexValue tail = 0.0;
    auto level_value = [&](int n, const Rational& a) {
      ComplexValue v = 0.0;
      for (const auto& t : f.terms) v += term_value(f, t, n, s);
      return v * k_factor(s, a);
    };
    auto shifted_a = [&](int n) {
      const std::int64_t k = first_k_above(f, n, spec.cutoff);
      const Rational a = Rational(k) + f.offset;
      return a == 0 ? Rational(1) : a;
    };

    if (f.n_max) {
      for (int n = f.n_min; n <= *f.n_max; ++n) tail += level_value(n, shifted_a(n));
    } else {
      const ComplexValue k_full = k_factor(s, f.hurwitz_a());
      const int N = f.seq.period();
      bool touched = true;
      int n = f.n_min;
      for (;; ++n) {
        if (touched) touched = within_cutoff(f.frequency(n, f.k_min), spec.cutoff);
        if (!touched && n >= f.n_min + N) {
          double bound = 0.0;
          for (const auto& t : f.terms) {
            if (term_vanishes(f, t)) continue;
            const double q = std::abs(period_ratio(f, t, s));
            if (q >= 1.0) {
              throw CertificationError(
                  "family " + f.label + " level sum does not converge at Re(s) = " +
                  format_double(s.real()) + " (period ratio " + format_double(q) +
                  "); raise Re(s) above the convergence abscissa");
            }
            double block = 0.0;
            for (int i = 0; i < N; ++i) block += term_magnitude(f, t, n + i, s.real());
            bound += block / (1.0 - q);
          }
          bound *= std::abs(k_full);
          if (bound <= per_family) {
            out.tail_bracket += bound;
            break;
          }
        }
        if (n > f.n_min + 20000) {
          throw CertificationError("family " + f.label +
                                   " tail not certified after 20000 levels; tail bound " +
                                   format_double(tail_bound) + " is out of reach at s = " +
                                   format_complex(s));
        }
        tail += touched ? level_value(n, shifted_a(n)) : level_value(n, f.hurwitz_a());
      }
    }
    out.terms.push_back({"tail:" + f.label, tail});
    out.value += tail;
  }
  if (out.tail_bracket > tail_bound) {
    throw CertificationError("certified tail " + format_double(out.tail_bracket) +
                             " exceeds the requested bound " + format_double(tail_bound));
  }
  return out;
}

RegularizedSum regularized_family_sum(const EigenFamily& family, const Rational& power) {
  const Rational two_power = 2 * power;
  if (two_power <= 0 || !is_integer(two_power)) {
    throw ValidationError("regularized sums need a positive half-integer power (got " +
                          to_string(power) + ")");
  }
  const int p2 = static_cast<int>(numerator(two_power));
  const Rational hz = hurwitz_neg_int(p2, family.hurwitz_a());

  auto exact_term = [&](const MultiplicityTerm& t, int n) {
    Rational v = t.coef * pow(Rational(2), n + t.two_shift);
    if (t.d_power != 0) v *= pow(Rational(family.seq.d(n + t.d_shift)), t.d_power);
    if (t.uses_j_minus_2) v *= family.seq.j(n) - 2;
    return v * pow(family.unit_scale(n), p2);
  };

  Rational levels = 0;
  if (!(family.n_max && *family.n_max < family.n_min)) {
    for (const auto& t : family.terms) {
      if (t.coef == 0) continue;
      if (family.n_max) {
        for (int n = family.n_min; n <= *family.n_max; ++n) levels += exact_term(t, n);
        continue;
      }
      Rational block = 0;
      const int N = family.seq.period();
      for (int i = 0; i < N; ++i) block += exact_term(t, family.n_min + i);
      if (block == 0) continue;
      const BigInt R = family.seq.period_product();
      const Rational Q = pow(Rational(2), N) * pow(Rational(R), t.d_power + p2);
      if (Q == 1) {
        throw RegularizationError("family " + family.label + ": geometric ratio " + to_string(Q) +
                                  " equals 1, the level sum has a pole");
      }
      levels += block / (1 - Q);
    }
  }

  RegularizedSum out;
  out.method = SumMethod::zeta_regularized;
  out.side = family.side;
  out.unit_coefficient = hz * levels;
  out.coefficient = *out.unit_coefficient / pow(family.length, p2);
  out.value = to_double(*out.coefficient) * std::pow(std::numbers::pi, p2);
  out.terms.push_back({family.label, out.value});
  return out;
}

RegularizedSum regularized_sum(const std::vector<EigenFamily>& families, const Rational& power) {
  RegularizedSum out;
  out.method = SumMethod::zeta_regularized;
  Rational coefficient = 0;
  Rational unit = 0;
  bool same_length = true;
  for (std::size_t i = 0; i < families.size(); ++i) {
    const auto part = regularized_family_sum(families[i], power);
    coefficient += *part.coefficient;
    unit += *part.unit_coefficient;
    if (families[i].length != families.front().length) same_length = false;
    out.terms.push_back({families[i].label, part.value});
  }
  out.coefficient = coefficient;
  if (same_length) {
    out.unit_coefficient = unit;
    if (!families.empty()) out.side = families.front().side;
  }
  const Rational two_power = 2 * power;
  out.value = to_double(coefficient) *
              std::pow(std::numbers::pi, to_double(two_power));
  return out;
}

namespace {

ComplexValue cpow(double base, ComplexValue e) { return std::exp(e * std::log(base)); }

}  // namespace

ComplexValue printed_zeta_j2(ComplexValue s) {
  const ComplexValue four_s = cpow(4.0, s);
  const ComplexValue bracket =
      4.0 * (cpow(2.0, 2.0 * s - 1.0) + 1.0) / (four_s * (16.0 - 4.0)) +
      6.0 * (cpow(2.0, 2.0 * s - 1.0) - 1.0) / (four_s * (four_s - 2.0)) +
      (cpow(2.0, s + 1.0) - 2.0 + cpow(2.0, 2.0 * s)) / four_s;
  return zeta_interval(s) * bracket;
}

ComplexValue printed_zeta_finite(int j, int m, ComplexValue s) {
  const double jd = j;
  const ComplexValue x = 2.0 * cpow(jd, -2.0 * s);
  const ComplexValue y = 2.0 * cpow(jd, 1.0 - 2.0 * s);
  const ComplexValue j2s = cpow(jd, 2.0 * s);
  const ComplexValue first = (1.0 - std::pow(x, m)) / (j2s * (1.0 - x)) *
                             (cpow(2.0, 1.0 + 2.0 * s) - 3.0 - 2.0 / (1.0 - x));
  const ComplexValue second =
      (1.0 - std::pow(y, m)) / (j2s * (1.0 - y)) *
      (jd + cpow(4.0, 2.0 * s + 2.0) * cpow(jd, 1.0 - 2.0 * s) / (j2s * (1.0 - y)));
  return zeta_interval(s) * (1.0 + first + second);
}

}  // namespace laakso
