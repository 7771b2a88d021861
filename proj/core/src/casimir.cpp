#include "laakso/casimir.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "laakso/errors.hpp"
#include "laakso/format.hpp"
#include "laakso/parallel.hpp"

namespace laakso {

std::string to_string(CasimirKind kind) {
  switch (kind) {
    case CasimirKind::energy_1d:
      return "energy-1d";
    case CasimirKind::force_1d:
      return "force-1d";
    case CasimirKind::energy_3d:
      return "energy-3d";
    case CasimirKind::pressure_3d:
      return "pressure-3d";
  }
  return "energy-1d";
}

std::string to_string(CasimirMethod method) {
  switch (method) {
    case CasimirMethod::closed_form:
      return "closed-form";
    case CasimirMethod::regularized_sum:
      return "regularized-sum";
    case CasimirMethod::numeric_derivative:
      return "numeric-derivative";
  }
  return "closed-form";
}

namespace {

constexpr double pi = std::numbers::pi;

std::string plate_params(int j, int Z, const Rational& X0) {
  return "j=" + std::to_string(j) + ",Z=" + std::to_string(Z) + ",X0=" + to_string(X0);
}

}  // namespace

PlatedEnergyCoefficients plated_energy_coefficients(int j, int Z) {
  PlatedEnergyCoefficients out;
  for (const auto& f : family_stream(PlatedSource{plate_config(j, Z), std::nullopt})) {
    const auto part = regularized_family_sum(f, Rational(1, 2));
    if (f.side == Side::inner) {
      out.alpha += *part.unit_coefficient / 2;
    } else {
      out.beta += *part.unit_coefficient;
    }
  }
  return out;
}

CasimirResult energy_1d(const PlateConfig& cfg) {
  const auto valid = plate_config(cfg.j, cfg.Z, cfg.X0);
  const auto sum = regularized_sum(family_stream(PlatedSource{valid, std::nullopt}), Rational(1, 2));
  CasimirResult r;
  r.kind = CasimirKind::energy_1d;
  r.method = CasimirMethod::regularized_sum;
  r.exact = *sum.coefficient;
  r.unit = "pi";
  r.value = sum.value.real();
  r.parameters = plate_params(valid.j, valid.Z, valid.X0);
  r.terms = sum.terms;
  return r;
}

ForceTerms force_terms(int j, int Z, const Rational& X0) {
  const auto valid = plate_config(j, Z, X0);
  const auto c = plated_energy_coefficients(j, Z);
  const Rational outer = 1 - 2 * valid.X0;
  return ForceTerms{pi * to_double(-c.alpha / (valid.X0 * valid.X0)),
                    pi * to_double(2 * c.beta / (outer * outer))};
}

Rational printed_force_1d(int j_in, int Z, const Rational& X) {
  const Rational j(j_in);
  const Rational c(Z);
  const Rational o = (1 - 2 * X) * (1 - 2 * X);
  const Rational x = X * X;
  const Rational s = 1 - c / j;
  return (j - c) / (24 * (1 - 2 * j) * o) - (j - c - 2) * (j - c) / (12 * o) -
         j * j * j * (j - 2) * s * s / (12 * (1 - 2 * j * j) * o) -
         s * j * j * (j - c) / (24 * o * (1 - 2 * j * j)) + s * j * j / (24 * o * (1 - 2 * j)) +
         c * c / (48 * x) + c * c * (j - 2) / (24 * x * (1 - 2 * j * j)) +
         j * c * c / (96 * (1 - 2 * j * j) * x) + 1 / (6 * o) -
         j * j * s / (24 * (1 - 2 * j) * o) + j * c / (96 * x * (1 - 2 * j)) -
         j * j * s / (12 * o * (1 - 2 * j)) + 1 / (48 * x) + c * j / (48 * x * (1 - 2 * j));
}

CasimirResult force_1d_closed(int j, int Z, const Rational& X0) {
  const auto valid = plate_config(j, Z, X0);
  const auto c = plated_energy_coefficients(j, Z);
  const Rational outer = 1 - 2 * valid.X0;
  CasimirResult r;
  r.kind = CasimirKind::force_1d;
  r.method = CasimirMethod::closed_form;
  r.exact = -c.alpha / (valid.X0 * valid.X0) + 2 * c.beta / (outer * outer);
  r.unit = "pi";
  r.value = pi * to_double(*r.exact);
  r.parameters = plate_params(j, Z, valid.X0);
  r.terms = {{"plate", pi * to_double(-c.alpha / (valid.X0 * valid.X0))},
             {"boundary", pi * to_double(2 * c.beta / (outer * outer))}};

  const Rational printed = printed_force_1d(j, Z, valid.X0);
  std::ostringstream note;
  note << "printed display evaluated with its Z+1 read as the cell count; it is stated only up "
          "to proportionality, ratio printed/canonical = "
       << format_double(to_double(printed) / r.value);
  auto audit = make_audit("force_1d printed display", r.parameters, r.value, to_double(printed),
                          1e-9, note.str());
  audit.printed_exact = printed;
  r.audits.push_back(std::move(audit));
  return r;
}

CasimirResult force_1d_closed(int j, int Z, double X0) {
  return force_1d_closed(j, Z, from_double(X0));
}

CasimirResult force_1d_numeric(int j, int Z, double X0, double h) {
  plate_config(j, Z);
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ValidationError("derivative step must be positive");
  }
  if (!(X0 - h > 0.0) || !(X0 + h < 0.5)) {
    throw ValidationError("[X0-h, X0+h] must lie inside (0, 1/2)");
  }
  if (h / 2 < 1e-13 * X0) {
    throw NumericalGuardError("derivative step " + format_double(h) + " underflows at X0 = " +
                              format_double(X0));
  }
  auto energy = [&](double x) { return *energy_1d(plate_config(j, Z, from_double(x))).exact; };
  auto central = [&](double step) {
    const Rational lo = from_double(X0 - step);
    const Rational hi = from_double(X0 + step);
    return (energy(X0 + step) - energy(X0 - step)) / (hi - lo);
  };
  const Rational coarse = central(h);
  const Rational fine = central(h / 2);
  CasimirResult r;
  r.kind = CasimirKind::force_1d;
  r.method = CasimirMethod::numeric_derivative;
  r.exact = (4 * fine - coarse) / 3;
  r.unit = "pi";
  r.value = pi * to_double(*r.exact);
  r.parameters = "j=" + std::to_string(j) + ",Z=" + std::to_string(Z) + ",X0=" +
                 format_double(X0) + ",h=" + format_double(h);
  return r;
}

std::vector<ForceSweepRow> sweep_force(int j, int Z_lo, int Z_hi) {
  if (Z_hi < Z_lo) return {};
  plate_config(j, Z_lo);
  plate_config(j, Z_hi);
  std::vector<ForceSweepRow> rows(static_cast<std::size_t>(Z_hi - Z_lo + 1));
  parallel_for(rows.size(), [&](std::size_t i) {
    const int Z = Z_lo + static_cast<int>(i);
    const Rational X0(Z, 2 * j);
    const auto f = force_1d_closed(j, Z, X0);
    rows[i] = ForceSweepRow{Z, X0, f.value, ForceTerms{f.terms[0].value.real(), f.terms[1].value.real()}};
  });
  return rows;
}

std::string sweep_to_csv(const std::vector<ForceSweepRow>& rows) {
  std::ostringstream os;
  os << "Z,X0,force\n";
  for (const auto& r : rows) os << r.Z << ',' << to_string(r.X0) << ',' << format_double(r.force) << '\n';
  return os.str();
}

Rational constant_pressure_quotient(const BigInt& j_in) {
  if (j_in < 2) throw ValidationError("j must be >= 2");
  const Rational j(j_in);
  const Rational j3 = j * j * j;
  const Rational j4 = j3 * j;
  const Rational j6 = j3 * j3;
  const Rational j7 = j6 * j;
  return (8 - 16 * j3 - 8 * j4 + 15 * j6 + j7) / (8 - 16 * j3 - 16 * j4 + 32 * j7);
}

namespace {

void check_separation(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw ValidationError("separation d must be positive");
}

}  // namespace

CasimirResult pressure_3d_constant(const BigInt& j, double d) {
  check_separation(d);
  CasimirResult r;
  r.kind = CasimirKind::pressure_3d;
  r.method = CasimirMethod::closed_form;
  r.exact = constant_pressure_quotient(j);
  r.unit = "pi^2/(240 d^4)";
  r.value = to_double(*r.exact) * pi * pi / (240.0 * std::pow(d, 4));
  r.parameters = "j=" + j.str() + ",d=" + format_double(d);
  return r;
}

CasimirResult energy_3d_periodic(const JSequence& seq, double d) {
  check_separation(d);
  const auto sum =
      regularized_sum(family_stream(FreeSource{seq, std::nullopt, true}), Rational(3, 2));
  CasimirResult r;
  r.kind = CasimirKind::energy_3d;
  r.method = CasimirMethod::regularized_sum;
  r.exact = *sum.coefficient;
  r.unit = "pi^3/d^3";
  r.value = to_double(*r.exact) * pi * pi * pi / (d * d * d);
  r.parameters = "j=" + seq.to_string() + ",d=" + format_double(d);
  r.terms = sum.terms;
  return r;
}

Rational printed_periodic_pressure(const JSequence& seq) {
  const int N = seq.period();
  const Rational R(seq.period_product());
  const Rational two_N = pow(Rational(2), N);
  Rational s3 = 0;
  Rational s4 = 0;
  Rational third = 0;
  Rational prod3 = 1;
  Rational prod4 = 1;
  for (int i = 1; i <= N; ++i) {
    const Rational j(seq.j(i));
    prod3 *= 2 * j * j * j;
    prod4 *= 2 * j * j * j * j;
    s3 += prod3;
    s4 += 2 * j * j * j * j;
    third += prod4 * pow(j, N - i) / (pow(j, N) - pow(R, 4) * two_N);
  }
  return 1 + Rational(15, 32) * s3 / (1 - pow(R, 3) * two_N) +
         Rational(1, 2) * s4 / (1 - pow(R, 4) * two_N) - Rational(15, 32) * third;
}

CasimirResult pressure_3d_periodic(const JSequence& seq, double d) {
  const auto energy = energy_3d_periodic(seq, d);
  CasimirResult r;
  r.kind = CasimirKind::pressure_3d;
  r.method = CasimirMethod::regularized_sum;
  // E/Area = energy/(6 pi) = C pi^2/(6 d^3); -dE/dd = C pi^2/(2 d^4) = 120 C * pi^2/(240 d^4).
  r.exact = 120 * *energy.exact;
  r.unit = "pi^2/(240 d^4)";
  r.value = to_double(*r.exact) * pi * pi / (240.0 * std::pow(d, 4));
  r.parameters = energy.parameters;
  r.terms = energy.terms;
  r.audits.push_back(make_exact_audit("pressure_3d_periodic printed bracket", r.parameters,
                                      *r.exact, printed_periodic_pressure(seq),
                                      "both in multiples of pi^2/(240 d^4)"));
  return r;
}

AuditRecord cross_proposition_report(int j) {
  const auto periodic = pressure_3d_periodic(make_sequence({j}, 1), 1.0);
  const Rational constant = constant_pressure_quotient(BigInt(j));
  std::string note = periodic.exact == constant
                         ? "periodic (N=1) and constant-j pressures agree exactly"
                         : "periodic (N=1) and constant-j pressures differ by " +
                               to_string(*periodic.exact - constant);
  return make_exact_audit("cross-proposition pressure", "j=" + std::to_string(j), *periodic.exact,
                          constant, note + " (multiples of pi^2/(240 d^4))");
}

}  // namespace laakso
