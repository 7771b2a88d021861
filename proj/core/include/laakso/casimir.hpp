#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laakso/audit.hpp"
#include "laakso/plates.hpp"
#include "laakso/sequence.hpp"
#include "laakso/zeta.hpp"

namespace laakso {

enum class CasimirKind { energy_1d, force_1d, energy_3d, pressure_3d };
enum class CasimirMethod { closed_form, regularized_sum, numeric_derivative };

std::string to_string(CasimirKind kind);
std::string to_string(CasimirMethod method);

inline constexpr const char* repulsive_convention = "positive value = repulsive (plates pushed apart)";

struct CasimirResult {
  CasimirKind kind = CasimirKind::energy_1d;
  CasimirMethod method = CasimirMethod::closed_form;
  double value = 0.0;
  // value = exact * unit, where `unit` names the irrational factor.
  std::optional<Rational> exact;
  std::string unit;
  std::string units = "hbar=c=1";
  std::string sign_convention = repulsive_convention;
  std::string parameters;
  std::vector<FamilyContribution> terms;
  std::vector<AuditRecord> audits;
};

// E(X0) = pi * (alpha/X0 + beta/(1-2X0)) for plates of type (j, Z).
struct PlatedEnergyCoefficients {
  Rational alpha;
  Rational beta;
};

PlatedEnergyCoefficients plated_energy_coefficients(int j, int Z);

// zeta_{j,X0,Z}(-1/2), regularized family by family.
CasimirResult energy_1d(const PlateConfig& cfg);

// F = dE/dX0 = A/X0^2 + B/(1-2X0)^2 with A = -pi*alpha, B = 2*pi*beta.
struct ForceTerms {
  double plate = 0.0;     // A/X0^2
  double boundary = 0.0;  // B/(1-2X0)^2
};

ForceTerms force_terms(int j, int Z, const Rational& X0);

// Canonical derivative of the family-derived energy, with the printed
// closed form attached as an audit record.
CasimirResult force_1d_closed(int j, int Z, const Rational& X0);
CasimirResult force_1d_closed(int j, int Z, double X0);

// The printed force display, with the printed "Z+1" read as the cell count Z.
Rational printed_force_1d(int j, int Z, const Rational& X0);

// Central difference of energy_1d with one Richardson step (h and h/2).
CasimirResult force_1d_numeric(int j, int Z, double X0, double h = 1e-5);

struct ForceSweepRow {
  int Z = 0;
  Rational X0;
  double force = 0.0;
  ForceTerms terms;
};

// Nominal X0 = Z/(2j) for Z in [Z_lo, Z_hi]; an empty range yields no rows.
std::vector<ForceSweepRow> sweep_force(int j, int Z_lo, int Z_hi);

// Header "Z,X0,force".
std::string sweep_to_csv(const std::vector<ForceSweepRow>& rows);

// (8 - 16j^3 - 8j^4 + 15j^6 + j^7) / (8 - 16j^3 - 16j^4 + 32j^7)
Rational constant_pressure_quotient(const BigInt& j);

// quotient * pi^2/(240 d^4).
CasimirResult pressure_3d_constant(const BigInt& j, double d);

// Sum of lambda^(3/2) over the spectrum with Dirichlet ends, scaled to
// separation d: exact * pi^3/d^3.
CasimirResult energy_3d_periodic(const JSequence& seq, double d);

// -d/dd of (1/(6 pi)) * energy: exact * pi^2/(240 d^4); the printed bracket
// is attached as an audit record.
CasimirResult pressure_3d_periodic(const JSequence& seq, double d);

// The printed bracket of the periodic pressure (multiple of pi^2/(240 d^4)).
Rational printed_periodic_pressure(const JSequence& seq);

// pressure_3d_periodic for the one-entry sequence (j) against pressure_3d_constant(j).
AuditRecord cross_proposition_report(int j);

}  // namespace laakso
