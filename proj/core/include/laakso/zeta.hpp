#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laakso/family.hpp"
#include "laakso/pole.hpp"
#include "laakso/spectrum.hpp"

namespace laakso {

enum class SumMethod { direct_convergent, zeta_regularized };

std::string to_string(SumMethod method);

struct FamilyContribution {
  std::string label;
  ComplexValue value;
};

struct RegularizedSum {
  ComplexValue value;
  SumMethod method = SumMethod::direct_convergent;
  std::vector<FamilyContribution> terms;
  // Certified bound on what the evaluation left out (direct sums only).
  double tail_bracket = 0.0;
  // Regularized sums: value = coefficient * pi^(2p), and
  // coefficient = unit_coefficient / length^(2p).
  std::optional<Rational> coefficient;
  std::optional<Rational> unit_coefficient;
  Side side = Side::none;
};

// zeta_R(2s)/pi^(2s), the Dirichlet interval.
ComplexValue zeta_interval(ComplexValue s);

// Closed form of sum over families of mult * lambda^(-s): each k-sum is a
// Hurwitz zeta and each infinite level sum is geometric over one period.
ComplexValue zeta_families(const std::vector<EigenFamily>& families, ComplexValue s);

// Contribution of one family.
ComplexValue zeta_family(const EigenFamily& family, ComplexValue s);

ComplexValue zeta_laakso_closed(const JSequence& seq, ComplexValue s);
ComplexValue zeta_finite(const JSequence& seq, int m, ComplexValue s);
ComplexValue zeta_finite(int j, int m, ComplexValue s);
ComplexValue zeta_plated(const PlateConfig& cfg, ComplexValue s);

// Explicit sum over the enumerated eigenvalues plus the remainder of every
// family beyond the cutoff (shifted Hurwitz tails per level, levels summed
// one at a time). Throws CertificationError when the level remainder cannot
// be bounded by tail_bound.
RegularizedSum zeta_direct(const EnumeratedSpectrum& spec, ComplexValue s,
                           double tail_bound = 1e-8);

// sum_k mult * lambda(k)^power for power in {1/2, 3/2, ...}, continued by
// zeta_H(-2p, a) in k and by exact geometric sums in n.
RegularizedSum regularized_family_sum(const EigenFamily& family, const Rational& power);

// Sum of regularized_family_sum over families sharing one length.
RegularizedSum regularized_sum(const std::vector<EigenFamily>& families, const Rational& power);

// Formulas as printed for j = 2 and for the truncated operator; audit only.
ComplexValue printed_zeta_j2(ComplexValue s);
ComplexValue printed_zeta_finite(int j, int m, ComplexValue s);

}  // namespace laakso
