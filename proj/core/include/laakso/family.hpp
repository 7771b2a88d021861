#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "laakso/plates.hpp"
#include "laakso/rational.hpp"
#include "laakso/sequence.hpp"

namespace laakso {

enum class Operator { free, finite, plated, dirichlet_ends };

std::string to_string(Operator op);

// Which plate-dependent length divides the frequency scale.
enum class Side { none, inner, outer };

// coef * 2^(n + two_shift) * d_(n + d_shift)^d_power * (j_n - 2)^[uses_j_minus_2]
struct MultiplicityTerm {
  Rational coef;
  int two_shift = 0;
  int d_shift = 0;
  int d_power = 0;
  bool uses_j_minus_2 = false;
};

// One row of a spectrum union: for each admissible level n and k >= k_min the
// eigenvalue (pi * scale(n) * (k + offset))^2 with multiplicity mult(n), where
// scale(n) = scale_coef * d_(n + scale_d_shift) / length.
struct EigenFamily {
  std::string label;
  Operator op = Operator::free;
  JSequence seq = make_sequence({2}, 1);
  int n_min = 0;
  std::optional<int> n_max;  // empty = all levels
  Rational offset;
  int k_min = 0;
  Rational scale_coef{1};
  int scale_d_shift = 0;
  Side side = Side::none;
  Rational length{1};
  std::vector<MultiplicityTerm> terms;

  bool single_level() const { return n_max && *n_max == n_min; }
  bool infinite() const { return !n_max.has_value(); }

  // Exact multiplicity at level n; throws MultiplicityError unless it is a
  // nonnegative integer.
  BigInt multiplicity(int n) const;

  // Exact multiplicity without the integrality check.
  Rational multiplicity_raw(int n) const;

  // scale(n) with and without the plate length.
  Rational scale(int n) const;
  Rational unit_scale(int n) const;

  Rational frequency(int n, int k) const { return scale(n) * (Rational(k) + offset); }

  // Hurwitz parameter of the k-sum; a zero mode at k = 0 is skipped.
  Rational hurwitz_a() const;

  // Human-readable rule, e.g. "2^(n-1)*(d_(n-1)-1)".
  std::string multiplicity_text() const;
  std::string scale_text() const;
};

struct FreeSource {
  JSequence seq;
  std::optional<int> max_level;
  bool dirichlet_ends = false;
};

struct PlatedSource {
  PlateConfig cfg;
  std::optional<int> max_level;
};

using FamilySource = std::variant<FreeSource, PlatedSource>;

// Every family of the requested operator, once each, in listing order.
std::vector<EigenFamily> family_stream(const FamilySource& source);

}  // namespace laakso
