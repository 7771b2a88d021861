#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laakso/family.hpp"
#include "laakso/plates.hpp"
#include "laakso/sequence.hpp"

namespace laakso {

struct SpectrumEntry {
  Rational frequency;  // lambda = (frequency * pi)^2
  double lambda = 0.0;
  std::int64_t multiplicity = 0;

  // "(p/q*pi)^2"
  std::string symbolic() const;
};

struct EnumeratedSpectrum {
  std::vector<SpectrumEntry> entries;  // strictly increasing
  double cutoff = 0.0;
  Operator op = Operator::free;
  std::string parameters;
  std::vector<EigenFamily> families;

  std::int64_t total_multiplicity() const;
};

// True when (pi * frequency)^2 <= cutoff; shared by every enumerator so that
// tails and enumerations partition the spectrum identically.
bool within_cutoff(const Rational& frequency, double cutoff);

// First k >= family.k_min whose eigenvalue at level n exceeds the cutoff.
std::int64_t first_k_above(const EigenFamily& family, int n, double cutoff);

// Lowest admissible eigenvalue of a level (infinity when the level has no modes).
double level_floor(const EigenFamily& family, int n);

// Enumerates every family below the cutoff, merging equal exact frequencies.
EnumeratedSpectrum enumerate(std::vector<EigenFamily> families, double cutoff, Operator op,
                             std::string parameters);

EnumeratedSpectrum free_spectrum(const JSequence& seq, double cutoff);
EnumeratedSpectrum finite_spectrum(const JSequence& seq, int m, double cutoff);
// Levels above max_level are dropped when it is given (used by the graph oracle on F_n).
EnumeratedSpectrum plated_spectrum(const PlateConfig& cfg, double cutoff,
                                   std::optional<int> max_level = std::nullopt);

// N(lambda); refuses to answer above the enumeration cutoff.
std::int64_t counting_function(const EnumeratedSpectrum& spec, double lambda);

// Header "lambda,multiplicity,symbolic".
std::string to_csv(const EnumeratedSpectrum& spec);

}  // namespace laakso
