#include "laakso/spectrum.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "laakso/errors.hpp"
#include "laakso/format.hpp"

namespace laakso {

std::string SpectrumEntry::symbolic() const { return "(" + to_string(frequency) + "*pi)^2"; }

std::int64_t EnumeratedSpectrum::total_multiplicity() const {
  std::int64_t total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

bool within_cutoff(const Rational& frequency, double cutoff) {
  const double w = std::numbers::pi * to_double(frequency);
  return w * w <= cutoff;
}

std::int64_t first_k_above(const EigenFamily& family, int n, double cutoff) {
  const Rational scale = family.scale(n);
  // Start near the analytic answer, then settle the boundary with the exact predicate.
  const double guess = std::sqrt(std::max(cutoff, 0.0)) / (std::numbers::pi * to_double(scale)) -
                       to_double(family.offset);
  std::int64_t k = std::max<std::int64_t>(family.k_min, static_cast<std::int64_t>(guess) - 1);
  while (k > family.k_min && !within_cutoff(scale * (Rational(k - 1) + family.offset), cutoff)) {
    --k;
  }
  while (within_cutoff(scale * (Rational(k) + family.offset), cutoff)) ++k;
  return k;
}

double level_floor(const EigenFamily& family, int n) {
  const double w = std::numbers::pi * to_double(family.scale(n)) *
                   to_double(Rational(family.k_min) + family.offset);
  return w * w;
}

EnumeratedSpectrum enumerate(std::vector<EigenFamily> families, double cutoff, Operator op,
                             std::string parameters) {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
    throw ValidationError("spectral cutoff must be a positive finite number");
  }
  std::map<Rational, BigInt> merged;
  for (const auto& f : families) {
    for (int n = f.n_min; !f.n_max || n <= *f.n_max; ++n) {
      // Scales grow with n, so the first level whose floor passes the cutoff ends the family.
      if (!within_cutoff(f.frequency(n, f.k_min), cutoff)) break;
      const BigInt mult = f.multiplicity(n);
      if (mult == 0) continue;
      const std::int64_t k_end = first_k_above(f, n, cutoff);
      for (std::int64_t k = f.k_min; k < k_end; ++k) {
        merged[f.scale(n) * (Rational(k) + f.offset)] += mult;
      }
    }
  }
  EnumeratedSpectrum out;
  out.cutoff = cutoff;
  out.op = op;
  out.parameters = std::move(parameters);
  out.families = std::move(families);
  for (const auto& [freq, mult] : merged) {
    if (mult > std::numeric_limits<std::int64_t>::max()) {
      throw OverflowError("multiplicity at (" + to_string(freq) + "*pi)^2 exceeds 64 bits");
    }
    const double w = std::numbers::pi * to_double(freq);
    out.entries.push_back(SpectrumEntry{freq, w * w, static_cast<std::int64_t>(mult)});
  }
  return out;
}

EnumeratedSpectrum free_spectrum(const JSequence& seq, double cutoff) {
  return enumerate(family_stream(FreeSource{seq, std::nullopt, false}), cutoff, Operator::free,
                   "j=" + seq.to_string());
}

EnumeratedSpectrum finite_spectrum(const JSequence& seq, int m, double cutoff) {
  return enumerate(family_stream(FreeSource{seq, m, false}), cutoff, Operator::finite,
                   "j=" + seq.to_string() + ",m=" + std::to_string(m));
}

EnumeratedSpectrum plated_spectrum(const PlateConfig& cfg, double cutoff,
                                   std::optional<int> max_level) {
  std::string params = cfg.to_string();
  if (max_level) params += ",m=" + std::to_string(*max_level);
  return enumerate(family_stream(PlatedSource{cfg, max_level}), cutoff, Operator::plated,
                   std::move(params));
}

std::int64_t counting_function(const EnumeratedSpectrum& spec, double lambda) {
  if (lambda > spec.cutoff) {
    throw ValidationError("N(" + format_double(lambda) + ") requested above the enumeration cutoff " +
                          format_double(spec.cutoff));
  }
  std::int64_t total = 0;
  for (const auto& e : spec.entries) {
    if (e.lambda > lambda) break;
    total += e.multiplicity;
  }
  return total;
}

std::string to_csv(const EnumeratedSpectrum& spec) {
  std::ostringstream os;
  os << "lambda,multiplicity,symbolic\n";
  for (const auto& e : spec.entries) {
    os << format_double(e.lambda) << ',' << e.multiplicity << ',' << e.symbolic() << '\n';
  }
  return os.str();
}

}  // namespace laakso
