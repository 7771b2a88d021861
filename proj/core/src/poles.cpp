#include "laakso/poles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "laakso/family.hpp"
#include "laakso/format.hpp"
#include "laakso/parallel.hpp"
#include "laakso/zeta.hpp"

namespace laakso {

std::vector<PoleDescriptor> pole_candidates(const JSequence& seq, const Region& region) {
  std::set<int> powers;
  for (const auto& f : family_stream(FreeSource{seq, std::nullopt, false})) {
    if (f.single_level()) continue;
    for (const auto& t : f.terms) {
      if (t.coef == 0) continue;
      if (t.uses_j_minus_2 &&
          std::all_of(seq.entries().begin(), seq.entries().end(), [](int e) { return e == 2; })) {
        continue;
      }
      powers.insert(t.d_power);
    }
  }
  const int N = seq.period();
  double log_R = 0.0;
  for (int e : seq.entries()) log_R += std::log(static_cast<double>(e));
  const double spacing = std::numbers::pi / log_R;

  std::vector<PoleDescriptor> out;
  for (int p : powers) {
    const double re = (N * std::numbers::ln2 + p * log_R) / (2.0 * log_R);
    if (re < region.re_lo || re > region.re_hi) continue;
    const int k_lo = static_cast<int>(std::ceil(region.im_lo / spacing - 1e-9));
    const int k_hi = static_cast<int>(std::floor(region.im_hi / spacing + 1e-9));
    for (int k = k_lo; k <= k_hi; ++k) {
      const std::string two = N == 1 ? "2" : "2^" + std::to_string(N);
      const std::string exponent = p == 0 ? "-2s" : std::to_string(p) + "-2s";
      out.push_back(PoleDescriptor{ComplexValue(re, k * spacing), 1,
                                   "1-" + two + "*" + seq.period_product().str() + "^(" +
                                       exponent + ")",
                                   k, 0.0, false});
    }
  }
  const ComplexValue half(0.5, 0.0);
  if (region.contains(half)) out.push_back(PoleDescriptor{half, 1, "zeta_R(2s)", 0, 0.0, false});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  // The zeta_R(2s) pole can coincide with the k = 0 member of a tower.
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) {
                          return std::abs(a.location - b.location) < 1e-12;
                        }),
            out.end());
  return out;
}

double pole_slope(const ComplexFunction& f, ComplexValue s0, double r1, double r2) {
  auto mean_abs = [&](double r) {
    constexpr int samples = 8;
    double total = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double theta = 2.0 * std::numbers::pi * (i + 0.37) / samples;
      total += std::abs(f(s0 + std::polar(r, theta)));
    }
    return total / samples;
  };
  return std::log(mean_abs(r2) / mean_abs(r1)) / std::log(r1 / r2);
}

PoleDescriptor classify_candidate(const ComplexFunction& f, PoleDescriptor candidate) {
  candidate.slope = pole_slope(f, candidate.location);
  candidate.confirmed = candidate.slope > 0.5;
  candidate.order = candidate.confirmed ? std::max(1, static_cast<int>(std::lround(candidate.slope)))
                                        : 0;
  return candidate;
}

std::vector<PoleDescriptor> scan_poles(const JSequence& seq, std::optional<int> m,
                                       const Region& region) {
  if (!(region.re_lo <= region.re_hi) || !(region.im_lo <= region.im_hi) ||
      !std::isfinite(region.re_lo + region.re_hi + region.im_lo + region.im_hi)) {
    throw ValidationError("pole search region must be a bounded rectangle");
  }
  const auto families = family_stream(FreeSource{seq, m, false});
  const ComplexFunction zeta = [&families](ComplexValue s) { return zeta_families(families, s); };
  auto candidates = pole_candidates(seq, region);
  parallel_for(candidates.size(), [&](std::size_t i) {
    candidates[i] = classify_candidate(zeta, candidates[i]);
  });
  return candidates;
}

std::vector<PoleDescriptor> find_poles(const JSequence& seq, std::optional<int> m,
                                       const Region& region) {
  auto all = scan_poles(seq, m, region);
  std::vector<PoleDescriptor> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out),
               [](const auto& p) { return p.confirmed; });
  return out;
}

ComplexValue lone_factor(int j, int m, ComplexValue s) {
  const ComplexValue q = 2.0 * std::exp((1.0 - 2.0 * s) * std::log(static_cast<double>(j)));
  return (1.0 - std::pow(q, m)) / (1.0 - q);
}

std::string poles_to_csv(const std::vector<PoleDescriptor>& poles) {
  std::ostringstream os;
  os << "re,im,order,tower,k\n";
  for (const auto& p : poles) {
    os << format_double(p.location.real()) << ',' << format_double(p.location.imag()) << ','
       << p.order << ',' << p.tower << ',' << p.k << '\n';
  }
  return os.str();
}

}  // namespace laakso
