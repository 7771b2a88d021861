#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "laakso/pole.hpp"
#include "laakso/sequence.hpp"

namespace laakso {

struct Region {
  double re_lo = 0.0;
  double re_hi = 0.0;
  double im_lo = 0.0;
  double im_hi = 0.0;

  bool contains(ComplexValue s) const {
    return s.real() >= re_lo && s.real() <= re_hi && s.imag() >= im_lo && s.imag() <= im_hi;
  }
};

using ComplexFunction = std::function<ComplexValue(ComplexValue)>;

// Zeros of the geometric denominators 1 - 2^N R^(p-2s) of the level sums
// (one tower per distinct d-power p) and the pole of zeta_R(2s) at s = 1/2.
std::vector<PoleDescriptor> pole_candidates(const JSequence& seq, const Region& region);

// Growth exponent of mean |f| on circles of radius 1e-3 and 1e-4 about s0:
// about 1 for a simple pole, about 0 where f stays bounded.
double pole_slope(const ComplexFunction& f, ComplexValue s0, double r1 = 1e-3, double r2 = 1e-4);

// Fills slope/order/confirmed; a candidate is confirmed when the slope exceeds 0.5.
PoleDescriptor classify_candidate(const ComplexFunction& f, PoleDescriptor candidate);

// Candidates in region for zeta_m (m given) or zeta_L (m empty), each classified.
std::vector<PoleDescriptor> scan_poles(const JSequence& seq, std::optional<int> m,
                                       const Region& region);

// Only the confirmed entries of scan_poles.
std::vector<PoleDescriptor> find_poles(const JSequence& seq, std::optional<int> m,
                                       const Region& region);

// (1 - q^m)/(1 - q) with q = 2 j^(1-2s): a single truncated geometric factor.
ComplexValue lone_factor(int j, int m, ComplexValue s);

// Header "re,im,order,tower,k".
std::string poles_to_csv(const std::vector<PoleDescriptor>& poles);

}  // namespace laakso
