#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "laakso/rational.hpp"

namespace laakso {

// The periodic defining sequence {j_i}. Only one period is stored; the entry
// at 1-based index i is entries[(i-1) mod N].
class JSequence {
 public:
  JSequence(std::vector<int> entries, int period);

  int period() const noexcept { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const noexcept { return entries_; }

  // j_i for i >= 1.
  int j(int i) const;

  // Geometric mean of one period.
  double r() const noexcept { return r_; }

  // Product of one period, R = d_N = r^N.
  const BigInt& period_product() const noexcept { return period_product_; }

  bool is_constant() const noexcept;

  // d_n as an exact integer (no overflow possible).
  BigInt d(int n) const;

  // "2,3"
  std::string to_string() const;

  friend bool operator==(const JSequence&, const JSequence&) = default;

 private:
  std::vector<int> entries_;
  double r_ = 0.0;
  BigInt period_product_;
};

JSequence make_sequence(std::vector<int> entries, int period);

// Parses "2,3" (period = list length).
JSequence parse_sequence(const std::string& text);

// d_n in 64-bit arithmetic; throws OverflowError instead of wrapping.
std::int64_t checked_d(const JSequence& seq, int n);

struct LevelData {
  int n = 0;
  std::int64_t d = 1;
  std::vector<Rational> wormholes;      // L_n, increasing
  std::vector<Rational> new_wormholes;  // B_n = L_n \ L_{n-1}, increasing
};

// Refuses to materialize more than max_points wormhole coordinates.
LevelData level_data(const JSequence& seq, int n, std::int64_t max_points = 1 << 24);

// Smallest i with x in L_i (x strictly inside (0,1) with denominator dividing d_n);
// returns -1 when x is not a wormhole of level <= max_level.
int wormhole_level(const JSequence& seq, const Rational& x, int max_level);

struct Dimensions {
  double hausdorff = 0.0;
  double spectral = 0.0;
  double walk = 2.0;
};

// Hausdorff dimension 1 + log r / log 2, spectral dimension equal to it and
// walk dimension 2.
Dimensions dimensions(const JSequence& seq);

}  // namespace laakso
