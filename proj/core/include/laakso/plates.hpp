#pragma once

#include <array>
#include <string>

#include "laakso/rational.hpp"

namespace laakso {

// Two conducting plates placed symmetrically about 1/2. Z counts the level-1
// cells strictly between them, so the nominal half-separation is Z/(2j).
struct PlateConfig {
  int j = 0;
  int Z = 0;
  Rational X0;

  // (1 - Z/j)/2 and (1 + Z/j)/2 at the nominal separation.
  std::array<Rational, 2> plate_positions() const;

  // Plates coincide with level-1 wormholes only when j - Z is even.
  bool on_wormholes() const noexcept { return (j - Z) % 2 == 0; }

  bool is_nominal() const { return X0 == Rational(Z, 2 * j); }

  std::string to_string() const;
};

// Nominal configuration X0 = Z/(2j).
PlateConfig plate_config(int j, int Z);

// Displaced configuration; X0 must lie strictly inside (0, 1/2).
PlateConfig plate_config(int j, int Z, const Rational& X0);

}  // namespace laakso
