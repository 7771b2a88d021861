#include "laakso/plates.hpp"

#include "laakso/errors.hpp"

namespace laakso {

std::array<Rational, 2> PlateConfig::plate_positions() const {
  const Rational half_gap(Z, 2 * j);
  return {Rational(1, 2) - half_gap, Rational(1, 2) + half_gap};
}

std::string PlateConfig::to_string() const {
  return "j=" + std::to_string(j) + ",Z=" + std::to_string(Z) + ",X0=" + laakso::to_string(X0);
}

PlateConfig plate_config(int j, int Z) { return plate_config(j, Z, Rational(Z, 2 * j)); }

PlateConfig plate_config(int j, int Z, const Rational& X0) {
  if (j < 3) {
    throw ValidationError("plated configurations need j >= 3 (got " + std::to_string(j) + ")");
  }
  if (Z < 1 || Z > j - 2) {
    throw ValidationError("Z must satisfy 1 <= Z <= j-2 = " + std::to_string(j - 2) + " (got " +
                          std::to_string(Z) + ")");
  }
  if (X0 <= 0 || X0 >= Rational(1, 2)) {
    throw ValidationError("X0 must lie strictly inside (0, 1/2) (got " + laakso::to_string(X0) +
                          ")");
  }
  return PlateConfig{j, Z, X0};
}

}  // namespace laakso
