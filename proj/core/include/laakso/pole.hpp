#pragma once

#include <complex>
#include <string>

#include "laakso/errors.hpp"

namespace laakso {

using ComplexValue = std::complex<double>;

struct PoleDescriptor {
  ComplexValue location;
  int order = 1;
  std::string tower;  // generating factor, e.g. "1-2*2^(1-2s)" or "zeta_R(2s)"
  int k = 0;          // index within the tower
  double slope = 0.0;  // measured growth exponent of |zeta| near the candidate
  bool confirmed = false;
};

// Evaluation too close to a pole; carries the offending location.
class PoleError : public NumericalGuardError {
 public:
  explicit PoleError(PoleDescriptor pole);

  const PoleDescriptor& pole() const noexcept { return pole_; }

 private:
  PoleDescriptor pole_;
};

}  // namespace laakso
