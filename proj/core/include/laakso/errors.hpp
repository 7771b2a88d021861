#pragma once

#include <stdexcept>
#include <string>

namespace laakso {

// Base of every error raised by the library. The CLI maps the three
// families below onto exit codes 2 (validation), 3 (resource) and
// 4 (numerical guard).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

// Integer products such as d_n that would not fit the fixed-width type.
class OverflowError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

class NumericalGuardError : public Error {
 public:
  using Error::Error;
};

// A geometric level sum whose ratio equals one, i.e. a pole of the
// regularized continuation.
class RegularizationError : public NumericalGuardError {
 public:
  using NumericalGuardError::NumericalGuardError;
};

// zeta_direct could not bound its tail.
class CertificationError : public NumericalGuardError {
 public:
  using NumericalGuardError::NumericalGuardError;
};

// The sparse eigensolver failed; the message carries iteration diagnostics.
class ConvergenceError : public NumericalGuardError {
 public:
  using NumericalGuardError::NumericalGuardError;
};

// A multiplicity rule produced a negative or non-integral count.
class MultiplicityError : public ValidationError {
 public:
  MultiplicityError(const std::string& family, int level, const std::string& value)
      : ValidationError("multiplicity of family " + family + " at level n=" +
                        std::to_string(level) + " is " + value +
                        ", not a nonnegative integer"),
        family_(family),
        level_(level) {}

  const std::string& family() const noexcept { return family_; }
  int level() const noexcept { return level_; }

 private:
  std::string family_;
  int level_;
};

}  // namespace laakso
