#ifndef FRACOPS_ERRORS_HPP
#define FRACOPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracops {

/// Base class for all numerical failures raised by this library.
class NumericsError : public std::runtime_error {
 public:
  explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

class PoleError : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

class DomainError : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

class ParameterPole : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

class KernelPole : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

class NoConvergence : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

class NonFinite : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

class StripViolation : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

class InsufficientSmoothness : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

class ValidityViolation : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

class BadSupport : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

class NonMonotoneWeight : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fracops

#endif  // FRACOPS_ERRORS_HPP
