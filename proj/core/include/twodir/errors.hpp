#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace twodir {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unreadable mask files, schema violations, bad expressions.
/// The CLI maps these to exit code 2.
class InputError : public Error {
public:
  using Error::Error;
};

/// The mathematics refused: missing eigenvalue, singular moment system, etc.
/// The CLI maps these to exit code 1.
class DomainError : public Error {
public:
  using Error::Error;
};

class ParseError : public InputError {
public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

class EvalError : public InputError {
public:
  using InputError::InputError;
};

/// Schema or dimension problem in a mask file; the message names the offending key.
class MaskError : public InputError {
public:
  using InputError::InputError;
};

/// Base for failures of targeted eigenvector extraction. Carries the singular
/// values of A - lambda*I (descending) and the threshold they were tested against.
class SpectralError : public DomainError {
public:
  SpectralError(const std::string& what, double target, std::vector<double> singular_values,
                double threshold)
      : DomainError(what),
        target_(target),
        singular_values_(std::move(singular_values)),
        threshold_(threshold) {}

  double target() const noexcept { return target_; }
  const std::vector<double>& singular_values() const noexcept { return singular_values_; }
  double threshold() const noexcept { return threshold_; }

private:
  double target_;
  std::vector<double> singular_values_;
  double threshold_;
};

class NotAnEigenvalue : public SpectralError {
public:
  using SpectralError::SpectralError;
};

class NotSimple : public SpectralError {
public:
  using SpectralError::SpectralError;
};

class NormalizationDegenerate : public DomainError {
public:
  using DomainError::DomainError;
};

class SingularMomentSystem : public DomainError {
public:
  SingularMomentSystem(const std::string& what, int order) : DomainError(what), order_(order) {}
  int order() const noexcept { return order_; }

private:
  int order_;
};

class MissingWavelet : public DomainError {
public:
  using DomainError::DomainError;
};

}  // namespace twodir
