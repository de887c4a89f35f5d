#pragma once

#include <stdexcept>
#include <string>

namespace ssbjt {

// Base class for all library errors. Configuration-stage failures
// (MissingFieldError, InvalidValueError) map to CLI exit code 2,
// everything else to 3.
class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingFieldError : public SimError {
 public:
  explicit MissingFieldError(const std::string& field)
      : SimError("missing required field: " + field), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class InvalidValueError : public SimError {
 public:
  InvalidValueError(const std::string& name, const std::string& reason)
      : SimError("invalid value for '" + name + "': " + reason), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class OutOfRangeError : public SimError {
 public:
  using SimError::SimError;
};

class LocationOutsideAreaError : public SimError {
 public:
  using SimError::SimError;
};

class DimensionMismatchError : public SimError {
 public:
  using SimError::SimError;
};

class ResourceLimitError : public SimError {
 public:
  using SimError::SimError;
};

class GridMismatchError : public SimError {
 public:
  using SimError::SimError;
};

class AllZeroTermsError : public SimError {
 public:
  using SimError::SimError;
};

class EmptyInputError : public SimError {
 public:
  using SimError::SimError;
};

class IoError : public SimError {
 public:
  using SimError::SimError;
};

}  // namespace ssbjt
