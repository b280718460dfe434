#pragma once

#include <stdexcept>
#include <string>

namespace qsim1d {

/// Argument outside the domain of an operation (bad qubit index, k >= 2^n, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input that cannot be normalized or otherwise carries no information.
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Request exceeds what a dense or exponential-size routine will allocate.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A circuit could not be assembled (e.g. an opaque step has no conjugate).
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Scenario configuration problem. `field()` is the dotted key path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qsim1d
