#pragma once

#include <stdexcept>
#include <string>

namespace flutes {

// Argument outside the mathematical domain of a formula (nonpositive length, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Ideal configuration that cannot be normalized or measured.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or out-of-range input data. `field` is the dotted path of the
// offending config entry when one is known.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(const std::string& field, const std::string& message)
      : std::invalid_argument(field.empty() ? message : field + ": " + message),
        field_(field) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace flutes
