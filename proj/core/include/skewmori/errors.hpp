#pragma once

#include <stdexcept>
#include <string>

namespace skewmori {

// Operand shapes disagree (vector lengths, matrix sizes, lattice ranks).
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// A parameter lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace skewmori
