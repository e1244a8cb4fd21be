#pragma once

#include <stdexcept>
#include <string>

namespace hypgreen {

// Argument outside the domain of an operation.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Coincident or near-coincident points where a kernel is singular.
class SingularityError : public DomainError {
public:
  explicit SingularityError(const std::string& what) : DomainError("singularity: " + what) {}
};

// Series, recurrence or quadrature failed to reach its target, or a value overflowed.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hypgreen
