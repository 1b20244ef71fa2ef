#pragma once

#include <stdexcept>
#include <string>

namespace excloak {

/// Thrown when a computation fails for numerical reasons (resonance,
/// ill-conditioning, non-convergence) as opposed to invalid input.
/// Invalid input is reported with std::domain_error.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace excloak
