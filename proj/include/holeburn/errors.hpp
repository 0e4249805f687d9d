#pragma once

#include <stdexcept>
#include <string>

namespace holeburn {

/// Parameter outside its admissible range (bad p, negative M, vacuum
/// filtration of the vacuum, unsupported witness order, ...).
class invalid_parameter : public std::runtime_error {
 public:
  explicit invalid_parameter(const std::string& what) : std::runtime_error(what) {}
};

/// A series or truncation procedure failed to converge, or an internal
/// numerical consistency check tripped.
class convergence_failure : public std::runtime_error {
 public:
  explicit convergence_failure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace holeburn
