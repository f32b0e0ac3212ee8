#pragma once

#include <stdexcept>
#include <string>

namespace ncs {

// Bad input: malformed data or a violated precondition.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation that could not be carried out (singular system, divergence, ...).
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ncs
