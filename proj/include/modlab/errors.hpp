#pragma once

#include <stdexcept>
#include <string>

namespace modlab {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands live on different grids or in the wrong representation.
struct GridMismatchError : Error {
  using Error::Error;
};

// A vector left the numerical domain of an unbounded operator
// (non-finite samples, missing edge decay).
struct DomainError : Error {
  using Error::Error;
};

// A multiplication symbol cannot be resolved on the current grid
// (aliasing guard tripped).
struct ResolutionError : Error {
  using Error::Error;
};

// Invalid experiment configuration.
struct ConfigError : Error {
  using Error::Error;
};

// A model failed an internal consistency requirement (singular Tomita
// operator, non-positive generator on the nontrivial part, invalid
// negative control).
struct ModelError : Error {
  using Error::Error;
};

}  // namespace modlab
