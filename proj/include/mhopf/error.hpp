#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mhopf {

// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed forest or matrix text. `position` is a 0-based byte offset
// (forests) or line number (matrices).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A decoration name that is not in the registry, or a registry that breaks
// the X/Omega disjointness rules.
class RegistryError : public Error {
 public:
  using Error::Error;
};

// A structurally invalid forest or matrix (X-decorated internal vertex,
// non-representable matrix, index out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace mhopf
