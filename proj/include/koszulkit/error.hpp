#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace koszulkit {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed literal; `position` is a byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A computation that should agree with a theorem did not.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

// Operation not available on the selected backend.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

class ResolutionBoundExceeded : public Error {
 public:
  ResolutionBoundExceeded(int degree, int bound)
      : Error("homological degree " + std::to_string(degree) + " exceeds resolution bound " +
              std::to_string(bound)),
        degree_(degree),
        bound_(bound) {}
  int degree() const { return degree_; }
  int bound() const { return bound_; }

 private:
  int degree_;
  int bound_;
};

}  // namespace koszulkit
