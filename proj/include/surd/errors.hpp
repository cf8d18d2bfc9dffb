#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematically invalid input: zero denominator, non-positive radicand,
// division by zero, composite where a prime is required.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Even root of a negative real quantity.
class BranchError : public Error {
 public:
  using Error::Error;
};

// A configured bound was exceeded: field dimension, factoring size,
// refinement precision cap, or search-space ceiling.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Operation applied to a record in the wrong verification state.
class StateError : public Error {
 public:
  using Error::Error;
};

// An expression contains an unresolvable root below the outermost node.
class NotFlattenableError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace surd
