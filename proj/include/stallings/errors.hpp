#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stallings {

/// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word text or malformed serialized document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A letter index exceeds the alphabet rank, or a rank is out of range.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Two values over different alphabets were combined.
class AlphabetMismatchError : public Error {
 public:
  using Error::Error;
};

/// A deserialized graph violates the core-graph invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Quotient enumeration hit the configured state cap.
class EnumerationLimitError : public Error {
 public:
  EnumerationLimitError(std::size_t visited, std::size_t cap)
      : Error("quotient enumeration exceeded cap of " + std::to_string(cap) +
              " states (visited " + std::to_string(visited) + ")"),
        visited_(visited),
        cap_(cap) {}

  std::size_t visited() const { return visited_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t visited_;
  std::size_t cap_;
};

/// A structural guarantee failed at runtime. Indicates a bug in this
/// library, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace stallings
