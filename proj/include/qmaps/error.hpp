#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmaps {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NotPerfectSquare : public Error {
 public:
  explicit NotPerfectSquare(const std::string& value)
      : Error("not the square of a rational: " + value) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  ArityMismatch(std::size_t expected, std::size_t got)
      : Error("arity mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(got)),
        expected_(expected),
        got_(got) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t got() const noexcept { return got_; }

 private:
  std::size_t expected_;
  std::size_t got_;
};

/// A phase-space coordinate that is zero or negative.
class NonPositiveCoordinate : public Error {
 public:
  NonPositiveCoordinate(std::size_t index, const std::string& value)
      : Error("coordinate " + std::to_string(index + 1) + " is not positive: " + value),
        index_(index) {}

  /// Zero-based position of the offending coordinate.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// The point does not lie on the variety the operation was asked to act on.
class NotOnVariety : public Error {
 public:
  using Error::Error;
};

/// A closed form off C_(1,1) was requested at a step count it does not cover.
class NotOnBaseVariety : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace qmaps
