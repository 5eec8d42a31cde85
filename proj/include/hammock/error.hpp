#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hammock {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input line. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A dataset file contained no ratings.
class EmptyDatasetError : public Error {
 public:
  using Error::Error;
};

/// Unknown person, movie or vertex identifier.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// A quantity is undefined for the given input (empty mode set, single-vertex
/// component, zero count in a log fit, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The generating-function length formula is singular (z2 <= z1).
class ModelDegenerateError : public Error {
 public:
  using Error::Error;
};

/// Degree distribution violates normalisation or arc balance.
class InvalidDistributionError : public Error {
 public:
  using Error::Error;
};

/// Two graphs that should describe the same dataset do not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameters (jump width, wreath degree, ranges, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hammock
