#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccas {

/// Malformed edge-list input. `line()` is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The input could not be read at all.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A count left the 128-bit unsigned range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// The exhaustive CDS oracle was asked to search a graph that is too large.
class OracleSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace ccas
