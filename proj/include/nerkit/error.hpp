#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nerkit {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data (CoNLL files, corpora that violate preconditions,
// model/vocab files that fail to load, mismatched inputs).
class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error(msg) {}
};

// CoNLL parse failure; carries the 1-based line number.
class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : DataError("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Bad configuration: unknown keys, out-of-range values, missing files
// named by a config or flag. Maps to the usage exit code in the CLI.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace nerkit
