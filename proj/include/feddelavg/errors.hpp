#pragma once

#include <stdexcept>
#include <string>

namespace feddelavg {

// Invalid user-supplied configuration or dimension mismatch.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A stated invariant (weight normalization, parameter range) was violated.
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

// Divergence or non-finite values during iteration.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file (IDX container, JSON config).
class ParseError : public ConfigError {
 public:
  explicit ParseError(const std::string& msg) : ConfigError(msg) {}
};

}  // namespace feddelavg
