#pragma once

#include <stdexcept>
#include <string>

namespace sadkit {

// Base class for every error the toolkit raises on bad input or bad state.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally broken input file (truncated header, empty data chunk, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Well-formed input using a feature the toolkit does not handle.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Text that cannot be tokenized into the expected fields.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input that parses but violates a documented invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Configuration key/value outside its documented range.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Raised when the adaptive threshold cannot produce usable GMM training
// partitions; callers fall back to the threshold-only decision.
class DegeneratePartitionError : public Error {
 public:
  using Error::Error;
};

}  // namespace sadkit
