#pragma once

#include <stdexcept>
#include <string>

namespace kmtext {

/// Bad caller input: invalid flag values, unknown enum names, failed preconditions.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inconsistent model/pipeline configuration (empty vocabulary, single class, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file did not have the expected shape. The message names the offending field.
class InputFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A persisted file carries a schema_version this build cannot read.
class VersionError : public InputFormatError {
 public:
  using InputFormatError::InputFormatError;
};

/// The knowledge store contains a line that does not parse or does not re-hash.
class StoreIntegrityError : public std::runtime_error {
 public:
  StoreIntegrityError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Another writer holds the store lock.
class LockError : public IoError {
 public:
  using IoError::IoError;
};

}  // namespace kmtext
