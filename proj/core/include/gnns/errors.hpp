#pragma once

#include <stdexcept>
#include <string>

namespace gnns {

/// Base class for every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or a violated precondition on the caller's side.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Input data that is malformed, inconsistent or outside the model's domain.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A file that does not parse under its declared format.
class ParseError : public DataError {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : DataError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gnns
