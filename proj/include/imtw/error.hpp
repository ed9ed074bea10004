#pragma once

#include <stdexcept>
#include <string>

namespace imtw {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad vertex, malformed matching, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Instance exceeds the configured limit of an exact (exponential) routine.
class LimitExceeded : public Error {
public:
  using Error::Error;
};

/// Malformed input file; carries the 1-based line number when known.
class ParseError : public Error {
public:
  ParseError(const std::string &what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

} // namespace imtw
