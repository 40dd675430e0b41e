#pragma once

#include <stdexcept>
#include <string>

namespace sqtile {

// Base for every error raised by the library. The CLI maps each kind onto a
// stable exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class StructureError : public Error {
 public:
  using Error::Error;
};

class UnboundVariableError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFieldError : public Error {
 public:
  using Error::Error;
};

// Search or oracle exceeded a configured size or node budget.
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string field = {}, int line = 0)
      : Error(what), field_(std::move(field)), line_(line) {}

  const std::string& field() const { return field_; }
  int line() const { return line_; }

 private:
  std::string field_;
  int line_;
};

}  // namespace sqtile
