#pragma once

#include <stdexcept>
#include <string>

namespace hhs {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind { parse, precondition, cap, invariant };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::precondition, what) {}
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(ErrorKind::cap, what) {}
};

// Raised when a structural identity that must hold on valid inputs fails.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what) : Error(ErrorKind::invariant, what) {}
};

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return 2;
    case ErrorKind::precondition: return 3;
    case ErrorKind::cap: return 4;
    case ErrorKind::invariant: return 6;
  }
  return 1;
}

}  // namespace hhs
