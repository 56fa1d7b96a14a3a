#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charset {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact division that should have been exact left a remainder.
/// Raised only when an internal exactness invariant is violated.
class NotExact : public Error {
 public:
  NotExact() : Error("polynomial division is not exact") {}
};

class ZeroDivisor : public Error {
 public:
  ZeroDivisor() : Error("division by the zero polynomial") {}
};

class ZeroInput : public Error {
 public:
  explicit ZeroInput(const std::string& what) : Error(what + ": zero polynomial not allowed") {}
};

class NotReducible : public Error {
 public:
  NotReducible() : Error("polynomial is not reducible w.r.t. the reductor") {}
};

class ConstantReductor : public Error {
 public:
  ConstantReductor() : Error("reductor must be a non-constant polynomial") {}
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& what) : Error(what + ": empty polynomial set") {}
};

class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& what) : Error(what) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// System file errors carry a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& msg)
      : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UndeclaredVariable : public Error {
 public:
  UndeclaredVariable(std::size_t line, std::size_t column, std::string name)
      : Error("undeclared variable '" + name + "' at " + std::to_string(line) + ":" +
              std::to_string(column)),
        name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class NonIntegerCoefficient : public Error {
 public:
  NonIntegerCoefficient(std::size_t line, std::size_t column)
      : Error("non-integer coefficient at " + std::to_string(line) + ":" + std::to_string(column)) {}
};

}  // namespace charset
