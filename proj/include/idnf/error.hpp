#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idnf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an algebraic operation does not hold
/// (zero polynomial has no leading term, generator vanishes, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed surface syntax. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

/// A rewriting loop ran past its step budget.
class FuelExhausted : public Error {
 public:
  FuelExhausted(const std::string& where, std::size_t limit)
      : Error(where + ": rewriting fuel exhausted after " + std::to_string(limit) + " steps"),
        limit_(limit) {}

  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

/// Step budget for the rewriting loops. The default can be overridden with
/// the IDNF_FUEL environment variable.
struct Fuel {
  std::size_t limit;

  static Fuel standard();

  /// Throws FuelExhausted once `steps` exceeds the limit.
  void check(std::size_t steps, const char* where) const {
    if (steps > limit) throw FuelExhausted(where, limit);
  }
};

}  // namespace idnf
