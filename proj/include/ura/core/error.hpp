#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ura {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A documented input requirement does not hold (e.g. automaton is ambiguous).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Invariant broken inside the library; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ura
