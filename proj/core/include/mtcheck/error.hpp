#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mtc {

enum class Errc {
  UnknownLifeline,
  UnknownMessage,
  InvalidSignature,
  HeadMismatch,
  InvalidPosition,
  PruneUndefined,
  NotInFrontier,
  BudgetExhausted,
  MalformedFormula,
  TooLarge,
  SyntaxError,
  ArityError,
  MissingComponent,
  DuplicateComponent,
  WrongLifeline,
};

std::string_view to_string(Errc code);

/// Base exception for every failure raised by the library. The code is
/// stable and meant for programmatic dispatch; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by the textual parsers. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(Errc code, const std::string& what, std::size_t line,
             std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mtc
