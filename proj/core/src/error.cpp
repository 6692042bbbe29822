#include "mtcheck/error.hpp"

namespace mtc {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::UnknownLifeline: return "UnknownLifeline";
    case Errc::UnknownMessage: return "UnknownMessage";
    case Errc::InvalidSignature: return "InvalidSignature";
    case Errc::HeadMismatch: return "HeadMismatch";
    case Errc::InvalidPosition: return "InvalidPosition";
    case Errc::PruneUndefined: return "PruneUndefined";
    case Errc::NotInFrontier: return "NotInFrontier";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::MalformedFormula: return "MalformedFormula";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::ArityError: return "ArityError";
    case Errc::MissingComponent: return "MissingComponent";
    case Errc::DuplicateComponent: return "DuplicateComponent";
    case Errc::WrongLifeline: return "WrongLifeline";
  }
  return "Unknown";
}

ParseError::ParseError(Errc code, const std::string& what, std::size_t line,
                       std::size_t column)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " +
                      what),
      line_(line),
      column_(column) {}

}  // namespace mtc
