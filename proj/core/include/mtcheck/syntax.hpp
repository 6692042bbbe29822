#pragma once

#include <string>

#include "mtcheck/term.hpp"
#include "mtcheck/trace.hpp"

namespace mtc {

/// Contents of a model file:
///
///   signature {
///     lifelines = a, b, c;
///     messages = m1, m2;
///   }
///   interaction {
///     seq(alt(strict(b!m1, c?m1), 0), b!m2)
///   }
///
/// Operators with more than two operands fold to the right; `#` starts a
/// line comment.
struct ModelFile {
  Signature signature;
  Term term;
};

/// Throws ParseError (SyntaxError, ArityError, UnknownLifeline,
/// UnknownMessage, InvalidSignature).
ModelFile parse_model(const std::string& text);

/// A bare term. Names are checked only when `sig` is given.
Term parse_term(const std::string& text, const Signature* sig = nullptr);

/// `{a: a!m1.a?m4; b: eps; c: c!m4}`, components in any order, each
/// lifeline of `sig` exactly once. Throws ParseError (SyntaxError,
/// MissingComponent, DuplicateComponent, WrongLifeline, UnknownLifeline,
/// UnknownMessage).
MultiTrace parse_multitrace(const std::string& text, const Signature& sig);

/// Inverse of parse_model, using the canonical binary term syntax.
std::string print_model(const ModelFile& model);
std::string print_multitrace(const MultiTrace& mu, const Signature& sig);

}  // namespace mtc
