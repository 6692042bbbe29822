#include "mtcheck/syntax.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "mtcheck/error.hpp"
#include "mtcheck/interaction.hpp"

namespace mtc {

namespace {

enum class Tok {
  Ident,
  Zero,
  Bang,
  Query,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Semicolon,
  Colon,
  Dot,
  Equals,
  End,
};

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Zero: return "'0'";
    case Tok::Bang: return "'!'";
    case Tok::Query: return "'?'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Semicolon: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t line = 1, column = 1, k = 0;
  auto advance = [&](std::size_t n = 1) {
    for (; n > 0 && k < text.size(); --n, ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (k < text.size()) {
    char c = text[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (c == '#') {
      while (k < text.size() && text[k] != '\n') advance();
      continue;
    }
    Token token{Tok::End, std::string(1, c), line, column};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = k;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_')) {
        ++end;
      }
      token.kind = Tok::Ident;
      token.text = text.substr(k, end - k);
      tokens.push_back(token);
      advance(end - k);
      continue;
    }
    switch (c) {
      case '0': token.kind = Tok::Zero; break;
      case '!': token.kind = Tok::Bang; break;
      case '?': token.kind = Tok::Query; break;
      case '(': token.kind = Tok::LParen; break;
      case ')': token.kind = Tok::RParen; break;
      case '{': token.kind = Tok::LBrace; break;
      case '}': token.kind = Tok::RBrace; break;
      case ',': token.kind = Tok::Comma; break;
      case ';': token.kind = Tok::Semicolon; break;
      case ':': token.kind = Tok::Colon; break;
      case '.': token.kind = Tok::Dot; break;
      case '=': token.kind = Tok::Equals; break;
      default:
        throw ParseError(Errc::SyntaxError,
                         std::string("unexpected character '") + c + "'", line,
                         column);
    }
    tokens.push_back(token);
    advance();
  }
  tokens.push_back({Tok::End, "", line, column});
  return tokens;
}

std::optional<Op> operator_named(const std::string& name) {
  if (name == "strict") return Op::Strict;
  if (name == "seq") return Op::Seq;
  if (name == "alt") return Op::Alt;
  if (name == "par") return Op::Par;
  if (name == "loop_strict") return Op::LoopStrict;
  if (name == "loop_seq") return Op::LoopSeq;
  if (name == "loop_par") return Op::LoopPar;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(lex(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  const Token& expect(Tok kind) {
    const Token& token = peek();
    if (token.kind != kind) {
      fail(token, std::string("expected ") + describe(kind) + ", found " +
                      (token.kind == Tok::Ident ? "'" + token.text + "'"
                                                : describe(token.kind)));
    }
    ++pos_;
    return token;
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  void expect_keyword(const char* word) {
    const Token& token = peek();
    if (token.kind != Tok::Ident || token.text != word) {
      fail(token, std::string("expected '") + word + "'");
    }
    ++pos_;
  }

  [[noreturn]] void fail(const Token& at, const std::string& what,
                         Errc code = Errc::SyntaxError) const {
    throw ParseError(code, what, at.line, at.column);
  }

  std::vector<std::string> name_list() {
    std::vector<std::string> names{expect(Tok::Ident).text};
    while (accept(Tok::Comma)) names.push_back(expect(Tok::Ident).text);
    return names;
  }

  Action action(const Signature* sig) {
    const Token& lifeline = expect(Tok::Ident);
    Direction direction;
    if (accept(Tok::Bang)) {
      direction = Direction::Emit;
    } else if (accept(Tok::Query)) {
      direction = Direction::Receive;
    } else {
      fail(peek(), "expected '!' or '?' after '" + lifeline.text + "'");
    }
    const Token& message = expect(Tok::Ident);
    if (sig && !sig->has_lifeline(lifeline.text)) {
      fail(lifeline, "unknown lifeline '" + lifeline.text + "'",
           Errc::UnknownLifeline);
    }
    if (sig && !sig->has_message(message.text)) {
      fail(message, "unknown message '" + message.text + "'",
           Errc::UnknownMessage);
    }
    return Action{lifeline.text, direction, message.text};
  }

  Term term(const Signature* sig) {
    const Token& head = peek();
    if (accept(Tok::Zero)) return Term::empty();
    if (head.kind != Tok::Ident) {
      fail(head, std::string("expected a term, found ") + describe(head.kind));
    }
    if (peek(1).kind != Tok::LParen) return Term::action(action(sig));

    auto op = operator_named(head.text);
    if (!op) fail(head, "unknown operator '" + head.text + "'");
    pos_ += 2;
    std::vector<Term> operands{term(sig)};
    while (accept(Tok::Comma)) operands.push_back(term(sig));
    expect(Tok::RParen);

    if (is_loop(*op)) {
      if (operands.size() != 1) {
        fail(head, head.text + " takes exactly one operand, got " +
                       std::to_string(operands.size()),
             Errc::ArityError);
      }
      return Term::loop(*op, std::move(operands.front()));
    }
    if (operands.size() < 2) {
      fail(head, head.text + " takes at least two operands", Errc::ArityError);
    }
    return Term::fold(*op, operands);
  }

  Signature signature_block() {
    expect_keyword("signature");
    expect(Tok::LBrace);
    const Token& at = peek();
    expect_keyword("lifelines");
    expect(Tok::Equals);
    auto lifelines = name_list();
    expect(Tok::Semicolon);
    expect_keyword("messages");
    expect(Tok::Equals);
    auto messages = name_list();
    expect(Tok::Semicolon);
    expect(Tok::RBrace);
    try {
      return Signature(std::move(lifelines), std::move(messages));
    } catch (const Error& e) {
      fail(at, e.what(), e.code());
    }
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ModelFile parse_model(const std::string& text) {
  Parser parser(text);
  Signature sig = parser.signature_block();
  parser.expect_keyword("interaction");
  parser.expect(Tok::LBrace);
  Term term = parser.term(&sig);
  parser.expect(Tok::RBrace);
  parser.expect(Tok::End);
  return ModelFile{std::move(sig), std::move(term)};
}

Term parse_term(const std::string& text, const Signature* sig) {
  Parser parser(text);
  Term term = parser.term(sig);
  parser.expect(Tok::End);
  return term;
}

MultiTrace parse_multitrace(const std::string& text, const Signature& sig) {
  Parser parser(text);
  std::vector<std::optional<GlobalTrace>> components(sig.lifelines().size());
  parser.expect(Tok::LBrace);
  do {
    const Token& label = parser.expect(Tok::Ident);
    auto index = sig.lifeline_index(label.text);
    if (!index) {
      parser.fail(label, "unknown lifeline '" + label.text + "'",
                  Errc::UnknownLifeline);
    }
    if (components[*index]) {
      parser.fail(label, "component '" + label.text + "' given twice",
                  Errc::DuplicateComponent);
    }
    parser.expect(Tok::Colon);
    GlobalTrace trace;
    bool empty = parser.peek().kind == Tok::Ident && parser.peek().text == "eps" &&
                 parser.peek(1).kind != Tok::Bang && parser.peek(1).kind != Tok::Query;
    if (empty) {
      parser.expect(Tok::Ident);
    } else {
      do {
        const Token& at = parser.peek();
        Action act = parser.action(nullptr);
        if (act.lifeline != label.text) {
          parser.fail(at,
                      "action " + act.to_string() + " in component of '" +
                          label.text + "'",
                      Errc::WrongLifeline);
        }
        if (!sig.has_message(act.message)) {
          parser.fail(at, "unknown message '" + act.message + "'",
                      Errc::UnknownMessage);
        }
        trace.push_back(std::move(act));
      } while (parser.accept(Tok::Dot));
    }
    components[*index] = std::move(trace);
  } while (parser.accept(Tok::Semicolon));
  const Token& close = parser.peek();
  parser.expect(Tok::RBrace);
  parser.expect(Tok::End);

  std::vector<GlobalTrace> ordered;
  for (std::size_t j = 0; j < components.size(); ++j) {
    if (!components[j]) {
      parser.fail(close, "missing component for lifeline '" +
                             sig.lifelines()[j] + "'",
                  Errc::MissingComponent);
    }
    ordered.push_back(std::move(*components[j]));
  }
  return MultiTrace(std::move(ordered));
}

std::string print_model(const ModelFile& model) {
  auto join = [](const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (k) out += ", ";
      out += names[k];
    }
    return out;
  };
  return "signature {\n  lifelines = " + join(model.signature.lifelines()) +
         ";\n  messages = " + join(model.signature.messages()) +
         ";\n}\ninteraction {\n  " + model.term.to_string() + "\n}\n";
}

std::string print_multitrace(const MultiTrace& mu, const Signature& sig) {
  return mu.to_string(sig);
}

}  // namespace mtc
