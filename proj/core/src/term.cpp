#include "mtcheck/term.hpp"

#include <cassert>

#include "hash.hpp"
#include "mtcheck/error.hpp"

namespace mtc {

namespace detail {

struct TermNode {
  Op op = Op::Empty;
  Action action;
  Term left;
  Term right;
  std::optional<std::uint32_t> budget;
  std::size_t hash = 0;
  std::size_t size = 1;
};

}  // namespace detail

namespace {

constexpr std::size_t kEmptyHash = 0x51ed27;

const Term& no_child() {
  static const Term t;
  return t;
}

}  // namespace

const char* op_name(Op op) {
  switch (op) {
    case Op::Empty: return "0";
    case Op::Action: return "action";
    case Op::Strict: return "strict";
    case Op::Seq: return "seq";
    case Op::Alt: return "alt";
    case Op::Par: return "par";
    case Op::LoopStrict: return "loop_strict";
    case Op::LoopSeq: return "loop_seq";
    case Op::LoopPar: return "loop_par";
  }
  return "?";
}

Term::Term(std::shared_ptr<const detail::TermNode> node)
    : node_(std::move(node)) {}

Term::Term() = default;

Term Term::action(Action act) {
  auto n = std::make_shared<detail::TermNode>();
  n->op = Op::Action;
  n->hash = detail::hash_mix(0xac7, hash_value(act));
  n->action = std::move(act);
  return Term(std::move(n));
}

Term Term::binary(Op op, Term left, Term right) {
  assert(is_binary(op));
  auto n = std::make_shared<detail::TermNode>();
  n->op = op;
  n->hash = detail::hash_mix(
      detail::hash_mix(static_cast<std::size_t>(op) * 0x100000001b3ULL,
                       left.hash()),
      right.hash());
  n->size = 1 + left.size() + right.size();
  n->left = std::move(left);
  n->right = std::move(right);
  return Term(std::move(n));
}

Term Term::loop(Op op, Term body, std::optional<std::uint32_t> budget) {
  assert(is_loop(op));
  auto n = std::make_shared<detail::TermNode>();
  n->op = op;
  std::size_t seed = static_cast<std::size_t>(op) * 0x100000001b3ULL;
  if (budget) seed = detail::hash_mix(seed, 0xb0d9e7 + *budget);
  n->hash = detail::hash_mix(seed, body.hash());
  n->size = 1 + body.size();
  n->left = std::move(body);
  n->budget = budget;
  return Term(std::move(n));
}

Term Term::fold(Op op, const std::vector<Term>& operands) {
  if (operands.empty()) return Term();
  Term acc = operands.back();
  for (auto it = operands.rbegin() + 1; it != operands.rend(); ++it) {
    acc = binary(op, *it, std::move(acc));
  }
  return acc;
}

Op Term::op() const { return node_ ? node_->op : Op::Empty; }

const Action& Term::action() const {
  assert(is_action());
  return node_->action;
}

const Term& Term::left() const {
  if (!node_ || node_->op == Op::Empty || node_->op == Op::Action) return no_child();
  return node_->left;
}

const Term& Term::right() const {
  if (!node_ || !is_binary(node_->op)) return no_child();
  return node_->right;
}

std::optional<std::uint32_t> Term::loop_budget() const {
  return node_ ? node_->budget : std::nullopt;
}

std::size_t Term::hash() const { return node_ ? node_->hash : kEmptyHash; }

std::size_t Term::size() const { return node_ ? node_->size : 1; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.op() != b.op()) return false;
  switch (a.op()) {
    case Op::Empty: return true;
    case Op::Action: return a.action() == b.action();
    default: break;
  }
  if (is_loop(a.op())) {
    return a.loop_budget() == b.loop_budget() && a.body() == b.body();
  }
  return a.left() == b.left() && a.right() == b.right();
}

std::string Term::to_string() const {
  switch (op()) {
    case Op::Empty: return "0";
    case Op::Action: return action().to_string();
    default: break;
  }
  std::string out = op_name(op());
  if (is_loop(op())) {
    if (auto b = loop_budget()) out += "[" + std::to_string(*b) + "]";
    return out + "(" + body().to_string() + ")";
  }
  return out + "(" + left().to_string() + "," + right().to_string() + ")";
}

Position::Position(std::vector<std::uint8_t> path) : path_(std::move(path)) {
  for (auto step : path_) {
    if (step != 1 && step != 2) {
      throw Error(Errc::InvalidPosition, "position steps must be 1 or 2");
    }
  }
}

Position Position::parse(const std::string& text) {
  if (text.empty() || text == "ε" || text == "eps") return Position();
  std::vector<std::uint8_t> path;
  for (char c : text) {
    if (c != '1' && c != '2') {
      throw Error(Errc::InvalidPosition, "malformed position '" + text + "'");
    }
    path.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Position(std::move(path));
}

Position Position::prepend(std::uint8_t step) const {
  std::vector<std::uint8_t> path;
  path.reserve(path_.size() + 1);
  path.push_back(step);
  path.insert(path.end(), path_.begin(), path_.end());
  return Position(std::move(path));
}

Position Position::append(std::uint8_t step) const {
  auto path = path_;
  path.push_back(step);
  return Position(std::move(path));
}

Position Position::tail() const {
  assert(!path_.empty());
  return Position(std::vector<std::uint8_t>(path_.begin() + 1, path_.end()));
}

std::string Position::to_string() const {
  if (path_.empty()) return "ε";
  std::string out;
  for (auto step : path_) out += static_cast<char>('0' + step);
  return out;
}

Term unbounded(const Term& term) {
  if (is_binary(term.op())) {
    return Term::binary(term.op(), unbounded(term.left()), unbounded(term.right()));
  }
  if (is_loop(term.op())) return Term::loop(term.op(), unbounded(term.body()));
  return term;
}

Term with_loop_budget(const Term& term, std::uint32_t unrollings) {
  if (is_binary(term.op())) {
    return Term::binary(term.op(), with_loop_budget(term.left(), unrollings),
                        with_loop_budget(term.right(), unrollings));
  }
  if (is_loop(term.op())) {
    return Term::loop(term.op(), with_loop_budget(term.body(), unrollings),
                      unrollings);
  }
  return term;
}

}  // namespace mtc
