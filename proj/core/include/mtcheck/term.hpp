#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mtcheck/trace.hpp"

namespace mtc {

enum class Op : unsigned char {
  Empty,
  Action,
  Strict,
  Seq,
  Alt,
  Par,
  LoopStrict,
  LoopSeq,
  LoopPar,
};

constexpr bool is_binary(Op op) {
  return op == Op::Strict || op == Op::Seq || op == Op::Alt || op == Op::Par;
}
constexpr bool is_loop(Op op) {
  return op == Op::LoopStrict || op == Op::LoopSeq || op == Op::LoopPar;
}
/// strict, seq and par; alt is a choice, not a scheduler.
constexpr bool is_scheduling(Op op) {
  return op == Op::Strict || op == Op::Seq || op == Op::Par;
}
/// The binary operator a loop composes its unrollings with.
constexpr Op loop_scheduler(Op loop) {
  switch (loop) {
    case Op::LoopStrict: return Op::Strict;
    case Op::LoopSeq: return Op::Seq;
    default: return Op::Par;
  }
}
constexpr Op loop_of(Op scheduler) {
  switch (scheduler) {
    case Op::Strict: return Op::LoopStrict;
    case Op::Seq: return Op::LoopSeq;
    default: return Op::LoopPar;
  }
}

const char* op_name(Op op);

namespace detail {
struct TermNode;
}

/// Immutable interaction term. Copies share structure; equality is
/// structural and hashing is O(1) (computed at construction).
///
/// Loop nodes may carry a remaining-unrolling budget. Unbounded loops
/// (the default, and the only kind the textual syntax produces) behave as
/// usual; a bounded loop with budget 0 can only be skipped. Bounded loops
/// are how the explorer enumerates finite slices of the semantics.
class Term {
 public:
  /// The empty interaction.
  Term();

  static Term empty() { return Term(); }
  static Term action(Action act);
  static Term binary(Op op, Term left, Term right);
  static Term loop(Op op, Term body,
                   std::optional<std::uint32_t> budget = std::nullopt);

  static Term strict(Term l, Term r) { return binary(Op::Strict, std::move(l), std::move(r)); }
  static Term seq(Term l, Term r) { return binary(Op::Seq, std::move(l), std::move(r)); }
  static Term alt(Term l, Term r) { return binary(Op::Alt, std::move(l), std::move(r)); }
  static Term par(Term l, Term r) { return binary(Op::Par, std::move(l), std::move(r)); }
  static Term loop_strict(Term b) { return loop(Op::LoopStrict, std::move(b)); }
  static Term loop_seq(Term b) { return loop(Op::LoopSeq, std::move(b)); }
  static Term loop_par(Term b) { return loop(Op::LoopPar, std::move(b)); }

  /// Right fold: fold(f, {a, b, c}) = f(a, f(b, c)). A single operand is
  /// returned unchanged; an empty list folds to the empty interaction.
  static Term fold(Op op, const std::vector<Term>& operands);

  Op op() const;
  bool is_empty() const { return op() == Op::Empty; }
  bool is_action() const { return op() == Op::Action; }

  /// Precondition: is_action().
  const Action& action() const;
  /// Left child of a binary node, body of a loop.
  const Term& left() const;
  /// Right child of a binary node.
  const Term& right() const;
  const Term& body() const { return left(); }
  std::optional<std::uint32_t> loop_budget() const;

  std::size_t hash() const;
  /// Number of nodes.
  std::size_t size() const;

  /// Canonical binary concrete syntax, e.g. `seq(alt(strict(b!m2,c?m2),0),b!m3)`.
  /// Loop budgets are written as `loop_seq[2](...)`; such terms do not
  /// re-parse.
  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> node);

  std::shared_ptr<const detail::TermNode> node_;
};

/// Dewey address of a sub-term: 1 = left child or loop body, 2 = right.
class Position {
 public:
  Position() = default;
  explicit Position(std::vector<std::uint8_t> path);
  /// Accepts "" or "ε" or "eps" for the root, otherwise digits in {1,2}.
  static Position parse(const std::string& text);

  const std::vector<std::uint8_t>& path() const { return path_; }
  bool is_root() const { return path_.empty(); }
  std::size_t depth() const { return path_.size(); }

  /// x.p
  Position prepend(std::uint8_t step) const;
  /// p.x
  Position append(std::uint8_t step) const;
  /// Drops the first step; precondition !is_root().
  Position tail() const;

  std::string to_string() const;

  friend bool operator==(const Position&, const Position&) = default;
  /// Lexicographic, so ε < 1 < 11 < 12 < 2.
  friend auto operator<=>(const Position&, const Position&) = default;

 private:
  std::vector<std::uint8_t> path_;
};

/// Strips every loop budget.
Term unbounded(const Term& term);
/// Gives every loop of `term` the budget `unrollings`.
Term with_loop_budget(const Term& term, std::uint32_t unrollings);

}  // namespace mtc

template <>
struct std::hash<mtc::Term> {
  std::size_t operator()(const mtc::Term& t) const noexcept { return t.hash(); }
};
