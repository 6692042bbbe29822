#include "mtcheck/interaction.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "mtcheck/error.hpp"

namespace mtc {

namespace {

void collect_positions(const Term& term, const Position& prefix,
                       std::vector<Position>& out) {
  out.push_back(prefix);
  if (is_binary(term.op())) {
    collect_positions(term.left(), prefix.append(1), out);
    collect_positions(term.right(), prefix.append(2), out);
  } else if (is_loop(term.op())) {
    collect_positions(term.body(), prefix.append(1), out);
  }
}

// Frontier relative to `term`, positions written as `prefix.p`.
void collect_frontier(const Term& term, const Position& prefix,
                      std::vector<FrontierAction>& out) {
  switch (term.op()) {
    case Op::Empty:
      return;
    case Op::Action:
      out.push_back({prefix, term.action()});
      return;
    case Op::Strict:
      collect_frontier(term.left(), prefix.append(1), out);
      if (expresses_empty(term.left())) {
        collect_frontier(term.right(), prefix.append(2), out);
      }
      return;
    case Op::Seq: {
      collect_frontier(term.left(), prefix.append(1), out);
      std::vector<FrontierAction> right;
      collect_frontier(term.right(), prefix.append(2), right);
      std::map<std::string, bool> left_avoids;
      for (auto& entry : right) {
        auto [it, fresh] = left_avoids.try_emplace(entry.action.lifeline, false);
        if (fresh) it->second = avoids(term.left(), entry.action.lifeline);
        if (it->second) out.push_back(std::move(entry));
      }
      return;
    }
    case Op::Alt:
    case Op::Par:
      collect_frontier(term.left(), prefix.append(1), out);
      collect_frontier(term.right(), prefix.append(2), out);
      return;
    case Op::LoopStrict:
    case Op::LoopSeq:
    case Op::LoopPar:
      if (term.loop_budget() == 0u) return;
      collect_frontier(term.body(), prefix.append(1), out);
      return;
  }
}

Term prune_unchecked(const Term& term, const std::string& lifeline) {
  switch (term.op()) {
    case Op::Empty:
    case Op::Action:
      return term;
    case Op::Alt: {
      bool left = avoids(term.left(), lifeline);
      bool right = avoids(term.right(), lifeline);
      if (left && right) {
        return Term::alt(prune_unchecked(term.left(), lifeline),
                         prune_unchecked(term.right(), lifeline));
      }
      return left ? prune_unchecked(term.left(), lifeline)
                  : prune_unchecked(term.right(), lifeline);
    }
    case Op::Strict:
    case Op::Seq:
    case Op::Par:
      return Term::binary(term.op(), prune_unchecked(term.left(), lifeline),
                          prune_unchecked(term.right(), lifeline));
    case Op::LoopStrict:
    case Op::LoopSeq:
    case Op::LoopPar:
      if (!avoids(term.body(), lifeline)) return Term::empty();
      return Term::loop(term.op(), prune_unchecked(term.body(), lifeline),
                        term.loop_budget());
  }
  return term;
}

// Precondition: pos is in the frontier of term.
// Same answer as searching frontier(term), without building it.
bool in_frontier(const Term& term, const std::vector<std::uint8_t>& path) {
  const Term* node = &term;
  std::vector<const Term*> seq_lefts;
  for (auto step : path) {
    if (is_loop(node->op())) {
      if (step != 1 || node->loop_budget() == 0u) return false;
      node = &node->body();
    } else if (is_binary(node->op()) && (step == 1 || step == 2)) {
      if (step == 2) {
        if (node->op() == Op::Strict && !expresses_empty(node->left())) return false;
        if (node->op() == Op::Seq) seq_lefts.push_back(&node->left());
      }
      node = step == 1 ? &node->left() : &node->right();
    } else {
      return false;
    }
  }
  if (!node->is_action()) return false;
  return std::all_of(seq_lefts.begin(), seq_lefts.end(), [&](const Term* left) {
    return avoids(*left, node->action().lifeline);
  });
}

Execution execute_unchecked(const Term& term, const Position& pos) {
  if (term.is_action()) return {Term::empty(), term.action()};

  const Position rest = pos.tail();
  if (is_loop(term.op())) {
    auto inner = execute_unchecked(term.body(), rest);
    std::optional<std::uint32_t> budget = term.loop_budget();
    if (budget) --*budget;
    return {Term::binary(loop_scheduler(term.op()), std::move(inner.term),
                         Term::loop(term.op(), term.body(), budget)),
            std::move(inner.action)};
  }

  if (pos.path().front() == 1) {
    auto inner = execute_unchecked(term.left(), rest);
    if (term.op() == Op::Alt) return inner;
    return {Term::binary(term.op(), std::move(inner.term), term.right()),
            std::move(inner.action)};
  }

  auto inner = execute_unchecked(term.right(), rest);
  switch (term.op()) {
    case Op::Alt:
    case Op::Strict:
      return inner;
    case Op::Seq:
      return {Term::seq(prune_unchecked(term.left(), inner.action.lifeline),
                        std::move(inner.term)),
              std::move(inner.action)};
    default:
      return {Term::par(term.left(), std::move(inner.term)),
              std::move(inner.action)};
  }
}

void collect_lifelines(const Term& term, std::set<std::string>& out) {
  if (term.is_action()) {
    out.insert(term.action().lifeline);
  } else if (is_binary(term.op())) {
    collect_lifelines(term.left(), out);
    collect_lifelines(term.right(), out);
  } else if (is_loop(term.op())) {
    collect_lifelines(term.body(), out);
  }
}

}  // namespace

std::vector<Position> positions(const Term& term) {
  std::vector<Position> out;
  collect_positions(term, Position(), out);
  return out;
}

const Term& sub_interaction(const Term& term, const Position& pos) {
  const Term* cursor = &term;
  for (auto step : pos.path()) {
    if (is_binary(cursor->op())) {
      cursor = step == 1 ? &cursor->left() : &cursor->right();
    } else if (is_loop(cursor->op()) && step == 1) {
      cursor = &cursor->body();
    } else {
      throw Error(Errc::InvalidPosition, "position " + pos.to_string() +
                                             " is not defined in " +
                                             term.to_string());
    }
  }
  return *cursor;
}

bool expresses_empty(const Term& term) {
  switch (term.op()) {
    case Op::Empty:
      return true;
    case Op::Action:
      return false;
    case Op::Alt:
      return expresses_empty(term.left()) || expresses_empty(term.right());
    case Op::Strict:
    case Op::Seq:
    case Op::Par:
      return expresses_empty(term.left()) && expresses_empty(term.right());
    default:
      return true;
  }
}

bool avoids(const Term& term, const std::string& lifeline) {
  switch (term.op()) {
    case Op::Empty:
      return true;
    case Op::Action:
      return term.action().lifeline != lifeline;
    case Op::Alt:
      return avoids(term.left(), lifeline) || avoids(term.right(), lifeline);
    case Op::Strict:
    case Op::Seq:
    case Op::Par:
      return avoids(term.left(), lifeline) && avoids(term.right(), lifeline);
    default:
      return true;
  }
}

std::vector<FrontierAction> frontier_actions(const Term& term) {
  std::vector<FrontierAction> out;
  collect_frontier(term, Position(), out);
  return out;
}

std::vector<Position> frontier(const Term& term) {
  std::vector<Position> out;
  for (auto& entry : frontier_actions(term)) out.push_back(std::move(entry.position));
  return out;
}

Term prune(const Term& term, const std::string& lifeline) {
  if (!avoids(term, lifeline)) {
    throw Error(Errc::PruneUndefined,
                term.to_string() + " does not avoid lifeline '" + lifeline + "'");
  }
  return prune_unchecked(term, lifeline);
}

Term simplify(const Term& term) {
  if (is_loop(term.op())) {
    Term body = simplify(term.body());
    if (body == term.body()) return term;
    return Term::loop(term.op(), std::move(body), term.loop_budget());
  }
  if (!is_binary(term.op())) return term;

  Term left = simplify(term.left());
  Term right = simplify(term.right());
  if (is_scheduling(term.op())) {
    if (left.is_empty()) return right;
    if (right.is_empty()) return left;
  }
  if (left == term.left() && right == term.right()) return term;
  return Term::binary(term.op(), std::move(left), std::move(right));
}

Execution execute(const Term& term, const Position& pos, bool normalize) {
  if (!in_frontier(term, pos.path())) {
    throw Error(Errc::NotInFrontier, "position " + pos.to_string() +
                                         " is not in the frontier of " +
                                         term.to_string());
  }
  auto result = execute_unchecked(term, pos);
  if (normalize) result.term = simplify(result.term);
  return result;
}

std::vector<std::string> lifelines_of(const Term& term) {
  std::set<std::string> names;
  collect_lifelines(term, names);
  return {names.begin(), names.end()};
}

void check_term(const Term& term, const Signature& sig) {
  if (term.is_action()) {
    check_action(term.action(), sig);
  } else if (is_binary(term.op())) {
    check_term(term.left(), sig);
    check_term(term.right(), sig);
  } else if (is_loop(term.op())) {
    check_term(term.body(), sig);
  }
}

}  // namespace mtc
