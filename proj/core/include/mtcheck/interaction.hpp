#pragma once

#include <string>
#include <vector>

#include "mtcheck/term.hpp"
#include "mtcheck/trace.hpp"

namespace mtc {

/// Every well-defined position of `term`, sorted lexicographically.
std::vector<Position> positions(const Term& term);

/// The sub-term at `pos`; throws InvalidPosition if `pos` is not in
/// positions(term).
const Term& sub_interaction(const Term& term, const Position& pos);

/// Whether `term` accepts the empty trace.
bool expresses_empty(const Term& term);

/// Whether `term` accepts some execution with no action on `lifeline`.
bool avoids(const Term& term, const std::string& lifeline);

struct FrontierAction {
  Position position;
  Action action;
};

/// Immediately executable action leaves, sorted by position.
std::vector<FrontierAction> frontier_actions(const Term& term);
std::vector<Position> frontier(const Term& term);

/// Keeps exactly the executions of `term` that involve no action on
/// `lifeline`. Throws PruneUndefined unless avoids(term, lifeline).
Term prune(const Term& term, const std::string& lifeline);

/// Removes empty children of strict/seq/par nodes, bottom-up, everywhere
/// in the tree (including under alt and loops). Alt and loop nodes are kept.
Term simplify(const Term& term);

struct Execution {
  Term term;
  Action action;
};

/// Executes the frontier action at `pos` and returns the continuation.
/// The continuation is simplified unless `normalize` is false. Throws
/// NotInFrontier if `pos` is not in frontier(term).
Execution execute(const Term& term, const Position& pos, bool normalize = true);

/// Lifelines occurring in action leaves of `term`, sorted.
std::vector<std::string> lifelines_of(const Term& term);

/// Throws UnknownLifeline / UnknownMessage on a foreign action leaf.
void check_term(const Term& term, const Signature& sig);

}  // namespace mtc
