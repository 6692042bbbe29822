#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "mtcheck/interaction.hpp"
#include "mtcheck/term.hpp"
#include "mtcheck/trace.hpp"

namespace mtc {

/// Makes the (generally infinite) trace semantics finite.
struct ExplorationBound {
  /// Unrollings allowed per loop instance along a path. Executing an action
  /// inside a loop body consumes one unrolling of that loop; each unrolling
  /// starts the loops nested in the body afresh.
  std::uint32_t max_loop_unrollings = 0;
  std::optional<std::size_t> max_trace_length;
};

/// Accepted global traces reachable within `bound`, deduplicated.
std::set<GlobalTrace> accepted_traces(const Term& term,
                                      const ExplorationBound& bound);

/// Projection of accepted_traces onto `sig`.
std::set<MultiTrace> accepted_multitraces(const Term& term,
                                          const Signature& sig,
                                          const ExplorationBound& bound);

/// Whether `trace` is accepted, by reading it front to back with
/// small-step executions. No bound is needed: every step consumes one action.
bool is_accepted_trace(const Term& term, const GlobalTrace& trace);

/// Flattened execution tree. Node 0 is the root; children of a node are
/// ordered by the position of the executed action.
struct ExecutionTree {
  struct Edge {
    Position position;
    Action action;
    std::size_t child;
  };
  struct Node {
    Term term;
    bool accepting = false;
    std::size_t depth = 0;
    std::vector<Edge> edges;
  };

  std::vector<Node> nodes;

  const Node& root() const { return nodes.front(); }
  std::size_t size() const { return nodes.size(); }
};

ExecutionTree explore_tree(const Term& term, const ExplorationBound& bound);

}  // namespace mtc
