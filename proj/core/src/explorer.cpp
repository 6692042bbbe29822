#include "mtcheck/explorer.hpp"

#include <limits>
#include <memory>
#include <unordered_map>

#include "hash.hpp"

namespace mtc {

namespace {

using TraceSet = std::set<GlobalTrace>;

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

struct Key {
  Term term;
  std::size_t remaining;

  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& key) const {
    return detail::hash_mix(key.term.hash(), key.remaining);
  }
};

// Suffix sets are shared between the many interleavings that reach the
// same continuation.
class SuffixEnumerator {
 public:
  std::shared_ptr<const TraceSet> suffixes(const Term& term,
                                           std::size_t remaining) {
    Key key{term, remaining};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    auto result = std::make_shared<TraceSet>();
    if (expresses_empty(term)) result->insert(GlobalTrace{});
    if (remaining > 0) {
      for (const auto& entry : frontier_actions(term)) {
        auto next = execute(term, entry.position);
        std::size_t left = remaining == kUnbounded ? kUnbounded : remaining - 1;
        for (const auto& tail : *suffixes(next.term, left)) {
          GlobalTrace trace;
          trace.reserve(tail.size() + 1);
          trace.push_back(next.action);
          trace.insert(trace.end(), tail.begin(), tail.end());
          result->insert(std::move(trace));
        }
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::unordered_map<Key, std::shared_ptr<const TraceSet>, KeyHash> memo_;
};

std::size_t length_cap(const ExplorationBound& bound) {
  return bound.max_trace_length.value_or(kUnbounded);
}

class TraceReader {
 public:
  explicit TraceReader(const GlobalTrace& trace) : trace_(trace) {}

  bool accepts(const Term& term, std::size_t index) {
    if (index == trace_.size()) return expresses_empty(term);
    Key key{term, index};
    if (rejected_.count(key)) return false;
    for (const auto& entry : frontier_actions(term)) {
      if (entry.action != trace_[index]) continue;
      if (accepts(execute(term, entry.position).term, index + 1)) return true;
    }
    rejected_.emplace(std::move(key), true);
    return false;
  }

 private:
  const GlobalTrace& trace_;
  std::unordered_map<Key, bool, KeyHash> rejected_;
};

void grow(ExecutionTree& tree, std::size_t index, const Term& bounded,
          std::size_t cap) {
  tree.nodes[index].accepting = expresses_empty(bounded);
  if (tree.nodes[index].depth >= cap) return;
  for (const auto& entry : frontier_actions(bounded)) {
    auto next = execute(bounded, entry.position);
    std::size_t child = tree.nodes.size();
    tree.nodes.push_back(
        {unbounded(next.term), false, tree.nodes[index].depth + 1, {}});
    tree.nodes[index].edges.push_back({entry.position, next.action, child});
    grow(tree, child, next.term, cap);
  }
}

}  // namespace

std::set<GlobalTrace> accepted_traces(const Term& term,
                                      const ExplorationBound& bound) {
  SuffixEnumerator enumerator;
  return *enumerator.suffixes(
      with_loop_budget(term, bound.max_loop_unrollings), length_cap(bound));
}

std::set<MultiTrace> accepted_multitraces(const Term& term,
                                          const Signature& sig,
                                          const ExplorationBound& bound) {
  std::set<MultiTrace> out;
  for (const auto& trace : accepted_traces(term, bound)) {
    out.insert(project(trace, sig));
  }
  return out;
}

bool is_accepted_trace(const Term& term, const GlobalTrace& trace) {
  TraceReader reader(trace);
  return reader.accepts(term, 0);
}

ExecutionTree explore_tree(const Term& term, const ExplorationBound& bound) {
  ExecutionTree tree;
  tree.nodes.push_back({term, false, 0, {}});
  grow(tree, 0, with_loop_budget(term, bound.max_loop_unrollings),
       length_cap(bound));
  return tree;
}

}  // namespace mtc
