#include "mtcheck/analyzer.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_map>

#include "hash.hpp"
#include "mtcheck/error.hpp"

namespace mtc {

std::string_view to_string(CoverageVerdict verdict) {
  switch (verdict) {
    case CoverageVerdict::Cov: return "Cov";
    case CoverageVerdict::UnCov: return "UnCov";
    case CoverageVerdict::TooShort: return "TooShort";
    case CoverageVerdict::Out: return "Out";
    case CoverageVerdict::LackObs: return "LackObs";
  }
  return "?";
}

std::string_view to_string(GlobalVerdict verdict) {
  switch (verdict) {
    case GlobalVerdict::Pass: return "Pass";
    case GlobalVerdict::Fail: return "Fail";
    case GlobalVerdict::WeakPass: return "WeakPass";
    case GlobalVerdict::Inconc: return "Inconc";
  }
  return "?";
}

std::vector<Successor> step_successors(const Term& term, const MultiTrace& mu,
                                       Mode mode) {
  std::vector<Successor> out;
  if (mu.is_empty()) {
    if (expresses_empty(term)) {
      out.push_back({std::nullopt, CoverageVerdict::Cov});
    } else {
      out.push_back({std::nullopt, mode == Mode::Standard
                                       ? CoverageVerdict::UnCov
                                       : CoverageVerdict::TooShort});
    }
    return out;
  }

  const auto heads = head_actions(mu);
  for (const auto& entry : frontier_actions(term)) {
    for (const auto& head : heads) {
      if (head.action != entry.action) continue;
      auto next = execute(term, entry.position);
      out.push_back({StepLabel{entry.action, entry.position, head.component},
                     AnalysisPair{std::move(next.term),
                                  consume(mu, head.component, head.action)}});
    }
  }
  if (!out.empty()) return out;

  if (mode == Mode::Standard) {
    out.push_back({std::nullopt, CoverageVerdict::UnCov});
  } else {
    bool all_observed = heads.size() == mu.arity();
    out.push_back({std::nullopt, all_observed ? CoverageVerdict::Out
                                              : CoverageVerdict::LackObs});
  }
  return out;
}

bool AnalysisGraph::contains(CoverageVerdict verdict) const {
  return std::any_of(vertices.begin(), vertices.end(), [&](const auto& v) {
    const auto* sink = std::get_if<CoverageVerdict>(&v);
    return sink && *sink == verdict;
  });
}

GraphShape inspect(const AnalysisGraph& graph) {
  GraphShape shape;
  const std::size_t n = graph.vertices.size();
  if (n == 0) return shape;
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& edge : graph.edges) {
    out[edge.from].push_back(edge.to);
    ++indegree[edge.to];
  }
  // Kahn's algorithm; longest distance from vertex 0 in topological order.
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> distance(n, kUnreached);
  distance[0] = 0;
  std::size_t visited = 0;
  while (!ready.empty()) {
    auto v = ready.front();
    ready.pop_front();
    ++visited;
    for (auto w : out[v]) {
      if (distance[v] != kUnreached) {
        if (distance[w] == kUnreached || distance[w] < distance[v] + 1) {
          distance[w] = distance[v] + 1;
        }
        shape.longest_path = std::max(shape.longest_path, distance[w]);
      }
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  shape.acyclic = visited == n;
  return shape;
}

namespace {

struct PairHash {
  std::size_t operator()(const AnalysisPair& p) const {
    return detail::hash_mix(p.term.hash(), p.mu.hash());
  }
};

class Search {
 public:
  Search(Mode mode, const SearchConfig& config, bool record, bool exhaustive)
      : mode_(mode), config_(config), record_(record), exhaustive_(exhaustive) {
    if (config_.node_budget && *config_.node_budget == 0) {
      throw Error(Errc::BudgetExhausted, "node budget must be at least 1");
    }
  }

  AnalysisResult run(const Term& term, const MultiTrace& mu) {
    pending_.push_back(*discover(AnalysisPair{term, mu}, std::nullopt, std::nullopt));
    while (!pending_.empty() && !(found(CoverageVerdict::Cov) && !exhaustive_)) {
      std::size_t index;
      if (config_.strategy == Strategy::DepthFirst) {
        index = pending_.back();
        pending_.pop_back();
      } else {
        index = pending_.front();
        pending_.pop_front();
      }
      if (config_.node_budget && result_.expanded >= *config_.node_budget) {
        throw Error(Errc::BudgetExhausted,
                    "node budget of " + std::to_string(*config_.node_budget) +
                        " exhausted before reaching a verdict");
      }
      expand(index);
    }
    finish();
    return std::move(result_);
  }

 private:
  struct Node {
    AnalysisPair pair;
    std::optional<std::size_t> parent;
    std::optional<StepLabel> via;
    std::size_t vertex = 0;
  };

  bool found(CoverageVerdict v) const {
    return sink_owner_[static_cast<std::size_t>(v)].has_value();
  }

  // Returns the index of a vertex not seen before, nothing on a merge.
  std::optional<std::size_t> discover(AnalysisPair pair,
                                      std::optional<std::size_t> parent,
                                      const std::optional<StepLabel>& via) {
    if (config_.memoize) {
      if (auto it = seen_.find(pair); it != seen_.end()) {
        record_edge(parent, nodes_[it->second].vertex, via);
        return std::nullopt;
      }
    }
    std::size_t index = nodes_.size();
    std::size_t vertex = record_ ? add_vertex(pair) : 0;
    if (config_.memoize) seen_.emplace(pair, index);
    nodes_.push_back({std::move(pair), parent, via, vertex});
    record_edge(parent, vertex, via);
    return index;
  }

  void expand(std::size_t index) {
    ++result_.expanded;
    // Copies: discover() may reallocate nodes_.
    const Term term = nodes_[index].pair.term;
    const MultiTrace mu = nodes_[index].pair.mu;
    auto successors = step_successors(term, mu, mode_);

    std::vector<std::size_t> fresh;
    for (auto& successor : successors) {
      if (auto* sink = std::get_if<CoverageVerdict>(&successor.target)) {
        auto& owner = sink_owner_[static_cast<std::size_t>(*sink)];
        if (!owner) owner = index;
        if (record_) {
          record_edge(index, add_vertex(*sink), std::nullopt);
        }
        continue;
      }
      if (auto child = discover(
              std::move(std::get<AnalysisPair>(successor.target)), index,
              successor.label)) {
        fresh.push_back(*child);
      }
    }
    // Depth-first pops from the back, so queue in reverse to explore the
    // first successor first.
    if (config_.strategy == Strategy::DepthFirst) {
      pending_.insert(pending_.end(), fresh.rbegin(), fresh.rend());
    } else {
      pending_.insert(pending_.end(), fresh.begin(), fresh.end());
    }
  }

  std::size_t add_vertex(AnalysisVertex vertex) {
    result_.explored.vertices.push_back(std::move(vertex));
    return result_.explored.vertices.size() - 1;
  }

  void record_edge(std::optional<std::size_t> parent, std::size_t to,
                   const std::optional<StepLabel>& via) {
    if (!record_ || !parent) return;
    result_.explored.edges.push_back({nodes_[*parent].vertex, to, via});
  }

  std::vector<StepLabel> path_to(std::size_t index) const {
    std::vector<StepLabel> path;
    for (std::optional<std::size_t> cursor = index; cursor;
         cursor = nodes_[*cursor].parent) {
      if (nodes_[*cursor].via) path.push_back(*nodes_[*cursor].via);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  void finish() {
    auto owner = [&](CoverageVerdict v) {
      return sink_owner_[static_cast<std::size_t>(v)];
    };
    if (auto cov = owner(CoverageVerdict::Cov)) {
      result_.verdict = GlobalVerdict::Pass;
      result_.witness = path_to(*cov);
      return;
    }
    if (mode_ == Mode::Standard) {
      result_.verdict = GlobalVerdict::Fail;
      return;
    }
    if (found(CoverageVerdict::TooShort)) {
      result_.verdict = GlobalVerdict::WeakPass;
    } else if (found(CoverageVerdict::LackObs)) {
      result_.verdict = GlobalVerdict::Inconc;
    } else {
      // Every pair has a successor, so an exhausted search that met neither
      // Cov, TooShort nor LackObs has met Out.
      assert(found(CoverageVerdict::Out));
      result_.verdict = GlobalVerdict::Fail;
      result_.witness = path_to(*owner(CoverageVerdict::Out));
    }
  }

  Mode mode_;
  SearchConfig config_;
  bool record_;
  bool exhaustive_;
  std::vector<Node> nodes_;
  std::deque<std::size_t> pending_;
  std::unordered_map<AnalysisPair, std::size_t, PairHash> seen_;
  std::optional<std::size_t> sink_owner_[5];
  AnalysisResult result_;
};

}  // namespace

AnalysisResult analyze(const Term& term, const MultiTrace& mu, Mode mode,
                       const SearchConfig& config, bool record_graph,
                       bool exhaustive) {
  return Search(mode, config, record_graph, exhaustive).run(term, mu);
}

GlobalVerdict omega(const Term& term, const MultiTrace& mu,
                    const SearchConfig& config) {
  return analyze(term, mu, Mode::Standard, config).verdict;
}

GlobalVerdict omega_tilde(const Term& term, const MultiTrace& mu,
                          const SearchConfig& config) {
  return analyze(term, mu, Mode::Extended, config).verdict;
}

AnalysisGraph analysis_graph(const Term& term, const MultiTrace& mu, Mode mode,
                             const SearchConfig& config) {
  return analyze(term, mu, mode, config, true, true).explored;
}

GlobalTrace witness_trace(const std::vector<StepLabel>& path) {
  GlobalTrace trace;
  trace.reserve(path.size());
  for (const auto& step : path) trace.push_back(step.action);
  return trace;
}

}  // namespace mtc
