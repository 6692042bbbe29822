#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "mtcheck/interaction.hpp"
#include "mtcheck/term.hpp"
#include "mtcheck/trace.hpp"

namespace mtc {

/// Standard mode decides membership (Pass/Fail). Extended mode refines the
/// failing cases for partially observed executions.
enum class Mode { Standard, Extended };

/// Sinks of the analysis graph. Standard mode only produces Cov and UnCov;
/// extended mode produces Cov, TooShort, Out and LackObs.
enum class CoverageVerdict { Cov, UnCov, TooShort, Out, LackObs };

enum class GlobalVerdict { Pass, Fail, WeakPass, Inconc };

std::string_view to_string(CoverageVerdict verdict);
std::string_view to_string(GlobalVerdict verdict);

enum class Strategy { DepthFirst, BreadthFirst };

struct SearchConfig {
  Strategy strategy = Strategy::DepthFirst;
  /// Merge vertices with equal (term, multi-trace).
  bool memoize = true;
  /// Maximum number of vertices expanded before giving up.
  std::optional<std::size_t> node_budget;
};

/// Label of a consuming step: `action` executed at `position`, removed from
/// the head of component `component` (0-based).
struct StepLabel {
  Action action;
  Position position;
  std::size_t component = 0;

  friend bool operator==(const StepLabel&, const StepLabel&) = default;
};

struct AnalysisPair {
  Term term;
  MultiTrace mu;

  friend bool operator==(const AnalysisPair&, const AnalysisPair&) = default;
};

using AnalysisVertex = std::variant<AnalysisPair, CoverageVerdict>;

struct Successor {
  /// Present for consuming steps, absent for edges into a verdict.
  std::optional<StepLabel> label;
  AnalysisVertex target;
};

/// Outgoing edges of (term, mu). Never empty. Consuming steps come first
/// ordered by frontier position.
std::vector<Successor> step_successors(const Term& term, const MultiTrace& mu,
                                       Mode mode);

/// Explicit (possibly partial) analysis graph. Vertex 0 is the initial
/// pair. Every edge into a verdict gets its own sink vertex so that each
/// path carries its own verdict.
struct AnalysisGraph {
  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::optional<StepLabel> label;
  };

  std::vector<AnalysisVertex> vertices;
  std::vector<Edge> edges;

  bool contains(CoverageVerdict verdict) const;
};

struct GraphShape {
  bool acyclic = true;
  /// Edges on the longest path from vertex 0; meaningful only if acyclic.
  std::size_t longest_path = 0;
};

GraphShape inspect(const AnalysisGraph& graph);

struct AnalysisResult {
  GlobalVerdict verdict = GlobalVerdict::Fail;
  /// On Pass, the consuming steps of one path to Cov; on extended Fail, of
  /// one path to Out.
  std::optional<std::vector<StepLabel>> witness;
  /// Pair vertices expanded by the search.
  std::size_t expanded = 0;
  /// Filled when requested: the part of the graph the search visited.
  AnalysisGraph explored;
};

/// Runs the graph search. Stops at the first Cov unless `exhaustive`.
/// Throws BudgetExhausted if the node budget runs out before the verdict
/// is certain.
AnalysisResult analyze(const Term& term, const MultiTrace& mu, Mode mode,
                       const SearchConfig& config = {},
                       bool record_graph = false, bool exhaustive = false);

/// Pass iff some path reaches Cov.
GlobalVerdict omega(const Term& term, const MultiTrace& mu,
                    const SearchConfig& config = {});

/// Pass / WeakPass / Inconc / Fail from the extended rules.
GlobalVerdict omega_tilde(const Term& term, const MultiTrace& mu,
                          const SearchConfig& config = {});

/// The whole reachable graph, with no early stop.
AnalysisGraph analysis_graph(const Term& term, const MultiTrace& mu, Mode mode,
                             const SearchConfig& config = {});

/// Actions of a witness path, in order: a global trace projecting onto the
/// consumed part of the multi-trace.
GlobalTrace witness_trace(const std::vector<StepLabel>& path);

}  // namespace mtc
