#pragma once

#include <string>

#include "mtcheck/analyzer.hpp"
#include "mtcheck/explorer.hpp"
#include "mtcheck/term.hpp"
#include "mtcheck/trace.hpp"

namespace mtc {

// Graphviz DOT renderers. Node identifiers are assigned in a fixed
// traversal order, so equal inputs give byte-identical output.

/// One node per position, numbered in preorder.
std::string render_dot(const Term& term);

std::string render_dot(const ExecutionTree& tree);

/// `sig` names the multi-trace components in vertex labels.
std::string render_dot(const AnalysisGraph& graph, const Signature& sig);

}  // namespace mtc
