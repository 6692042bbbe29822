#include "mtcheck/dot.hpp"

#include <sstream>
#include <variant>

namespace mtc {

namespace {

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string node_label(const Term& term) {
  switch (term.op()) {
    case Op::Empty: return "∅";
    case Op::Action: return term.action().to_string();
    default: return op_name(term.op());
  }
}

std::string display(const Term& term) {
  return term.is_empty() ? "∅" : term.to_string();
}

std::size_t emit_term(std::ostringstream& out, const Term& term,
                      std::size_t& next) {
  std::size_t id = next++;
  out << "  n" << id << " [label=" << quote(node_label(term)) << "];\n";
  auto child = [&](const Term& sub) {
    std::size_t c = emit_term(out, sub, next);
    out << "  n" << id << " -> n" << c << ";\n";
  };
  if (is_binary(term.op())) {
    child(term.left());
    child(term.right());
  } else if (is_loop(term.op())) {
    child(term.body());
  }
  return id;
}

std::string step_label(const StepLabel& label) {
  return label.action.to_string() + "@" + label.position.to_string();
}

const char* sink_color(CoverageVerdict verdict) {
  switch (verdict) {
    case CoverageVerdict::Cov: return "palegreen";
    case CoverageVerdict::TooShort: return "khaki";
    case CoverageVerdict::LackObs: return "lightblue";
    default: return "lightpink";
  }
}

}  // namespace

std::string render_dot(const Term& term) {
  std::ostringstream out;
  out << "digraph interaction {\n  node [shape=plaintext];\n";
  std::size_t next = 0;
  emit_term(out, term, next);
  out << "}\n";
  return out.str();
}

std::string render_dot(const ExecutionTree& tree) {
  std::ostringstream out;
  out << "digraph execution {\n  node [shape=box];\n";
  for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
    const auto& node = tree.nodes[k];
    out << "  n" << k << " [label=" << quote(display(node.term));
    if (node.accepting) out << ", peripheries=2";
    out << "];\n";
  }
  for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
    for (const auto& edge : tree.nodes[k].edges) {
      out << "  n" << k << " -> n" << edge.child << " [label="
          << quote(edge.action.to_string() + "@" + edge.position.to_string())
          << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string render_dot(const AnalysisGraph& graph, const Signature& sig) {
  std::ostringstream out;
  out << "digraph analysis {\n";
  for (std::size_t k = 0; k < graph.vertices.size(); ++k) {
    out << "  v" << k;
    if (const auto* pair = std::get_if<AnalysisPair>(&graph.vertices[k])) {
      out << " [shape=ellipse, label="
          << quote(display(pair->term) + "\n" + pair->mu.to_string(sig))
          << "];\n";
    } else {
      auto verdict = std::get<CoverageVerdict>(graph.vertices[k]);
      out << " [shape=box, style=filled, fillcolor=" << sink_color(verdict)
          << ", label=" << quote(std::string(to_string(verdict))) << "];\n";
    }
  }
  for (const auto& edge : graph.edges) {
    out << "  v" << edge.from << " -> v" << edge.to;
    if (edge.label) out << " [label=" << quote(step_label(*edge.label)) << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mtc
