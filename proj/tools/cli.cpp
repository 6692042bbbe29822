#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "mtcheck/mtcheck.hpp"

namespace mtc::cli {

namespace {

namespace fs = std::filesystem;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path.string() + "'");
}

ModelFile load_model(const std::string& path) {
  try {
    return parse_model(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.code(), path + ":" + e.what(), e.line(), e.column());
  }
}

int exit_code(GlobalVerdict verdict) {
  switch (verdict) {
    case GlobalVerdict::Pass: return kPass;
    case GlobalVerdict::Fail: return kFail;
    case GlobalVerdict::WeakPass: return kWeakPass;
    case GlobalVerdict::Inconc: return kInconc;
  }
  return kFail;
}

struct CheckOptions {
  std::string model;
  std::string trace;
  bool extended = false;
  Strategy strategy = Strategy::DepthFirst;
  bool no_memo = false;
  std::optional<std::size_t> budget;
  std::string dot_out;
  bool witness = false;
};

int run_check(const CheckOptions& opt, std::ostream& out) {
  auto model = load_model(opt.model);
  MultiTrace mu;
  try {
    mu = parse_multitrace(read_file(opt.trace), model.signature);
  } catch (const ParseError& e) {
    throw ParseError(e.code(), opt.trace + ":" + e.what(), e.line(), e.column());
  }
  SearchConfig config{opt.strategy, !opt.no_memo, opt.budget};
  Mode mode = opt.extended ? Mode::Extended : Mode::Standard;

  auto result = analyze(model.term, mu, mode, config);
  out << to_string(result.verdict) << "\n";
  if (opt.witness) {
    if (result.witness) {
      out << "witness: " << to_string(witness_trace(*result.witness)) << "\n";
      for (const auto& step : *result.witness) {
        out << "  " << step.action.to_string() << " @ " << step.position.to_string()
            << " from " << model.signature.lifelines()[step.component] << "\n";
      }
    } else {
      out << "witness: none\n";
    }
  }
  if (!opt.dot_out.empty()) {
    auto graph = analysis_graph(model.term, mu, mode, config);
    write_file(opt.dot_out, render_dot(graph, model.signature));
  }
  return exit_code(result.verdict);
}

struct ExploreOptions {
  std::string model;
  std::uint32_t loop_bound = 1;
  std::optional<std::size_t> max_len;
  std::string dot_out;
  bool list_traces = false;
};

int run_explore(const ExploreOptions& opt, std::ostream& out) {
  auto model = load_model(opt.model);
  ExplorationBound bound{opt.loop_bound, opt.max_len};
  auto traces = accepted_traces(model.term, bound);
  auto multitraces = accepted_multitraces(model.term, model.signature, bound);
  out << "traces: " << traces.size() << "\n";
  out << "multi-traces: " << multitraces.size() << "\n";
  if (opt.list_traces) {
    for (const auto& trace : traces) out << "  " << to_string(trace) << "\n";
  }
  if (!opt.dot_out.empty()) {
    write_file(opt.dot_out, render_dot(explore_tree(model.term, bound)));
  }
  return kPass;
}

int run_draw(const std::string& model_path, std::ostream& out) {
  out << render_dot(load_model(model_path).term);
  return kPass;
}

int run_gen_sat(const std::string& formula_path, const std::string& outdir,
                std::ostream& out) {
  auto formula = sat::parse_dimacs(read_file(formula_path));
  auto instance = sat::reduce(formula);

  std::error_code ec;
  fs::create_directories(outdir, ec);
  if (ec) throw IoError("cannot create '" + outdir + "': " + ec.message());
  fs::path model_path = fs::path(outdir) / "model.isd";
  fs::path trace_path = fs::path(outdir) / "trace.mtr";
  write_file(model_path, print_model({instance.signature, instance.term}));
  write_file(trace_path, print_multitrace(instance.mu, instance.signature) + "\n");
  out << "wrote " << model_path.string() << "\n";
  out << "wrote " << trace_path.string() << "\n";
  out << "formula: " << formula.to_string() << "\n";

  if (formula.num_vars > sat::kMaxBruteForceVars) {
    out << "oracle: skipped (more than " << sat::kMaxBruteForceVars << " variables)\n";
    return kPass;
  }
  auto check = sat::check_reduction(formula);
  if (check.satisfiable()) {
    out << "oracle: satisfiable (" << sat::to_string(*check.assignment) << ")\n";
  } else {
    out << "oracle: unsatisfiable\n";
  }
  out << "omega: " << to_string(check.verdict) << "\n";
  if (!check.consistent()) {
    out << "mismatch between oracle and membership analysis\n";
    return kFail;
  }
  return kPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Check multi-traces against interaction models", "mtcheck"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mtcheck 0.1.0");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Decide whether a multi-trace is accepted");
  check_cmd->add_option("model", check.model, "Model file (.isd)")->required();
  check_cmd->add_option("trace", check.trace, "Multi-trace file (.mtr)")->required();
  check_cmd->add_flag("--extended", check.extended,
                      "Refine Fail into WeakPass / Inconc / Fail for partial logs");
  std::map<std::string, Strategy> strategies{{"dfs", Strategy::DepthFirst},
                                             {"bfs", Strategy::BreadthFirst}};
  check_cmd->add_option("--search", check.strategy, "Search order")
      ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case))
      ->default_str("dfs");
  check_cmd->add_flag("--no-memo", check.no_memo, "Do not merge identical vertices");
  check_cmd->add_option("--budget", check.budget, "Maximum vertices to expand")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--dot-out", check.dot_out, "Write the analysis graph as DOT");
  check_cmd->add_flag("--witness", check.witness, "Print the path behind the verdict");

  ExploreOptions explore;
  auto* explore_cmd = app.add_subcommand("explore", "Enumerate accepted traces");
  explore_cmd->add_option("model", explore.model, "Model file (.isd)")->required();
  explore_cmd->add_option("--loop-bound", explore.loop_bound, "Unrollings per loop")
      ->capture_default_str();
  explore_cmd->add_option("--max-len", explore.max_len, "Longest trace to enumerate");
  explore_cmd->add_option("--dot-out", explore.dot_out, "Write the execution tree as DOT");
  explore_cmd->add_flag("--list-traces", explore.list_traces, "Print every trace");

  std::string draw_model;
  auto* draw_cmd = app.add_subcommand("draw", "Print the term tree as DOT");
  draw_cmd->add_option("model", draw_model, "Model file (.isd)")->required();

  std::string formula_path, outdir;
  auto* sat_cmd = app.add_subcommand("gen-sat", "Build a membership instance from a 3-CNF formula");
  sat_cmd->add_option("formula", formula_path, "DIMACS file, three literals per clause")
      ->required();
  sat_cmd->add_option("outdir", outdir, "Directory for model.isd and trace.mtr")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*check_cmd) return run_check(check, out);
    if (*explore_cmd) return run_explore(explore, out);
    if (*draw_cmd) return run_draw(draw_model, out);
    return run_gen_sat(formula_path, outdir, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << " [" << to_string(e.code()) << "]\n";
    return e.code() == Errc::BudgetExhausted ? kBudget : kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace mtc::cli
