#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mtcheck/analyzer.hpp"
#include "mtcheck/error.hpp"
#include "mtcheck/explorer.hpp"

namespace mtc {
namespace {

using testing::emit;
using testing::in;
using testing::out;
using testing::recv;

const SearchConfig kDfs{Strategy::DepthFirst, true, std::nullopt};
const SearchConfig kBfs{Strategy::BreadthFirst, true, std::nullopt};
const SearchConfig kDfsNoMemo{Strategy::DepthFirst, false, std::nullopt};
const SearchConfig kBfsNoMemo{Strategy::BreadthFirst, false, std::nullopt};
const SearchConfig kConfigs[] = {kDfs, kBfs, kDfsNoMemo, kBfsNoMemo};

CoverageVerdict only_sink(const std::vector<Successor>& successors) {
  EXPECT_EQ(successors.size(), 1u);
  EXPECT_FALSE(successors.front().label);
  return std::get<CoverageVerdict>(successors.front().target);
}

TEST(StepSuccessors, EmptyMultiTrace) {
  auto sig = testing::handshake_signature();
  auto none = MultiTrace::empty(sig);
  EXPECT_EQ(only_sink(step_successors(Term::empty(), none, Mode::Standard)),
            CoverageVerdict::Cov);
  EXPECT_EQ(only_sink(step_successors(Term::empty(), none, Mode::Extended)),
            CoverageVerdict::Cov);
  EXPECT_EQ(only_sink(step_successors(testing::handshake(), none, Mode::Standard)),
            CoverageVerdict::UnCov);
  EXPECT_EQ(only_sink(step_successors(testing::handshake(), none, Mode::Extended)),
            CoverageVerdict::TooShort);
}

TEST(StepSuccessors, NoMatchingHead) {
  MultiTrace lacking({{}, {in("b", "m")}});
  EXPECT_EQ(only_sink(step_successors(testing::handshake(), lacking, Mode::Standard)),
            CoverageVerdict::UnCov);
  EXPECT_EQ(only_sink(step_successors(testing::handshake(), lacking, Mode::Extended)),
            CoverageVerdict::LackObs);
  MultiTrace full({{out("a", "x")}, {in("b", "m")}});
  EXPECT_EQ(only_sink(step_successors(testing::handshake(), full, Mode::Extended)),
            CoverageVerdict::Out);
}

TEST(StepSuccessors, ConsumesMatchingHeads) {
  auto successors = step_successors(testing::running_example(),
                                    testing::running_multitrace(), Mode::Standard);
  ASSERT_EQ(successors.size(), 3u);
  std::vector<std::string> positions;
  for (const auto& s : successors) positions.push_back(s.label->position.to_string());
  EXPECT_EQ(positions, (std::vector<std::string>{"1111", "21", "221"}));
  EXPECT_EQ(successors[0].label->component, 0u);
  EXPECT_EQ(successors[2].label->component, 2u);
  const auto& pair = std::get<AnalysisPair>(successors[2].target);
  EXPECT_EQ(pair.mu, MultiTrace({{out("a", "m1"), in("a", "m4")}, {}, {}}));
  EXPECT_EQ(pair.term, execute(testing::running_example(), Position::parse("221")).term);
}

TEST(Omega, RunningExamplePasses) {
  for (const auto& cfg : kConfigs) {
    EXPECT_EQ(omega(testing::running_example(), testing::running_multitrace(), cfg),
              GlobalVerdict::Pass);
  }
}

TEST(Omega, SmallExample) {
  EXPECT_EQ(omega(testing::small_example(), MultiTrace({{out("b", "m3")}, {}})),
            GlobalVerdict::Pass);
  EXPECT_EQ(omega(testing::small_example(), MultiTrace({{out("b", "m2")}, {in("c", "m2")}})),
            GlobalVerdict::Fail);
}

TEST(Omega, PartialObservationFails) {
  EXPECT_EQ(omega(testing::handshake(), MultiTrace({{}, {in("b", "m")}})),
            GlobalVerdict::Fail);
}

TEST(OmegaTilde, RefinedVerdicts) {
  for (const auto& cfg : kConfigs) {
    EXPECT_EQ(omega_tilde(testing::handshake(), MultiTrace({{out("a", "m")}, {}}), cfg),
              GlobalVerdict::WeakPass);
    EXPECT_EQ(omega_tilde(testing::handshake(), MultiTrace({{}, {in("b", "m")}}), cfg),
              GlobalVerdict::Inconc);
    EXPECT_EQ(omega_tilde(emit("a", "m1"), MultiTrace({{out("a", "m2")}}), cfg),
              GlobalVerdict::Fail);
    EXPECT_EQ(omega_tilde(testing::running_example(), testing::running_multitrace(), cfg),
              GlobalVerdict::Pass);
  }
}

TEST(OmegaTilde, TooShortOutranksLackObs) {
  Term cut_short = Term::strict(emit("a", "m"), Term::strict(emit("c", "n"), recv("b", "m")));
  Term blocked = Term::strict(emit("a", "m"), Term::strict(recv("b", "m"), emit("c", "n")));
  Term t = Term::alt(cut_short, blocked);
  MultiTrace mu({{out("a", "m")}, {}, {out("c", "n")}});
  auto g = analysis_graph(t, mu, Mode::Extended);
  EXPECT_TRUE(g.contains(CoverageVerdict::TooShort));
  EXPECT_TRUE(g.contains(CoverageVerdict::LackObs));
  EXPECT_EQ(omega_tilde(t, mu), GlobalVerdict::WeakPass);
  EXPECT_EQ(omega(t, mu), GlobalVerdict::Fail);
}

TEST(OmegaTilde, LackObsOutranksOut) {
  Term t = Term::alt(Term::strict(emit("a", "m"), emit("a", "k")),
                     Term::strict(recv("b", "z"), recv("b", "k")));
  MultiTrace mu({{out("a", "m"), out("a", "z")}, {in("b", "z")}});
  auto g = analysis_graph(t, mu, Mode::Extended);
  EXPECT_TRUE(g.contains(CoverageVerdict::Out));
  EXPECT_TRUE(g.contains(CoverageVerdict::LackObs));
  EXPECT_EQ(omega_tilde(t, mu), GlobalVerdict::Inconc);
  EXPECT_EQ(omega(t, mu), GlobalVerdict::Fail);
}

TEST(Analyze, WitnessReordersMultiTrace) {
  auto sig = testing::running_signature();
  for (const auto& cfg : {kDfs, kBfs}) {
    auto result = analyze(testing::running_example(), testing::running_multitrace(),
                          Mode::Standard, cfg);
    ASSERT_TRUE(result.witness);
    EXPECT_EQ(result.witness->size(), 3u);
    GlobalTrace trace = witness_trace(*result.witness);
    EXPECT_EQ(project(trace, sig), testing::running_multitrace());
    EXPECT_TRUE(is_accepted_trace(testing::running_example(), trace));
  }
}

TEST(Analyze, ExtendedFailWitnessEndsOnOut) {
  Term t = Term::strict(emit("a", "m1"), emit("a", "m2"));
  auto result = analyze(t, MultiTrace({{out("a", "m1"), out("a", "m1")}}), Mode::Extended);
  EXPECT_EQ(result.verdict, GlobalVerdict::Fail);
  ASSERT_TRUE(result.witness);
  ASSERT_EQ(result.witness->size(), 1u);
  EXPECT_EQ(result.witness->front().action, out("a", "m1"));
}

TEST(Analyze, NoWitnessOnStandardFail) {
  auto result = analyze(testing::handshake(), MultiTrace({{}, {in("b", "m")}}), Mode::Standard);
  EXPECT_FALSE(result.witness);
}

TEST(Analyze, NodeBudget) {
  SearchConfig tight{Strategy::BreadthFirst, true, 1};
  try {
    omega(testing::running_example(), testing::running_multitrace(), tight);
    FAIL() << "expected BudgetExhausted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExhausted);
  }
  SearchConfig zero{Strategy::DepthFirst, true, 0};
  EXPECT_THROW(omega(Term::empty(), MultiTrace(std::vector<GlobalTrace>(1)), zero), Error);
  SearchConfig roomy{Strategy::DepthFirst, true, 100};
  EXPECT_EQ(omega(testing::running_example(), testing::running_multitrace(), roomy),
            GlobalVerdict::Pass);
  // A single expansion settles a verdict reached from the root.
  SearchConfig one{Strategy::DepthFirst, true, 1};
  EXPECT_EQ(omega(Term::empty(), MultiTrace(std::vector<GlobalTrace>(1)), one), GlobalVerdict::Pass);
}

TEST(AnalysisGraph, TrivialGraph) {
  auto g = analysis_graph(Term::empty(), MultiTrace({{}, {}}), Mode::Standard);
  ASSERT_EQ(g.vertices.size(), 2u);
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(std::get<CoverageVerdict>(g.vertices[1]), CoverageVerdict::Cov);
  EXPECT_EQ(g.edges[0].from, 0u);
  EXPECT_EQ(g.edges[0].to, 1u);
}

TEST(AnalysisGraph, RunningExampleShape) {
  for (const auto& cfg : kConfigs) {
    auto g = analysis_graph(testing::running_example(), testing::running_multitrace(),
                            Mode::Standard, cfg);
    EXPECT_TRUE(g.contains(CoverageVerdict::Cov));
    EXPECT_TRUE(g.contains(CoverageVerdict::UnCov));
    auto shape = inspect(g);
    EXPECT_TRUE(shape.acyclic);
    EXPECT_LE(shape.longest_path, testing::running_multitrace().length() + 1);
    EXPECT_EQ(shape.longest_path, 4u);
  }
}

TEST(AnalysisGraph, EdgesShrinkMultiTrace) {
  auto g = analysis_graph(testing::running_example(), testing::running_multitrace(),
                          Mode::Extended);
  for (const auto& e : g.edges) {
    const auto& from = std::get<AnalysisPair>(g.vertices[e.from]);
    if (const auto* to = std::get_if<AnalysisPair>(&g.vertices[e.to])) {
      EXPECT_EQ(to->mu.length() + 1, from.mu.length());
      ASSERT_TRUE(e.label);
    } else {
      EXPECT_FALSE(e.label);
    }
  }
}

TEST(AnalysisGraph, MemoizationMergesVertices) {
  // Two interleavings of independent emissions reach the same pair.
  Term t = Term::par(emit("a", "m"), emit("b", "m"));
  MultiTrace mu({{out("a", "m")}, {out("b", "m")}});
  auto merged = analysis_graph(t, mu, Mode::Standard, kDfs);
  auto tree = analysis_graph(t, mu, Mode::Standard, kDfsNoMemo);
  EXPECT_LT(merged.vertices.size(), tree.vertices.size());
  EXPECT_TRUE(inspect(merged).acyclic);
}

TEST(Inspect, DetectsCycles) {
  AnalysisGraph g;
  g.vertices = {CoverageVerdict::Cov, CoverageVerdict::Cov};
  g.edges = {{0, 1, std::nullopt}, {1, 0, std::nullopt}};
  EXPECT_FALSE(inspect(g).acyclic);
}

TEST(Verdicts, Names) {
  EXPECT_EQ(to_string(GlobalVerdict::WeakPass), "WeakPass");
  EXPECT_EQ(to_string(GlobalVerdict::Inconc), "Inconc");
  EXPECT_EQ(to_string(CoverageVerdict::LackObs), "LackObs");
  EXPECT_EQ(to_string(CoverageVerdict::TooShort), "TooShort");
}

}  // namespace
}  // namespace mtc
