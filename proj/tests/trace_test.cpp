#include <gtest/gtest.h>

#include <unordered_set>

#include "fixtures.hpp"
#include "mtcheck/error.hpp"
#include "mtcheck/trace.hpp"

namespace mtc {
namespace {

using testing::in;
using testing::out;

Errc code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::SyntaxError;
}

TEST(Signature, RejectsEmptyAndDuplicateNames) {
  EXPECT_EQ(code_of([] { Signature({}, {"m"}); }), Errc::InvalidSignature);
  EXPECT_EQ(code_of([] { Signature({"a"}, {}); }), Errc::InvalidSignature);
  EXPECT_EQ(code_of([] { Signature({"a", "a"}, {"m"}); }), Errc::InvalidSignature);
  EXPECT_EQ(code_of([] { Signature({"a"}, {"m", "m"}); }), Errc::InvalidSignature);
}

TEST(Signature, IndexesLifelinesInDeclarationOrder) {
  Signature sig({"c", "a", "b"}, {"m"});
  EXPECT_EQ(sig.lifeline_index("c"), 0u);
  EXPECT_EQ(sig.lifeline_index("b"), 2u);
  EXPECT_FALSE(sig.lifeline_index("d"));
  EXPECT_TRUE(sig.has_message("m"));
  EXPECT_FALSE(sig.has_message("n"));
}

TEST(Action, PrintsWithDirectionMarker) {
  EXPECT_EQ(out("a", "m1").to_string(), "a!m1");
  EXPECT_EQ(in("c", "m2").to_string(), "c?m2");
  EXPECT_NE(out("a", "m"), in("a", "m"));
  EXPECT_EQ(to_string(GlobalTrace{}), "eps");
  EXPECT_EQ(to_string(GlobalTrace{out("a", "m"), in("b", "m")}), "a!m.b?m");
}

TEST(Project, DistributesActionsOntoLifelines) {
  Signature sig({"a", "b", "c", "d"}, {"m1", "m2"});
  GlobalTrace trace{out("a", "m1"), in("c", "m1"), out("c", "m2"), in("d", "m2")};
  MultiTrace expected({{out("a", "m1")}, {}, {in("c", "m1"), out("c", "m2")}, {in("d", "m2")}});
  EXPECT_EQ(project(trace, sig), expected);
}

TEST(Project, EmptyTraceGivesEmptyComponents) {
  Signature sig({"a", "b", "c"}, {"m"});
  MultiTrace mu = project({}, sig);
  EXPECT_EQ(mu, MultiTrace::empty(sig));
  EXPECT_EQ(mu.arity(), 3u);
  EXPECT_TRUE(mu.is_empty());
}

TEST(Project, KeepsPerLifelineOrder) {
  auto sig = testing::small_signature();
  GlobalTrace trace{out("b", "m2"), in("c", "m2"), out("b", "m3")};
  EXPECT_EQ(project(trace, sig),
            MultiTrace({{out("b", "m2"), out("b", "m3")}, {in("c", "m2")}}));
}

TEST(Project, RejectsForeignNames) {
  auto sig = testing::small_signature();
  EXPECT_EQ(code_of([&] { project({out("z", "m2")}, sig); }), Errc::UnknownLifeline);
  EXPECT_EQ(code_of([&] { project({out("b", "zz")}, sig); }), Errc::UnknownMessage);
}

TEST(MultiTrace, LengthSumsComponents) {
  EXPECT_EQ(MultiTrace::empty(testing::running_signature()).length(), 0u);
  EXPECT_EQ(testing::running_multitrace().length(), 3u);
  MultiTrace mu({{out("b", "m2"), out("b", "m3")}, {in("c", "m2")}});
  EXPECT_EQ(multitrace_length(mu), 3u);
}

TEST(MultiTrace, OverValidatesComponents) {
  auto sig = testing::small_signature();
  EXPECT_EQ(code_of([&] { MultiTrace::over(sig, {{}}); }), Errc::MissingComponent);
  EXPECT_EQ(code_of([&] { MultiTrace::over(sig, {{out("c", "m2")}, {}}); }),
            Errc::WrongLifeline);
  EXPECT_EQ(code_of([&] { MultiTrace::over(sig, {{out("b", "m9")}, {}}); }),
            Errc::UnknownMessage);
  EXPECT_NO_THROW(MultiTrace::over(sig, {{out("b", "m3")}, {}}));
}

TEST(MultiTrace, PrintsLabelledComponents) {
  EXPECT_EQ(testing::running_multitrace().to_string(testing::running_signature()),
            "{a: a!m1.a?m4; b: eps; c: c!m4}");
}

TEST(MultiTrace, HashAgreesWithEquality) {
  MultiTrace x({{out("a", "m")}, {}});
  MultiTrace y({{out("a", "m")}, {}});
  MultiTrace z({{}, {out("a", "m")}});
  EXPECT_EQ(x, y);
  EXPECT_EQ(x.hash(), y.hash());
  EXPECT_NE(x, z);
  std::unordered_set<MultiTrace> set{x, y, z};
  EXPECT_EQ(set.size(), 2u);
}

TEST(HeadActions, ListsNonEmptyComponents) {
  EXPECT_TRUE(head_actions(MultiTrace::empty(testing::running_signature())).empty());
  auto heads = head_actions(testing::running_multitrace());
  ASSERT_EQ(heads.size(), 2u);
  EXPECT_EQ(heads[0], (HeadAction{0, out("a", "m1")}));
  EXPECT_EQ(heads[1], (HeadAction{2, out("c", "m4")}));

  auto single = head_actions(MultiTrace({{out("b", "m3")}, {}}));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0], (HeadAction{0, out("b", "m3")}));
}

TEST(Consume, RemovesMatchingHead) {
  EXPECT_EQ(consume(testing::running_multitrace(), 0, out("a", "m1")),
            MultiTrace({{in("a", "m4")}, {}, {out("c", "m4")}}));
  EXPECT_EQ(consume(MultiTrace({{out("b", "m3")}, {}}), 0, out("b", "m3")),
            MultiTrace({{}, {}}));
}

TEST(Consume, RejectsMismatchedHead) {
  MultiTrace mu({{}, {in("c", "m2")}});
  EXPECT_EQ(code_of([&] { consume(mu, 0, out("b", "m2")); }), Errc::HeadMismatch);
  EXPECT_EQ(code_of([&] { consume(mu, 1, out("c", "m2")); }), Errc::HeadMismatch);
  EXPECT_EQ(code_of([&] { consume(mu, 7, in("c", "m2")); }), Errc::HeadMismatch);
}

}  // namespace
}  // namespace mtc
