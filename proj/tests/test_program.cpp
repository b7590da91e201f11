#include <gtest/gtest.h>

#include "agr/automata.hpp"
#include "agr/composition.hpp"
#include "agr/dsl.hpp"
#include "agr/semantics.hpp"
#include "support/support.hpp"

using namespace agr;
using namespace agr::test;

class ActionTest : public ::testing::Test {};

TEST_F(ActionTest, CanonicalKeys) {
  EXPECT_EQ(Action::read("g", "x").key(), "g?x");
  EXPECT_EQ(Action::write("g", "x").key(), "g!x");
  EXPECT_EQ(Action::sync("g", "y", "x").key(), "(g!y, g?x)");
  EXPECT_EQ(Action::assign("x", parse_linexpr("2*x + 1")).key(), "x := 2*x + 1");
  EXPECT_EQ(Action::constraint(parse_formula("x < 2^63")).key(), "[x < 2^63]");
}

TEST_F(ActionTest, EqualityIsStructural) {
  EXPECT_EQ(parse_action("[x < 1]"), Action::constraint(parse_formula("x < 1")));
  EXPECT_EQ(parse_action("(g?x, g!y)"), Action::sync("g", "y", "x"));
  EXPECT_NE(parse_action("g?x"), parse_action("g!x"));
  EXPECT_EQ(Action::assign("x", parse_linexpr("x + 1")).vars(), std::set<std::string>{"x"});
  EXPECT_EQ(Action::sync("g", "y", "x").vars(), (std::set<std::string>{"x", "y"}));
}

TEST_F(ActionTest, ShortlexOrder) {
  Trace a{parse_action("b!x")}, b{parse_action("a!x"), parse_action("a!x")}, c{parse_action("a!x")};
  EXPECT_TRUE(shortlex_less(a, b));
  EXPECT_TRUE(shortlex_less(c, a));
  EXPECT_FALSE(shortlex_less(a, a));
  EXPECT_EQ(trace_to_string(b), "(a!x, a!x)");
}

class ProgramTest : public ::testing::Test {
 protected:
  Program m2 = fixture("password/m2.agr");
};

TEST_F(ProgramTest, AcceptsExampleTraces) {
  Trace t = parse_trace("read?x_pw\n[999 < x_pw]\nenc!x_pw\ngetEnc?x_pw2\n");
  EXPECT_TRUE(accepts(m2, t));
  EXPECT_TRUE(accepts(m2, {}));
  EXPECT_FALSE(accepts(m2, parse_trace("enc!x_pw")));
  // Syntactic membership: the constraint is an opaque letter.
  EXPECT_FALSE(accepts(m2, parse_trace("read?x_pw\n[x_pw > 999]\nenc!x_pw\ngetEnc?x_pw2\n")));
}

TEST_F(ProgramTest, StatesAndEdges) {
  EXPECT_EQ(m2.size(), 5u);
  EXPECT_EQ(m2.transitions().size(), 6u);
  EXPECT_THROW(m2.state("nope"), ProgramError);
  EXPECT_THROW(m2.add_state("q0"), ProgramError);
  Program copy = m2;
  copy.add_transition(0, parse_action("read?x_pw"), 1);
  EXPECT_EQ(copy.transitions().size(), 6u) << "duplicate edges are ignored";
}

TEST_F(ProgramTest, ValidateRejectsUndeclaredNames) {
  Program p("P");
  p.add_state("s", true);
  p.add_transition(0, parse_action("g!x"), 0);
  EXPECT_THROW(p.validate(), ProgramError);
  p.add_var("x");
  p.add_channel("g");
  EXPECT_NO_THROW(p.validate());
}

TEST_F(ProgramTest, LetterOrderFollowsFirstUse) {
  auto order = letter_order(m2);
  ASSERT_EQ(order.size(), 5u);
  EXPECT_EQ(order[0].key(), "read?x_pw");
  EXPECT_EQ(order[1].key(), "[x_pw <= 999]");
}

class SemanticsTest : public ::testing::Test {};

TEST_F(SemanticsTest, SsaOfExampleOne) {
  Trace t = parse_trace("x := 2*y\ng?x\ny := y + 1\ng!y\n");
  SsaEncoding e = ssa_encode(t);
  EXPECT_EQ(e.final_index.at("x"), 2);
  EXPECT_EQ(e.final_index.at("y"), 1);
  ASSERT_EQ(e.steps.size(), 4u);
  EXPECT_TRUE(equivalent(e.steps[0], Formula::atom(LinExpr::variable("x#1"), Rel::Eq, 2 * LinExpr::variable("y#0"))));
  EXPECT_TRUE(e.steps[1].is_true());
  EXPECT_TRUE(equivalent(e.steps[2], Formula::atom(LinExpr::variable("y#1"), Rel::Eq, LinExpr::variable("y#0") + LinExpr(1))));
  EXPECT_FALSE(e.formula.vars().count("x#2")) << "a read leaves the new copy free";
  Feasibility f = is_feasible(t);
  ASSERT_TRUE(f.feasible);
  EXPECT_TRUE(execution_matches(t, f.execution));
}

TEST_F(SemanticsTest, SignArgumentInfeasible) {
  EXPECT_FALSE(is_feasible(parse_trace("g?x\n[x < 0]\nx := 2*x\n[x > 0]\n")).feasible);
  Feasibility eps = is_feasible({});
  EXPECT_TRUE(eps.feasible);
  EXPECT_EQ(eps.execution.size(), 1u);
}

TEST_F(SemanticsTest, SsaNames) {
  EXPECT_EQ(ssa_name("x_pw", 3), "x_pw#3");
  auto p = parse_ssa_name("x_pw#3");
  ASSERT_TRUE(p);
  EXPECT_EQ(p->first, "x_pw");
  EXPECT_EQ(p->second, 3);
  EXPECT_FALSE(parse_ssa_name("x_pw"));
}

TEST_F(SemanticsTest, RandomFeasibleTracesHaveValidExecutions) {
  Rng rng(5);
  std::vector<Action> pool{parse_action("g?x"), parse_action("h!y"), parse_action("x := x + y"),
                           parse_action("y := 2*x - 1"), parse_action("[x < y]"), parse_action("[x >= 3]"),
                           parse_action("(g!y, g?x)"), parse_action("[y != 0]")};
  int feasible = 0;
  for (int i = 0; i < 200; ++i) {
    Trace t;
    int len = std::uniform_int_distribution<int>(0, 7)(rng);
    for (int k = 0; k < len; ++k) t.push_back(pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)]);
    Feasibility f = is_feasible(t);
    if (!f.feasible) continue;
    ++feasible;
    EXPECT_TRUE(execution_matches(t, f.execution)) << trace_to_string(t);
  }
  EXPECT_GT(feasible, 50);
}

TEST_F(SemanticsTest, TamperedExecutionIsRejected) {
  Trace t = parse_trace("x := 1\n[x > 0]\n");
  Feasibility f = is_feasible(t);
  ASSERT_TRUE(f.feasible);
  f.execution[1]["x"] = 5;
  EXPECT_FALSE(execution_matches(t, f.execution));
}

class DetCompleteTest : public ::testing::Test {};

TEST_F(DetCompleteTest, PasswordPropertyIsIncomplete) {
  DetComplete r = check_det_complete(fixture("password/prop.agr"));
  EXPECT_FALSE(r.complete);
  EXPECT_TRUE(r.deterministic);
}

TEST_F(DetCompleteTest, TrueSelfLoop) {
  Program p("P");
  p.add_state("s", true);
  p.add_transition(0, Action::constraint(Formula::top()), 0);
  DetComplete r = check_det_complete(p);
  EXPECT_TRUE(r.deterministic);
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(r.issues.empty());
}

TEST_F(DetCompleteTest, OverlappingGuards) {
  Program p("P");
  p.add_var("x");
  p.add_state("s", true);
  p.add_state("a", true);
  p.add_state("b", true);
  p.add_transition(0, parse_action("[x < 5]"), 1);
  p.add_transition(0, parse_action("[x < 10]"), 2);
  DetComplete r = check_det_complete(p);
  EXPECT_FALSE(r.deterministic);
  bool found = false;
  for (const auto& i : r.issues)
    if (i.kind == DetCompleteIssue::Kind::SemanticNondeterminism) {
      found = true;
      EXPECT_EQ(i.witness.at("x"), Rational(0));
    }
  EXPECT_TRUE(found);
  // x >= 10 is not covered at s.
  EXPECT_FALSE(r.complete);
}

TEST_F(DetCompleteTest, AssignmentsAreRejected) {
  Program p("P");
  p.add_var("x");
  p.add_state("s", true);
  p.add_transition(0, parse_action("x := 0"), 0);
  EXPECT_THROW(check_det_complete(p), PropertyShapeError);
}
