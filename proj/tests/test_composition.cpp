#include <gtest/gtest.h>

#include "agr/automata.hpp"
#include "agr/composition.hpp"
#include "agr/dsl.hpp"
#include "agr/semantics.hpp"
#include "support/support.hpp"

using namespace agr;
using namespace agr::test;

namespace {

Trace repeat(const std::string& head, const std::string& body, size_t n, const std::string& tail) {
  Trace t = parse_trace(head);
  Action a = parse_action(body);
  for (size_t i = 0; i < n; ++i) t.push_back(a);
  Trace rest = parse_trace(tail);
  t.insert(t.end(), rest.begin(), rest.end());
  return t;
}

}  // namespace

class ParallelTest : public ::testing::Test {};

TEST_F(ParallelTest, SyncInsertsIntermediateStateAndEquality) {
  Program c = parallel_compose(fixture("composition_fig5/m1.agr"), fixture("composition_fig5/m2.agr"));
  EXPECT_EQ(c.size(), 5u);
  auto mid = c.find_state("(p0',q1')verify");
  ASSERT_TRUE(mid);
  ASSERT_EQ(c.out(*mid).size(), 1u);
  const Transition& e = c.transitions()[c.out(*mid)[0]];
  EXPECT_EQ(e.action, Action::constraint(Formula::atom(LinExpr::variable("x"), Rel::Eq, LinExpr::variable("y"))));
  EXPECT_EQ(c.state_name(e.to), "(p1,q0)");
  EXPECT_TRUE(c.alphabet().count(Action::sync("verify", "y", "x")));
  EXPECT_FALSE(c.alphabet().count(parse_action("verify?x")));
}

TEST_F(ParallelTest, EmptyInterfaceInterleaves) {
  Program a("A"), b("B");
  a.add_var("x");
  b.add_var("y");
  a.add_channel("u");
  b.add_channel("v");
  for (int i = 0; i < 3; ++i) a.add_state("a" + std::to_string(i), i == 0);
  for (int i = 0; i < 2; ++i) b.add_state("b" + std::to_string(i), true);
  a.add_transition(0, parse_action("u!x"), 1);
  a.add_transition(1, parse_action("u!x"), 2);
  b.add_transition(0, parse_action("v?y"), 1);
  Program c = parallel_compose(a, b);
  EXPECT_EQ(c.size(), 6u);
  EXPECT_TRUE(accepts(c, parse_trace("")));
  EXPECT_TRUE(accepts(c, parse_trace("u!x\nv?y\nu!x\n")) == false);  // a2 is not accepting
  EXPECT_EQ(c.accepting_states().size(), 2u);
}

TEST_F(ParallelTest, SharedVariableIsAnError) {
  Program a = fixture("composition_fig5/m1.agr");
  Program b = a;
  b.set_name("B");
  EXPECT_THROW(parallel_compose(a, b), SharedVariableError);
}

class TraceProgramTest : public ::testing::Test {};

TEST_F(TraceProgramTest, Shapes) {
  Program e = trace_program({});
  EXPECT_EQ(e.size(), 1u);
  EXPECT_TRUE(e.is_accepting(e.initial()));
  EXPECT_TRUE(e.transitions().empty());
  Trace ab = parse_trace("a!x\nb!x\n");
  Program p = trace_program(ab);
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.transitions().size(), 2u);
  EXPECT_TRUE(accepts(p, ab));
  EXPECT_FALSE(accepts(p, parse_trace("a!x")));
}

TEST_F(TraceProgramTest, SignatureIsInherited) {
  Program m2 = fixture("password/m2.agr");
  Program t = trace_program(parse_trace("read?x_pw"), m2);
  EXPECT_EQ(t.alphabet(), m2.alphabet());
  EXPECT_EQ(t.channels(), m2.channels());
  EXPECT_EQ(t.vars(), m2.vars());
}

class ProjectionTest : public ::testing::Test {};

TEST_F(ProjectionTest, ExampleTwoRestriction) {
  Trace t{Action::sync("g2", "y", "x"), parse_action("x := x + 1"), parse_action("x := x + 1"),
          parse_action("[x < 10]"), parse_action("g1!x")};
  Alphabet alpha{parse_action("g1!x"), parse_action("x := x + 1"), parse_action("g2?x")};
  Trace expect = parse_trace("g2?x\nx := x + 1\nx := x + 1\ng1!x\n");
  EXPECT_EQ(project_trace(t, alpha), expect);
  EXPECT_TRUE(project_trace({}, alpha).empty());
}

TEST_F(ProjectionTest, RestrictIsIdempotentAndOrdered) {
  Rng rng(3);
  std::vector<Action> pool{parse_action("a!x"), parse_action("b!x"), parse_action("[x < 1]"), parse_action("c?y")};
  Alphabet alpha{pool[0], pool[2]};
  for (int i = 0; i < 100; ++i) {
    Trace t;
    for (int k = 0; k < 6; ++k) t.push_back(pool[std::uniform_int_distribution<size_t>(0, 3)(rng)]);
    Trace r = restrict_trace(t, alpha);
    EXPECT_EQ(restrict_trace(r, alpha), r);
    size_t j = 0;
    for (const auto& a : t)
      if (j < r.size() && a == r[j]) ++j;
    EXPECT_EQ(j, r.size());
    EXPECT_EQ(restrict_trace(t, Alphabet(pool.begin(), pool.end())), t);
  }
}

TEST_F(ProjectionTest, SyncEqualitiesAreNotConstraints) {
  Program c = parallel_compose(fixture("composition_fig5/m1.agr"), fixture("composition_fig5/m2.agr"));
  Trace t{parse_action("pass?y"), Action::sync("verify", "y", "x"),
          Action::constraint(Formula::atom(LinExpr::variable("x"), Rel::Eq, LinExpr::variable("y")))};
  EXPECT_TRUE(is_sync_equality(t, 2));
  EXPECT_FALSE(has_constraints(t));
  t.push_back(parse_action("[x > 0]"));
  EXPECT_TRUE(has_constraints(t));
}

class ConjunctiveTest : public ::testing::Test {};

TEST_F(ConjunctiveTest, AllAcceptingPropertyHasNoErrors) {
  Program m = fixture("digit_check/m.agr");
  Program p("P");
  p.add_var("y");
  p.add_channel("verify");
  p.add_state("r", true);
  p.add_transition(0, parse_action("verify!y"), 0);
  Program prod = conjunctive_compose(m, p);
  EXPECT_TRUE(prod.accepting_states().empty());
}

TEST_F(ConjunctiveTest, ErrorStateFromExampleThree) {
  Program prod = conjunctive_compose(fixture("digit_check/m.agr"), fixture("digit_check/prop.agr"));
  auto err = prod.find_state("(q0,r2)");
  ASSERT_TRUE(err);
  EXPECT_TRUE(prod.is_accepting(*err));
  EXPECT_TRUE(accepts(prod, parse_trace("password?y\n[y > 0]\nverify!y\n[y < 1000]\n")));
}

TEST_F(ConjunctiveTest, PropertyShapeErrors) {
  Program m = fixture("digit_check/m.agr");
  Program p("P");
  p.add_var("z");
  p.add_state("r", true);
  EXPECT_THROW(conjunctive_compose(m, p), PropertyShapeError);
}

class SatisfiesTest : public ::testing::Test {};

TEST_F(SatisfiesTest, ExampleThreeErrorTrace) {
  Trace expect = parse_trace("password?y\n[y > 0]\nverify!y\n[y < 1000]\n");
  for (int i = 0; i < 3; ++i) {
    SearchResult r = satisfies(fixture("digit_check/m.agr"), fixture("digit_check/prop.agr"));
    ASSERT_EQ(r.verdict, SearchResult::Verdict::Violated);
    EXPECT_EQ(r.error_trace, expect);
    EXPECT_TRUE(execution_matches(r.error_trace, r.witness));
  }
}

TEST_F(SatisfiesTest, PasswordSystemViolatesAndRepairedSatisfies) {
  Program m1 = fixture("password/m1.agr"), p = fixture("password/prop.agr");
  SearchResult bad = satisfies(parallel_compose(m1, fixture("password/m2.agr")), p);
  ASSERT_EQ(bad.verdict, SearchResult::Verdict::Violated);
  Trace t2 = project_trace(bad.error_trace, fixture("password/m2.agr").alphabet());
  EXPECT_EQ(t2, parse_trace("read?x_pw\n[999 < x_pw]\nenc!x_pw\ngetEnc?x_pw2\n"));
  Program with_trace = parallel_compose(m1, trace_program(t2, fixture("password/m2.agr")));
  EXPECT_EQ(satisfies(with_trace, p).verdict, SearchResult::Verdict::Violated);
  EXPECT_EQ(satisfies(parallel_compose(m1, fixture("password_fixed/m2.agr")), p).verdict,
            SearchResult::Verdict::Satisfied);
}

TEST_F(SatisfiesTest, CounterBoundary) {
  Program sys = parallel_compose(fixture("counter/m1.agr"), fixture("counter/m2.agr"));
  Program prod = conjunctive_compose(sys, fixture("counter/prop.agr"));
  std::string sync = "(sync!x, sync?z)\n[z == x]\n";
  Trace t90 = repeat("x := 0", "x := x + 1", 90, sync + "[x < 100]\n");
  Trace t150 = repeat("x := 0", "x := x + 1", 150, sync + "[x < 100]\n");
  EXPECT_TRUE(accepts(prod, t90));
  EXPECT_TRUE(is_feasible(t90).feasible);
  EXPECT_TRUE(accepts(prod, t150));
  EXPECT_FALSE(is_feasible(t150).feasible);
  SearchResult r = satisfies(sys, fixture("counter/prop.agr"));
  EXPECT_EQ(r.verdict, SearchResult::Verdict::Violated);
  EXPECT_TRUE(execution_matches(r.error_trace, r.witness));
}

TEST_F(SatisfiesTest, BoundExhaustion) {
  // x counts up from 0; the error needs x >= 5, so a depth bound of 3 cannot decide.
  Program m = parse_single(R"(program M
vars x
channels out
init s
accept q0
s -> q0 : x := 0
q0 -> q0 : x := x + 1
q0 -> q0 : out!x
)").program;
  Program p = parse_single(R"(property P
vars x
channels out
init r0
accept r0, r1
r0 -> r1 : out!x
r1 -> r0 : [x < 5]
r1 -> r2 : [x >= 5]
)").program;
  SearchResult shallow = satisfies(m, p, 3);
  EXPECT_NE(shallow.verdict, SearchResult::Verdict::Violated);
  SearchResult deep = satisfies(m, p, 12);
  EXPECT_EQ(deep.verdict, SearchResult::Verdict::Violated);
}
