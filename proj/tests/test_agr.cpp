#include <gtest/gtest.h>

#include "agr/agr.hpp"
#include "agr/automata.hpp"
#include "agr/dsl.hpp"
#include "support/support.hpp"

using namespace agr;
using namespace agr::test;

namespace {

// Both AG premises, checked without the learner.
void expect_premises(const Program& m1, const Program& p, const AgrOutcome& out) {
  ASSERT_TRUE(out.assumption);
  EXPECT_EQ(satisfies(parallel_compose(m1, *out.assumption), p).verdict, SearchResult::Verdict::Satisfied);
  EXPECT_TRUE(contains(out.repaired_m2, *out.assumption));
}

}  // namespace

class AgrTest : public ::testing::Test {
 protected:
  struct System {
    Program m1, m2, p;
  };
  static System load(const std::string& dir) {
    return {fixture(dir + "/m1.agr"), fixture(dir + "/m2.agr"), fixture(dir + "/prop.agr")};
  }
};

TEST_F(AgrTest, PasswordNeedsOneAbduction) {
  System s = load("password");
  AgrOutcome out = run_agr(s.m1, s.m2, s.p);
  ASSERT_EQ(out.kind, AgrOutcome::Kind::Verified) << out.reason;
  EXPECT_EQ(out.iterations, 2u);
  EXPECT_EQ(out.repairs, 1u);
  ASSERT_TRUE(out.log[0].repair);
  EXPECT_EQ(out.log[0].repair->kind, "abduction");
  EXPECT_TRUE(isomorphic(out.repaired_m2, fixture("password_fixed/m2.agr")));
  EXPECT_LE(live_states(*out.assumption), 5u);
  expect_premises(s.m1, s.p, out);
  EXPECT_EQ(brute_force_verdict(s.m1, out.repaired_m2, s.p), SearchResult::Verdict::Satisfied);
}

TEST_F(AgrTest, PasswordRepairTraceIsARealError) {
  System s = load("password");
  AgrOutcome out = run_agr(s.m1, s.m2, s.p);
  ASSERT_TRUE(out.log[0].repair);
  const Trace& t = out.log[0].repair->error_trace;
  Program product = conjunctive_compose(parallel_compose(s.m1, s.m2), s.p);
  EXPECT_TRUE(accepts(product, t));
  EXPECT_TRUE(is_feasible(t).feasible);
  EXPECT_FALSE(accepts(out.repaired_m2, out.log[0].repair->removed));
}

TEST_F(AgrTest, PasswordTableSurvivesRepair) {
  System s = load("password");
  AgrOutcome out = run_agr(s.m1, s.m2, s.p);
  ASSERT_GE(out.log.size(), 2u);
  Program m2_1 = out.repaired_m2;
  Teacher replay(s.m1, s.p, m2_1);
  for (const auto& q : out.log[0].queries) {
    bool before = q.answer == "Yes";
    bool after = replay.membership(q.trace).kind == TeacherAnswer::Kind::Yes;
    EXPECT_EQ(before, after) << trace_to_string(q.trace);
  }
  EXPECT_EQ(out.log[0].repair->flipped_entries, 0u);
  for (const auto& q : out.log[1].queries)
    EXPECT_FALSE(out.log[0].table_at_end.count(q.trace)) << "re-asked " << trace_to_string(q.trace);
}

TEST_F(AgrTest, MultiClientNeedsNoRepair) {
  System s = load("multi_client");
  AgrOutcome out = run_agr(s.m1, s.m2, s.p);
  ASSERT_EQ(out.kind, AgrOutcome::Kind::Verified) << out.reason;
  EXPECT_EQ(out.repairs, 0u);
  EXPECT_LE(live_states(*out.assumption), 3u);
  EXPECT_LT(live_states(*out.assumption), s.m2.size());
  expect_premises(s.m1, s.p, out);
}

TEST_F(AgrTest, DeterministicReruns) {
  System s = load("password");
  AgrOutcome a = run_agr(s.m1, s.m2, s.p), b = run_agr(s.m1, s.m2, s.p);
  ASSERT_EQ(a.log.size(), b.log.size());
  for (size_t i = 0; i < a.log.size(); ++i) {
    ASSERT_EQ(a.log[i].queries.size(), b.log[i].queries.size());
    for (size_t k = 0; k < a.log[i].queries.size(); ++k) EXPECT_EQ(a.log[i].queries[k].trace, b.log[i].queries[k].trace);
  }
  EXPECT_TRUE(isomorphic(*a.assumption, *b.assumption));
}

TEST_F(AgrTest, ExactPumpingSwitchesToApproximate) {
  System s = load("pumping");
  AgrConfig cfg;
  AgrOutcome out = run_agr(s.m1, s.m2, s.p, cfg);
  ASSERT_EQ(out.kind, AgrOutcome::Kind::Verified) << out.reason;
  bool pumped = false;
  for (const auto& it : out.log)
    if (it.repair && it.repair->pumping) pumped = true;
  EXPECT_TRUE(pumped);
  EXPECT_FALSE(out.warnings.empty());
  EXPECT_TRUE(shortest_accepted(out.repaired_m2));
  expect_premises(s.m1, s.p, out);
}

TEST_F(AgrTest, ExactWithoutSwitchHitsTheCap) {
  System s = load("pumping");
  AgrConfig cfg;
  cfg.auto_switch_on_pumping = false;
  cfg.max_iterations = 6;
  AgrOutcome out = run_agr(s.m1, s.m2, s.p, cfg);
  EXPECT_EQ(out.kind, AgrOutcome::Kind::IterationLimit);
  EXPECT_LE(out.iterations, 6u);
}

TEST_F(AgrTest, ApproximateOnPumping) {
  System s = load("pumping");
  AgrConfig cfg;
  cfg.repair_method = RepairMethod::Approximate;
  AgrOutcome out = run_agr(s.m1, s.m2, s.p, cfg);
  ASSERT_EQ(out.kind, AgrOutcome::Kind::Verified) << out.reason;
  EXPECT_TRUE(shortest_accepted(out.repaired_m2));
  EXPECT_GE(out.iterations, 2u);
  EXPECT_LE(out.iterations, 5u);
  expect_premises(s.m1, s.p, out);
}

TEST_F(AgrTest, AggressiveOnAllBadEmptiesTheLanguage) {
  System s = load("pumping_all_bad");
  AgrConfig cfg;
  cfg.repair_method = RepairMethod::Aggressive;
  AgrOutcome out = run_agr(s.m1, s.m2, s.p, cfg);
  ASSERT_EQ(out.kind, AgrOutcome::Kind::Verified) << out.reason;
  EXPECT_FALSE(shortest_accepted(out.repaired_m2));
  expect_premises(s.m1, s.p, out);
}

TEST_F(AgrTest, SingleIterationCap) {
  System s = load("password");
  AgrConfig cfg;
  cfg.max_iterations = 1;
  AgrOutcome out = run_agr(s.m1, s.m2, s.p, cfg);
  EXPECT_EQ(out.kind, AgrOutcome::Kind::IterationLimit);
  EXPECT_EQ(out.repairs, 0u);
}

TEST_F(AgrTest, BruteForceOnFixtures) {
  System pw = load("password");
  EXPECT_EQ(brute_force_verdict(pw.m1, pw.m2, pw.p), SearchResult::Verdict::Violated);
  System mc = load("multi_client");
  EXPECT_EQ(brute_force_verdict(mc.m1, mc.m2, mc.p), SearchResult::Verdict::Satisfied);
}

TEST_F(AgrTest, AgreesWithBruteForceOnRandomSystems) {
  Rng rng(2024);
  int verified = 0, repaired = 0;
  for (int i = 0; i < 40; ++i) {
    RandomSystem s = random_system(rng);
    SearchResult::Verdict direct = brute_force_verdict(s.m1, s.m2, s.p);
    AgrOutcome out = run_agr(s.m1, s.m2, s.p);
    ASSERT_NE(out.kind, AgrOutcome::Kind::Unknown) << out.reason;
    if (direct == SearchResult::Verdict::Satisfied) {
      ASSERT_EQ(out.kind, AgrOutcome::Kind::Verified) << "instance " << i;
      EXPECT_EQ(out.repairs, 0u) << "instance " << i;
      ++verified;
    } else {
      EXPECT_GT(out.repairs, 0u) << "instance " << i;
      ++repaired;
    }
    if (out.kind == AgrOutcome::Kind::Verified) {
      expect_premises(s.m1, s.p, out);
      EXPECT_EQ(brute_force_verdict(s.m1, out.repaired_m2, s.p), SearchResult::Verdict::Satisfied);
    }
  }
  EXPECT_GT(verified, 0);
  EXPECT_GT(repaired, 0);
}

TEST_F(AgrTest, RejectsSharedVariables) {
  System s = load("password");
  Program bad = s.m2;
  bad.add_var("y_pw");
  EXPECT_THROW(run_agr(s.m1, bad, s.p), SharedVariableError);
}
