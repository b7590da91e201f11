#include <gtest/gtest.h>

#include "agr/automata.hpp"
#include "agr/composition.hpp"
#include "agr/dsl.hpp"
#include "agr/semantics.hpp"
#include "support/support.hpp"

using namespace agr;
using namespace agr::test;

class AutomataTest : public ::testing::Test {
 protected:
  std::vector<Action> ab = letters_ab();
  std::vector<Trace> words = all_words(ab, 8);
  Rng rng{17};

  bool same_language(const Program& x, const Program& y) const {
    for (const auto& w : words)
      if (oracle_accepts(x, w) != oracle_accepts(y, w)) return false;
    return true;
  }
};

TEST_F(AutomataTest, DeterministicInputGainsOnlyASink) {
  Program d("D");
  d.add_state("a", true);
  d.add_state("b", false);
  for (const auto& l : ab) d.add_letter(l);
  d.add_transition(0, ab[0], 1);
  d.add_transition(1, ab[1], 0);
  Program det = determinize(d);
  EXPECT_EQ(det.size(), 3u);
  EXPECT_EQ(live_states(det), 2u);
  EXPECT_TRUE(same_language(d, det));
}

TEST_F(AutomataTest, SubsetsMerge) {
  Program n("N");
  n.add_state("s", false);
  n.add_state("t", true);
  n.add_state("u", false);
  n.add_letter(ab[1]);
  n.add_transition(0, ab[0], 1);
  n.add_transition(0, ab[0], 2);
  Program det = determinize(n);
  DetComplete dc = check_det_complete(det);
  EXPECT_TRUE(dc.deterministic);
  EXPECT_TRUE(dc.complete);
  // {s}, {t,u}, {} sink
  EXPECT_EQ(det.size(), 3u);
}

TEST_F(AutomataTest, DeterminizePreservesLanguage) {
  for (int i = 0; i < 100; ++i) {
    Program n = random_nfa(rng, 5, ab);
    Program d = determinize(n);
    EXPECT_TRUE(check_det_complete(d).deterministic);
    EXPECT_TRUE(check_det_complete(d).complete);
    ASSERT_TRUE(same_language(n, d));
  }
}

TEST_F(AutomataTest, ComplementFlipsMembership) {
  for (int i = 0; i < 100; ++i) {
    Program n = random_nfa(rng, 5, ab);
    Program c = complement(n);
    for (const auto& w : words) ASSERT_NE(oracle_accepts(n, w), oracle_accepts(c, w)) << trace_to_string(w);
    ASSERT_TRUE(same_language(complement(c), n));
  }
}

TEST_F(AutomataTest, ComplementOfATrace) {
  Trace t{ab[0], ab[1], ab[0]};
  Program tp = trace_program(t);
  for (const auto& l : ab) tp.add_letter(l);
  Program c = complement(tp);
  for (const auto& w : all_words(ab, t.size())) EXPECT_EQ(accepts(c, w), w != t) << trace_to_string(w);
}

TEST_F(AutomataTest, IntersectRemovesExactlyOneTrace) {
  for (int i = 0; i < 50; ++i) {
    Program n = random_nfa(rng, 5, ab);
    Trace t;
    for (int k = 0; k < 4; ++k) t.push_back(ab[std::uniform_int_distribution<size_t>(0, 1)(rng)]);
    Program tp = trace_program(t);
    for (const auto& l : ab) tp.add_letter(l);
    Program r = intersect(n, complement(tp));
    for (const auto& w : words) ASSERT_EQ(oracle_accepts(r, w), oracle_accepts(n, w) && w != t);
  }
}

TEST_F(AutomataTest, IntersectWithUniversalAndEmpty) {
  Program all("U");
  all.add_state("u", true);
  for (const auto& l : ab) all.add_transition(0, l, 0);
  Program none("E");
  none.add_state("e", false);
  for (const auto& l : ab) none.add_letter(l);
  for (int i = 0; i < 30; ++i) {
    Program n = random_nfa(rng, 5, ab);
    EXPECT_TRUE(same_language(intersect(n, all), n));
    EXPECT_FALSE(shortest_accepted(intersect(n, none)));
  }
}

TEST_F(AutomataTest, ContainsAgreesWithEnumeration) {
  for (int i = 0; i < 200; ++i) {
    Program a = random_nfa(rng, 5, ab), b = random_nfa(rng, 5, ab);
    auto cex = contains_counterexample(a, b);
    bool short_witness = false;
    for (const auto& w : words)
      if (oracle_accepts(a, w) && !oracle_accepts(b, w)) {
        short_witness = true;
        if (cex) {
          EXPECT_FALSE(shortlex_less(w, *cex)) << "counterexample is not shortlex-first";
        }
        break;
      }
    if (short_witness) ASSERT_TRUE(cex);
    if (cex) {
      EXPECT_TRUE(oracle_accepts(a, *cex));
      EXPECT_FALSE(oracle_accepts(b, *cex));
    }
    EXPECT_EQ(contains(a, b), !cex);
    EXPECT_TRUE(contains(a, a));
  }
}

TEST_F(AutomataTest, TraceNotInItsComplement) {
  Trace t{ab[1], ab[1]};
  Program tp = trace_program(t);
  for (const auto& l : ab) tp.add_letter(l);
  auto cex = contains_counterexample(tp, complement(tp));
  ASSERT_TRUE(cex);
  EXPECT_EQ(*cex, t);
}

TEST_F(AutomataTest, TrimKeepsLanguage) {
  for (int i = 0; i < 100; ++i) {
    Program n = random_nfa(rng, 5, ab);
    Program t = trim(n);
    ASSERT_TRUE(same_language(n, t));
    EXPECT_LE(t.size(), n.size());
    EXPECT_LE(live_states(n), t.size());
  }
}

TEST_F(AutomataTest, ShortestAccepted) {
  Program m2 = fixture("password/m2.agr");
  auto w = shortest_accepted(m2);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->empty());
  Program c = complement(m2);
  auto v = shortest_accepted(c);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->size(), 1u);
  EXPECT_FALSE(accepts(m2, *v));
}
