#pragma once

#include <optional>

#include "agr/program.hpp"

namespace agr {

// Letters are compared structurally; constraints and assignments are plain symbols here.

bool accepts(const Program& a, const Trace& t);
std::vector<std::set<StateId>> run_sets(const Program& a, const Trace& t);  // state sets after each prefix

// Subset construction; the result is complete over a's alphabet (the empty set is a rejecting sink).
Program determinize(const Program& a);
Program complement(const Program& a);
Program intersect(const Program& a, const Program& b);

// Shortlex-first word in L(a) \ L(b), or nullopt if L(a) is included in L(b).
std::optional<Trace> contains_counterexample(const Program& a, const Program& b);
bool contains(const Program& a, const Program& b);  // L(a) subset of L(b)
std::optional<Trace> shortest_accepted(const Program& a);

// Drops states that are unreachable or cannot reach an accepting state (initial is kept).
Program trim(const Program& a);
// Reachable states from which an accepting state is reachable.
size_t live_states(const Program& a);

}  // namespace agr
