#pragma once

#include "agr/program.hpp"
#include "agr/semantics.hpp"

namespace agr {

struct SharedVariableError : ProgramError {
  using ProgramError::ProgramError;
};

struct PropertyShapeError : ProgramError {
  using ProgramError::ProgramError;
};

// Synchronous composition on shared channels: a matching write/read pair becomes a
// sync action into an intermediate state, followed by the equality of the two
// variables. Only reachable states are built.
Program parallel_compose(const Program& m1, const Program& m2);

// Linear program accepting exactly t. The two-argument form carries the given
// signature (alphabet, variables, channels) so that interfaces match that program.
Program trace_program(const Trace& t);
Program trace_program(const Trace& t, const Program& signature);

// Product with a property; accepting states are (accepting of m) x (rejecting of p).
// Missing property transitions block.
Program conjunctive_compose(const Program& m, const Program& p);

// Letters of t that belong to the alphabet, in order.
Trace restrict_trace(const Trace& t, const Alphabet& alpha);

// Projection of a composite trace onto one component: sync pairs map back to the
// component's own half, the sync equalities disappear, other letters are kept if
// they belong to the component alphabet.
Trace project_trace(const Trace& composite, const Alphabet& component);

// The equality constraint parallel composition inserts right after sync pair i-1.
bool is_sync_equality(const Trace& t, size_t i);
// True iff t has a constraint other than the sync equalities.
bool has_constraints(const Trace& t);

struct SearchResult {
  enum class Verdict { Satisfied, Violated, BoundExhausted };
  Verdict verdict = Verdict::Satisfied;
  size_t bound = 0;
  Trace error_trace;          // composite trace of the product (Violated only)
  std::vector<StateId> run;   // product states along error_trace
  Execution witness;
  size_t explored = 0;
};

const char* verdict_name(SearchResult::Verdict v);

// Shortlex-first feasible run into an accepting state of `product`.
// bound == 0 selects 4 * |product states|.
SearchResult find_accepting_run(const Program& product, size_t bound = 0,
                                const SatBackend& backend = builtin_backend());

// m |= p: no feasible error trace in m x p.
SearchResult satisfies(const Program& m, const Program& p, size_t bound = 0,
                       const SatBackend& backend = builtin_backend());

}  // namespace agr
