#pragma once

#include "agr/composition.hpp"

namespace agr {

enum class RepairMethod { Exact, Approximate, Aggressive };
const char* method_name(RepairMethod m);
RepairMethod parse_method(const std::string& s);

struct TrivialAbduction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Abduction {
  Formula psi;       // over plain M2 variable names
  Formula psi_ssa;   // over the final SSA copies
  Formula context;   // system part used for simplification
};

// Strongest-necessary-style constraint over the final values of M2's variables that,
// conjoined with the error trace's SSA formula, is unsatisfiable.
// `system` is the alphabet of M1 || M2 (used to pick the simplification context).
Abduction abduce(const Trace& error_trace, const std::set<std::string>& m1_vars,
                 const std::set<std::string>& m2_vars, const Alphabet& system,
                 const SolverOptions& opts = {});

struct RepairResult {
  Program m2;
  std::string kind;  // abduction, exact, approximate, aggressive
  Trace removed;
  std::optional<Trace> added;  // t2 . [psi] for abduction
  std::optional<Formula> psi;
  std::vector<std::string> new_states;
};

// Guards every accepting state reached by t2 with [psi] through a fresh split state.
RepairResult semantic_repair(const Program& m2, const Trace& t2, const Formula& psi);
RepairResult syntactic_repair(const Program& m2, const Trace& t2, RepairMethod method);

struct Pumping {
  Trace u, v, w;
};

// Composite trace t of `product` with a repeated product state on its accepting run,
// constraint-free and longer than the product: u v^k w are all error traces.
std::optional<Pumping> detect_nonconvergence(const Program& product, const Trace& t);

}  // namespace agr
