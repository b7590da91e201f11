#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agr/program.hpp"
#include "agr/solver.hpp"

namespace agr {

// SSA name of the k-th version of a program variable.
std::string ssa_name(const std::string& var, int k);
// Inverse of ssa_name; nullopt for plain names.
std::optional<std::pair<std::string, int>> parse_ssa_name(const std::string& id);

struct SsaEncoding {
  Formula formula;             // conjunction of all steps
  std::vector<Formula> steps;  // one conjunct per action (True for writes/reads)
  std::map<std::string, int> final_index;
};

SsaEncoding ssa_encode(const Trace& t);

// Valuations of the trace's variables before the first action and after every action.
using Execution = std::vector<Valuation>;

struct Feasibility {
  bool feasible = false;
  Execution execution;
  explicit operator bool() const { return feasible; }
};

Feasibility is_feasible(const Trace& t, const SatBackend& backend = builtin_backend());
// Checks an execution against the trace's operational semantics.
bool execution_matches(const Trace& t, const Execution& e);

struct DetCompleteIssue {
  enum class Kind { SyntacticNondeterminism, SyntacticIncompleteness, SemanticNondeterminism, SemanticIncompleteness };
  Kind kind;
  StateId state;
  std::optional<Action> action;  // the letter (syntactic) or first constraint (semantic nondeterminism)
  std::optional<Action> other;   // second constraint (semantic nondeterminism)
  Valuation witness;             // semantic issues only
};

struct DetComplete {
  bool deterministic = true;  // syntactically and semantically
  bool complete = true;
  std::vector<DetCompleteIssue> issues;
};

// Throws PropertyShapeError on assignments. Semantic completeness is checked for
// states with at least one outgoing constraint.
DetComplete check_det_complete(const Program& p);

}  // namespace agr
