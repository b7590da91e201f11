#pragma once

#include <chrono>

#include "agr/lstar.hpp"
#include "agr/repair.hpp"
#include "agr/teacher.hpp"

namespace agr {

struct AgrConfig {
  RepairMethod repair_method = RepairMethod::Exact;
  size_t max_iterations = 50;
  size_t search_bound = 0;  // 0: 4 * |product|
  bool auto_switch_on_pumping = true;
  CexHandling cex_handling = CexHandling::Suffixes;
  bool bound_exhausted_is_satisfied = false;
  const SatBackend* backend = &builtin_backend();
  SolverOptions solver;
};

struct QueryRecord {
  Trace trace;
  std::string answer;  // Yes, No, Repair, Unknown
};

struct RepairRecord {
  std::string kind;
  Trace error_trace;
  Trace removed;
  std::optional<Trace> added;
  std::optional<Formula> psi;
  std::vector<std::string> new_states;
  size_t flipped_entries = 0;
  bool from_membership = false;
  std::optional<Pumping> pumping;
};

struct IterationLog {
  size_t index = 0;
  size_t membership_queries = 0;
  size_t equivalence_queries = 0;
  size_t assumption_size = 0;  // live states of the last conjecture
  size_t m2_size = 0;          // size of M2 at the end of the iteration
  std::string method;          // repair kind ending the iteration, "" for the last one
  double wall_ms = 0;
  std::vector<QueryRecord> queries;
  std::map<Trace, bool, ShortLex> table_at_end;
  std::optional<RepairRecord> repair;
};

struct AgrOutcome {
  enum class Kind { Verified, IterationLimit, Unknown } kind = Kind::Unknown;
  std::optional<Program> assumption;
  Program repaired_m2;
  size_t iterations = 0;
  size_t repairs = 0;
  std::vector<IterationLog> log;
  std::vector<std::string> warnings;
  std::string reason;
  double wall_ms = 0;
};

const char* outcome_name(AgrOutcome::Kind k);

// Assume-guarantee loop with L* and repair of M2.
AgrOutcome run_agr(const Program& m1, const Program& m2, const Program& p, const AgrConfig& cfg = {});

// Direct check of M1 || M2 |= P (no learning, no repair).
SearchResult::Verdict brute_force_verdict(const Program& m1, const Program& m2, const Program& p, size_t bound = 0);

}  // namespace agr
