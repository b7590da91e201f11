#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "agr/formula.hpp"
#include "agr/polyhedron.hpp"

namespace agr {

struct SolverOptions {
  size_t dnf_limit = 1u << 16;  // max disjuncts before giving up
};

struct DnfLimitExceeded : std::runtime_error {
  explicit DnfLimitExceeded(size_t limit)
      : std::runtime_error("DNF expansion exceeded " + std::to_string(limit) + " disjuncts") {}
};

struct SatResult {
  bool sat = false;
  Valuation model;  // defined on the formula's variables when sat
  explicit operator bool() const { return sat; }
};

// Disjunction of conjunctions; contradictory disjuncts are dropped.
std::vector<Polyhedron> to_dnf(const Formula& f, const SolverOptions& opts = {});

SatResult is_sat(const Formula& f, const SolverOptions& opts = {});
bool entails(const Formula& premise, const Formula& conclusion, const SolverOptions& opts = {});
bool equivalent(const Formula& a, const Formula& b, const SolverOptions& opts = {});

Formula qe_exists(const std::set<std::string>& vars, const Formula& f, const SolverOptions& opts = {});
Formula qe_forall(const std::set<std::string>& vars, const Formula& f, const SolverOptions& opts = {});

// Equivalent to f wherever ctx holds; atoms are put in canonical orientation.
Formula simplify_under(const Formula& f, const Formula& ctx, const SolverOptions& opts = {});

// Pluggable satisfiability check; the default is the built-in projection.
class SatBackend {
 public:
  virtual ~SatBackend() = default;
  virtual SatResult check(const Formula& f) const = 0;
  virtual std::string name() const = 0;
};

class BuiltinBackend : public SatBackend {
 public:
  explicit BuiltinBackend(SolverOptions opts = {}) : opts_(opts) {}
  SatResult check(const Formula& f) const override { return is_sat(f, opts_); }
  std::string name() const override { return "builtin"; }

 private:
  SolverOptions opts_;
};

const SatBackend& builtin_backend();

}  // namespace agr
