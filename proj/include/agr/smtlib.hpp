#pragma once

#include <string>

#include "agr/solver.hpp"

namespace agr {

// Full script: set-logic, declarations, assert, check-sat, get-model.
std::string to_smtlib(const Formula& f);
std::string smt_term(const Formula& f);
std::string smt_symbol(const std::string& name);

struct SmtParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "sat"/"unsat" followed by an optional (model (define-fun v () Real t) ...).
SatResult parse_smt_reply(const std::string& reply);

// Pipes the script to an external command (e.g. "z3 -in") and reads its reply.
class ExternalBackend : public SatBackend {
 public:
  explicit ExternalBackend(std::string command) : command_(std::move(command)) {}
  SatResult check(const Formula& f) const override;
  std::string name() const override { return "external:" + command_; }

 private:
  std::string command_;
};

}  // namespace agr
