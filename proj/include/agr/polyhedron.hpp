#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "agr/formula.hpp"

namespace agr {

// expr < 0, expr <= 0 or expr == 0
enum class Cmp { Lt, Le, Eq };

struct LinConstraint {
  LinExpr expr;
  Cmp cmp;
};

// Atoms other than != map to one constraint; != maps to two alternatives (< or >).
std::vector<LinConstraint> atom_constraints(const Atom& a);
std::vector<LinConstraint> negated_constraint(const LinConstraint& c);
Formula constraint_formula(const LinConstraint& c);

// A conjunction of linear constraints over the rationals, kept in a normal form:
// each constraint is scaled so its first coefficient is +-1 and, per linear part,
// only the tightest bound is stored.
class Polyhedron {
 public:
  Polyhedron() = default;

  // Returns false once the conjunction is known to be contradictory.
  bool add(const LinConstraint& c);
  bool add_all(const std::vector<LinConstraint>& cs);
  bool contradictory() const { return contradiction_; }

  // Fourier-Motzkin projection of one variable (exact, strictness tracked).
  void eliminate(const std::string& var);
  void eliminate_all(const std::set<std::string>& vars);
  void rename(const std::string& from, const std::string& to);

  bool feasible() const;
  // Satisfying assignment for all variables in `vars` (and the polyhedron's own), if any.
  std::optional<Valuation> model(const std::set<std::string>& vars = {}) const;
  // True iff every point of this polyhedron satisfies c (resp. all of other's constraints).
  bool entails(const LinConstraint& c) const;
  bool entails(const Polyhedron& other) const;

  std::set<std::string> vars() const;
  std::vector<LinConstraint> constraints() const;
  Formula to_formula() const;
  size_t size() const { return eqs_.size() + ineqs_.size(); }
  // Same normal form (used for duplicate detection).
  friend bool operator==(const Polyhedron& a, const Polyhedron& b);

 private:
  struct Bound {
    Rational constant;  // linear part + constant (cmp) 0
    bool strict;
  };
  using Key = LinExpr::Terms;

  bool add_normalized(Key terms, Rational constant, Cmp cmp);
  void substitute(const std::string& var, const LinExpr& by);

  std::map<Key, Rational> eqs_;
  std::map<Key, Bound> ineqs_;
  bool contradiction_ = false;
};

}  // namespace agr
