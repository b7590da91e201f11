#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "agr/linexpr.hpp"

namespace agr {

enum class Rel { Lt, Le, Eq, Ne, Ge, Gt };

Rel negate(Rel r);
Rel mirror(Rel r);  // a r b  <=>  b mirror(r) a
const char* rel_text(Rel r);

struct Atom {
  LinExpr lhs;
  Rel rel;
  LinExpr rhs;

  bool holds(const Valuation& v) const;
  std::string to_string() const;
  friend bool operator==(const Atom& a, const Atom& b) {
    return a.rel == b.rel && a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

// Immutable quantifier-free linear formula; smart constructors fold trivial cases.
class Formula {
 public:
  enum class Kind { True, False, Atom, And, Or, Not };

  Formula();  // True
  static Formula top();
  static Formula bottom();
  static Formula atom(Atom a);
  static Formula atom(const LinExpr& lhs, Rel rel, const LinExpr& rhs);
  static Formula make_and(std::vector<Formula> parts);
  static Formula make_or(std::vector<Formula> parts);
  static Formula make_not(const Formula& f);

  Kind kind() const;
  bool is_true() const { return kind() == Kind::True; }
  bool is_false() const { return kind() == Kind::False; }
  const Atom& as_atom() const;
  const std::vector<Formula>& children() const;

  bool evaluate(const Valuation& v) const;
  std::set<std::string> vars() const;
  void collect_vars(std::set<std::string>& out) const;
  Formula rename(const std::function<std::string(const std::string&)>& f) const;
  Formula substitute(const std::string& var, const LinExpr& by) const;

  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Formula operator&&(const Formula& a, const Formula& b);
Formula operator||(const Formula& a, const Formula& b);
Formula operator!(const Formula& a);

// Pushes negations to atoms (negated atoms become atoms with the dual relation).
Formula nnf(const Formula& f);

}  // namespace agr
