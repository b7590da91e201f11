#include "agr/polyhedron.hpp"

#include <algorithm>

namespace agr {

std::vector<LinConstraint> atom_constraints(const Atom& a) {
  LinExpr d = a.lhs - a.rhs;
  switch (a.rel) {
    case Rel::Lt: return {{d, Cmp::Lt}};
    case Rel::Le: return {{d, Cmp::Le}};
    case Rel::Eq: return {{d, Cmp::Eq}};
    case Rel::Ge: return {{-d, Cmp::Le}};
    case Rel::Gt: return {{-d, Cmp::Lt}};
    case Rel::Ne: return {{d, Cmp::Lt}, {-d, Cmp::Lt}};
  }
  return {};
}

std::vector<LinConstraint> negated_constraint(const LinConstraint& c) {
  switch (c.cmp) {
    case Cmp::Lt: return {{-c.expr, Cmp::Le}};
    case Cmp::Le: return {{-c.expr, Cmp::Lt}};
    case Cmp::Eq: return {{c.expr, Cmp::Lt}, {-c.expr, Cmp::Lt}};
  }
  return {};
}

Formula constraint_formula(const LinConstraint& c) {
  LinExpr terms = c.expr - LinExpr(c.expr.constant());
  Rational k = c.expr.constant();
  Rel rel = c.cmp == Cmp::Lt ? Rel::Lt : c.cmp == Cmp::Le ? Rel::Le : Rel::Eq;
  if (terms.is_constant()) {
    bool ok = c.cmp == Cmp::Lt ? k < 0 : c.cmp == Cmp::Le ? k <= 0 : k == 0;
    return ok ? Formula::top() : Formula::bottom();
  }
  if (terms.terms().begin()->second < 0) return Formula::atom(-terms, mirror(rel), LinExpr(k));
  return Formula::atom(terms, rel, LinExpr(-k));
}

bool Polyhedron::add(const LinConstraint& c) {
  Key terms = c.expr.terms();
  return add_normalized(std::move(terms), c.expr.constant(), c.cmp);
}

bool Polyhedron::add_all(const std::vector<LinConstraint>& cs) {
  for (const auto& c : cs)
    if (!add(c)) return false;
  return !contradiction_;
}

bool Polyhedron::add_normalized(Key terms, Rational constant, Cmp cmp) {
  if (contradiction_) return false;
  if (terms.empty()) {
    bool ok = cmp == Cmp::Lt ? constant < 0 : cmp == Cmp::Le ? constant <= 0 : constant == 0;
    if (!ok) contradiction_ = true;
    return ok;
  }
  Rational lead = terms.begin()->second;
  Rational scale = cmp == Cmp::Eq ? Rational(1 / lead) : Rational(1 / abs(lead));
  if (scale != 1) {
    for (auto& [_, a] : terms) a *= scale;
    constant *= scale;
  }
  if (cmp == Cmp::Eq) {
    auto it = eqs_.find(terms);
    if (it != eqs_.end()) {
      if (it->second != constant) contradiction_ = true;
      return !contradiction_;
    }
    eqs_.emplace(std::move(terms), constant);
    return true;
  }
  bool strict = cmp == Cmp::Lt;
  Key opposite = terms;
  for (auto& [_, a] : opposite) a = -a;
  if (auto op = ineqs_.find(opposite); op != ineqs_.end()) {
    Rational sum = constant + op->second.constant;
    bool s = strict || op->second.strict;
    if (s ? sum >= 0 : sum > 0) {
      contradiction_ = true;
      return false;
    }
  }
  auto it = ineqs_.find(terms);
  if (it == ineqs_.end()) {
    ineqs_.emplace(std::move(terms), Bound{constant, strict});
  } else if (constant > it->second.constant || (constant == it->second.constant && strict)) {
    it->second = Bound{constant, strict};
  }
  return true;
}

void Polyhedron::substitute(const std::string& var, const LinExpr& by) {
  std::vector<LinConstraint> moved;
  for (auto it = eqs_.begin(); it != eqs_.end();) {
    if (it->first.count(var)) {
      LinExpr e;
      for (const auto& [v, a] : it->first) e += LinExpr::variable(v, a);
      e += LinExpr(it->second);
      moved.push_back({e.substitute(var, by), Cmp::Eq});
      it = eqs_.erase(it);
    } else {
      ++it;
    }
  }
  for (auto it = ineqs_.begin(); it != ineqs_.end();) {
    if (it->first.count(var)) {
      LinExpr e;
      for (const auto& [v, a] : it->first) e += LinExpr::variable(v, a);
      e += LinExpr(it->second.constant);
      moved.push_back({e.substitute(var, by), it->second.strict ? Cmp::Lt : Cmp::Le});
      it = ineqs_.erase(it);
    } else {
      ++it;
    }
  }
  for (const auto& c : moved) add(c);
}

void Polyhedron::eliminate(const std::string& var) {
  if (contradiction_) return;
  for (auto it = eqs_.begin(); it != eqs_.end(); ++it) {
    auto cv = it->first.find(var);
    if (cv == it->first.end()) continue;
    // a*var + rest == 0  =>  var = -rest / a
    Rational a = cv->second;
    LinExpr rest(it->second);
    for (const auto& [v, k] : it->first)
      if (v != var) rest += LinExpr::variable(v, k);
    eqs_.erase(it);
    substitute(var, rest * Rational(-1 / a));
    return;
  }
  std::vector<std::pair<LinExpr, bool>> lower, upper;  // full expressions a*var + r
  for (auto it = ineqs_.begin(); it != ineqs_.end();) {
    auto cv = it->first.find(var);
    if (cv == it->first.end()) {
      ++it;
      continue;
    }
    LinExpr e(it->second.constant);
    for (const auto& [v, k] : it->first) e += LinExpr::variable(v, k);
    (cv->second < 0 ? lower : upper).emplace_back(std::move(e), it->second.strict);
    it = ineqs_.erase(it);
  }
  for (const auto& [l, ls] : lower) {
    Rational al = l.coeff(var);
    for (const auto& [u, us] : upper) {
      Rational au = u.coeff(var);
      LinExpr combo = l * au + u * Rational(-al);
      if (!add({combo, (ls || us) ? Cmp::Lt : Cmp::Le})) return;
    }
  }
}

void Polyhedron::eliminate_all(const std::set<std::string>& vars) {
  for (const auto& v : vars) {
    if (contradiction_) return;
    eliminate(v);
  }
}

void Polyhedron::rename(const std::string& from, const std::string& to) {
  if (from == to) return;
  substitute(from, LinExpr::variable(to));
}

std::set<std::string> Polyhedron::vars() const {
  std::set<std::string> out;
  for (const auto& [k, _] : eqs_)
    for (const auto& [v, __] : k) out.insert(v);
  for (const auto& [k, _] : ineqs_)
    for (const auto& [v, __] : k) out.insert(v);
  return out;
}

bool Polyhedron::feasible() const {
  if (contradiction_) return false;
  if (ineqs_.empty() && eqs_.empty()) return true;
  Polyhedron p = *this;
  while (!p.contradiction_) {
    std::set<std::string> vs = p.vars();
    if (vs.empty()) break;
    // Cheapest variable first: equalities, then smallest lower*upper product.
    std::string best;
    size_t best_cost = SIZE_MAX;
    for (const auto& v : vs) {
      size_t lo = 0, up = 0;
      bool in_eq = false;
      for (const auto& [k, _] : p.eqs_)
        if (k.count(v)) in_eq = true;
      if (in_eq) {
        best = v;
        best_cost = 0;
        break;
      }
      for (const auto& [k, _] : p.ineqs_) {
        auto it = k.find(v);
        if (it == k.end()) continue;
        (it->second < 0 ? lo : up)++;
      }
      size_t cost = lo * up;
      if (cost < best_cost) {
        best_cost = cost;
        best = v;
      }
    }
    p.eliminate(best);
  }
  return !p.contradiction_;
}

std::optional<Valuation> Polyhedron::model(const std::set<std::string>& wanted) const {
  if (contradiction_) return std::nullopt;
  struct Step {
    std::string var;
    std::optional<LinExpr> solution;
    std::vector<LinConstraint> bounds;
  };
  std::vector<Step> steps;
  Polyhedron p = *this;
  while (!p.contradiction_) {
    std::set<std::string> vs = p.vars();
    if (vs.empty()) break;
    std::string best;
    size_t best_cost = SIZE_MAX;
    std::optional<LinExpr> sol;
    for (const auto& v : vs) {
      for (const auto& [k, c] : p.eqs_) {
        auto it = k.find(v);
        if (it == k.end()) continue;
        LinExpr rest(c);
        for (const auto& [w, a] : k)
          if (w != v) rest += LinExpr::variable(w, a);
        sol = rest * Rational(-1 / it->second);
        best = v;
        break;
      }
      if (sol) break;
      size_t lo = 0, up = 0;
      for (const auto& [k, _] : p.ineqs_) {
        auto it = k.find(v);
        if (it == k.end()) continue;
        (it->second < 0 ? lo : up)++;
      }
      if (lo * up < best_cost) {
        best_cost = lo * up;
        best = v;
      }
    }
    Step s{best, sol, {}};
    if (!sol) {
      for (const auto& [k, b] : p.ineqs_) {
        if (!k.count(best)) continue;
        LinExpr e(b.constant);
        for (const auto& [w, a] : k) e += LinExpr::variable(w, a);
        s.bounds.push_back({e, b.strict ? Cmp::Lt : Cmp::Le});
      }
    }
    steps.push_back(std::move(s));
    p.eliminate(best);
  }
  if (p.contradiction_) return std::nullopt;

  Valuation val;
  // Variables that vanished from every constraint are unconstrained; they take 0.
  auto settle = [&val](const LinExpr& e) {
    for (const auto& [v, _] : e.terms()) val.emplace(v, 0);
  };
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->solution) settle(*it->solution);
    for (const auto& c : it->bounds) settle(c.expr.substitute(it->var, LinExpr()));
    if (it->solution) {
      val[it->var] = it->solution->evaluate(val);
      continue;
    }
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& c : it->bounds) {
      Rational a = c.expr.coeff(it->var);
      LinExpr rest = c.expr.substitute(it->var, LinExpr());
      Rational bound = -rest.evaluate(val) / a;
      bool strict = c.cmp == Cmp::Lt;
      if (a > 0) {
        if (!hi || bound < *hi || (bound == *hi && strict)) {
          hi = bound;
          hi_strict = strict;
        }
      } else {
        if (!lo || bound > *lo || (bound == *lo && strict)) {
          lo = bound;
          lo_strict = strict;
        }
      }
    }
    auto within = [&](const Rational& x) {
      if (lo && (lo_strict ? x <= *lo : x < *lo)) return false;
      if (hi && (hi_strict ? x >= *hi : x > *hi)) return false;
      return true;
    };
    Rational pick = 0;
    if (!within(pick)) {
      bool found = false;
      if (lo) {
        Rational c = lo_strict ? Rational(floor_of(*lo) + 1) : ceil_of(*lo);
        if (within(c)) {
          pick = c;
          found = true;
        }
      }
      if (!found && hi) {
        Rational c = hi_strict ? Rational(ceil_of(*hi) - 1) : floor_of(*hi);
        if (within(c)) {
          pick = c;
          found = true;
        }
      }
      if (!found) pick = (lo && hi) ? Rational((*lo + *hi) / 2) : lo ? *lo : *hi;
    }
    val[it->var] = pick;
  }
  for (const auto& v : wanted)
    if (!val.count(v)) val[v] = 0;
  return val;
}

bool Polyhedron::entails(const LinConstraint& c) const {
  if (contradiction_) return true;
  for (const auto& alt : negated_constraint(c)) {
    Polyhedron p = *this;
    if (p.add(alt) && p.feasible()) return false;
  }
  return true;
}

bool Polyhedron::entails(const Polyhedron& other) const {
  if (contradiction_) return true;
  if (other.contradiction_) return !feasible();
  for (const auto& c : other.constraints())
    if (!entails(c)) return false;
  return true;
}

std::vector<LinConstraint> Polyhedron::constraints() const {
  std::vector<LinConstraint> out;
  for (const auto& [k, c] : eqs_) {
    LinExpr e(c);
    for (const auto& [v, a] : k) e += LinExpr::variable(v, a);
    out.push_back({e, Cmp::Eq});
  }
  for (const auto& [k, b] : ineqs_) {
    LinExpr e(b.constant);
    for (const auto& [v, a] : k) e += LinExpr::variable(v, a);
    out.push_back({e, b.strict ? Cmp::Lt : Cmp::Le});
  }
  return out;
}

Formula Polyhedron::to_formula() const {
  if (contradiction_) return Formula::bottom();
  std::vector<Formula> parts;
  for (const auto& c : constraints()) parts.push_back(constraint_formula(c));
  return Formula::make_and(std::move(parts));
}

bool operator==(const Polyhedron& a, const Polyhedron& b) {
  if (a.contradiction_ != b.contradiction_) return false;
  if (a.eqs_ != b.eqs_ || a.ineqs_.size() != b.ineqs_.size()) return false;
  auto it = b.ineqs_.begin();
  for (const auto& [k, bd] : a.ineqs_) {
    if (k != it->first || bd.constant != it->second.constant || bd.strict != it->second.strict) return false;
    ++it;
  }
  return true;
}

}  // namespace agr
