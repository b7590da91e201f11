#include "agr/formula.hpp"

#include <stdexcept>

namespace agr {

Rel negate(Rel r) {
  switch (r) {
    case Rel::Lt: return Rel::Ge;
    case Rel::Le: return Rel::Gt;
    case Rel::Eq: return Rel::Ne;
    case Rel::Ne: return Rel::Eq;
    case Rel::Ge: return Rel::Lt;
    case Rel::Gt: return Rel::Le;
  }
  return r;
}

Rel mirror(Rel r) {
  switch (r) {
    case Rel::Lt: return Rel::Gt;
    case Rel::Le: return Rel::Ge;
    case Rel::Ge: return Rel::Le;
    case Rel::Gt: return Rel::Lt;
    default: return r;
  }
}

const char* rel_text(Rel r) {
  switch (r) {
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::Eq: return "==";
    case Rel::Ne: return "!=";
    case Rel::Ge: return ">=";
    case Rel::Gt: return ">";
  }
  return "?";
}

bool Atom::holds(const Valuation& v) const {
  Rational a = lhs.evaluate(v), b = rhs.evaluate(v);
  switch (rel) {
    case Rel::Lt: return a < b;
    case Rel::Le: return a <= b;
    case Rel::Eq: return a == b;
    case Rel::Ne: return a != b;
    case Rel::Ge: return a >= b;
    case Rel::Gt: return a > b;
  }
  return false;
}

std::string Atom::to_string() const {
  return lhs.to_string() + " " + rel_text(rel) + " " + rhs.to_string();
}

struct Formula::Node {
  Kind kind;
  Atom atom;
  std::vector<Formula> kids;
};

Formula::Formula() : Formula(top()) {}

Formula Formula::top() {
  static const auto n = std::make_shared<const Node>(Node{Kind::True, Atom{{}, Rel::Eq, {}}, {}});
  return Formula(n);
}

Formula Formula::bottom() {
  static const auto n = std::make_shared<const Node>(Node{Kind::False, Atom{{}, Rel::Eq, {}}, {}});
  return Formula(n);
}

Formula Formula::atom(Atom a) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(a), {}}));
}

Formula Formula::atom(const LinExpr& lhs, Rel rel, const LinExpr& rhs) { return atom(Atom{lhs, rel, rhs}); }

Formula Formula::make_and(std::vector<Formula> parts) {
  std::vector<Formula> kept;
  for (auto& p : parts) {
    if (p.is_false()) return bottom();
    if (!p.is_true()) kept.push_back(std::move(p));
  }
  if (kept.empty()) return top();
  if (kept.size() == 1) return kept[0];
  return Formula(std::make_shared<const Node>(Node{Kind::And, Atom{{}, Rel::Eq, {}}, std::move(kept)}));
}

Formula Formula::make_or(std::vector<Formula> parts) {
  std::vector<Formula> kept;
  for (auto& p : parts) {
    if (p.is_true()) return top();
    if (!p.is_false()) kept.push_back(std::move(p));
  }
  if (kept.empty()) return bottom();
  if (kept.size() == 1) return kept[0];
  return Formula(std::make_shared<const Node>(Node{Kind::Or, Atom{{}, Rel::Eq, {}}, std::move(kept)}));
}

Formula Formula::make_not(const Formula& f) {
  if (f.is_true()) return bottom();
  if (f.is_false()) return top();
  return Formula(std::make_shared<const Node>(Node{Kind::Not, Atom{{}, Rel::Eq, {}}, {f}}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Atom& Formula::as_atom() const {
  if (node_->kind != Kind::Atom) throw std::logic_error("formula is not an atom");
  return node_->atom;
}

const std::vector<Formula>& Formula::children() const { return node_->kids; }

bool Formula::evaluate(const Valuation& v) const {
  switch (kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return node_->atom.holds(v);
    case Kind::Not: return !node_->kids[0].evaluate(v);
    case Kind::And:
      for (const auto& k : node_->kids)
        if (!k.evaluate(v)) return false;
      return true;
    case Kind::Or:
      for (const auto& k : node_->kids)
        if (k.evaluate(v)) return true;
      return false;
  }
  return false;
}

void Formula::collect_vars(std::set<std::string>& out) const {
  if (kind() == Kind::Atom) {
    node_->atom.lhs.collect_vars(out);
    node_->atom.rhs.collect_vars(out);
  }
  for (const auto& k : node_->kids) k.collect_vars(out);
}

std::set<std::string> Formula::vars() const {
  std::set<std::string> out;
  collect_vars(out);
  return out;
}

Formula Formula::rename(const std::function<std::string(const std::string&)>& f) const {
  switch (kind()) {
    case Kind::True:
    case Kind::False: return *this;
    case Kind::Atom: return atom(node_->atom.lhs.rename(f), node_->atom.rel, node_->atom.rhs.rename(f));
    case Kind::Not: return make_not(node_->kids[0].rename(f));
    default: {
      std::vector<Formula> ks;
      for (const auto& k : node_->kids) ks.push_back(k.rename(f));
      return kind() == Kind::And ? make_and(std::move(ks)) : make_or(std::move(ks));
    }
  }
}

Formula Formula::substitute(const std::string& var, const LinExpr& by) const {
  switch (kind()) {
    case Kind::True:
    case Kind::False: return *this;
    case Kind::Atom:
      return atom(node_->atom.lhs.substitute(var, by), node_->atom.rel, node_->atom.rhs.substitute(var, by));
    case Kind::Not: return make_not(node_->kids[0].substitute(var, by));
    default: {
      std::vector<Formula> ks;
      for (const auto& k : node_->kids) ks.push_back(k.substitute(var, by));
      return kind() == Kind::And ? make_and(std::move(ks)) : make_or(std::move(ks));
    }
  }
}

std::string Formula::to_string() const {
  switch (kind()) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Atom: return node_->atom.to_string();
    case Kind::Not: {
      const Formula& k = node_->kids[0];
      return "!(" + k.to_string() + ")";
    }
    default: {
      const char* sep = kind() == Kind::And ? " && " : " || ";
      std::string out;
      for (size_t i = 0; i < node_->kids.size(); ++i) {
        const Formula& k = node_->kids[i];
        if (i) out += sep;
        bool paren = k.kind() == Kind::And || k.kind() == Kind::Or;
        out += paren ? "(" + k.to_string() + ")" : k.to_string();
      }
      return out;
    }
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Formula::Kind::Atom) return a.node_->atom == b.node_->atom;
  return a.node_->kids == b.node_->kids;
}

Formula operator&&(const Formula& a, const Formula& b) { return Formula::make_and({a, b}); }
Formula operator||(const Formula& a, const Formula& b) { return Formula::make_or({a, b}); }
Formula operator!(const Formula& a) { return Formula::make_not(a); }

namespace {

Formula nnf_rec(const Formula& f, bool neg) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return neg ? Formula::bottom() : Formula::top();
    case K::False: return neg ? Formula::top() : Formula::bottom();
    case K::Atom: {
      if (!neg) return f;
      const Atom& a = f.as_atom();
      return Formula::atom(a.lhs, negate(a.rel), a.rhs);
    }
    case K::Not: return nnf_rec(f.children()[0], !neg);
    default: {
      std::vector<Formula> ks;
      for (const auto& k : f.children()) ks.push_back(nnf_rec(k, neg));
      bool conj = (f.kind() == K::And) != neg;
      return conj ? Formula::make_and(std::move(ks)) : Formula::make_or(std::move(ks));
    }
  }
}

}  // namespace

Formula nnf(const Formula& f) { return nnf_rec(f, false); }

}  // namespace agr
