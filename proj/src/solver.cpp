#include "agr/solver.hpp"

namespace agr {

namespace {

std::vector<Polyhedron> dnf_rec(const Formula& f, const SolverOptions& opts) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return {Polyhedron()};
    case K::False: return {};
    case K::Atom: {
      std::vector<Polyhedron> out;
      for (const auto& c : atom_constraints(f.as_atom())) {
        Polyhedron p;
        if (p.add(c)) out.push_back(std::move(p));
      }
      return out;
    }
    case K::Or: {
      std::vector<Polyhedron> out;
      for (const auto& k : f.children()) {
        auto part = dnf_rec(k, opts);
        for (auto& p : part) out.push_back(std::move(p));
        if (out.size() > opts.dnf_limit) throw DnfLimitExceeded(opts.dnf_limit);
      }
      return out;
    }
    case K::And: {
      std::vector<Polyhedron> acc{Polyhedron()};
      for (const auto& k : f.children()) {
        auto part = dnf_rec(k, opts);
        std::vector<Polyhedron> next;
        for (const auto& a : acc) {
          for (const auto& b : part) {
            Polyhedron m = a;
            if (m.add_all(b.constraints())) next.push_back(std::move(m));
            if (next.size() > opts.dnf_limit) throw DnfLimitExceeded(opts.dnf_limit);
          }
        }
        acc = std::move(next);
        if (acc.empty()) break;
      }
      return acc;
    }
    case K::Not: return dnf_rec(nnf(f), opts);
  }
  return {};
}

Formula canonical_atom(const Atom& a) {
  std::vector<LinConstraint> cs = atom_constraints(a);
  if (a.rel == Rel::Ne) {
    Polyhedron p;
    if (!p.add({a.lhs - a.rhs, Cmp::Eq})) return Formula::top();
    auto norm = p.constraints();
    if (norm.empty()) return Formula::bottom();
    Formula eq = constraint_formula(norm[0]);
    if (eq.kind() != Formula::Kind::Atom) return !eq;
    const Atom& e = eq.as_atom();
    return Formula::atom(e.lhs, Rel::Ne, e.rhs);
  }
  Polyhedron p;
  if (!p.add(cs[0])) return Formula::bottom();
  auto norm = p.constraints();
  if (norm.empty()) return Formula::top();
  return constraint_formula(norm[0]);
}

Formula canonicalize(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: return canonical_atom(f.as_atom());
    case K::And:
    case K::Or: {
      std::vector<Formula> ks;
      for (const auto& k : f.children()) ks.push_back(canonicalize(k));
      return f.kind() == K::And ? Formula::make_and(std::move(ks)) : Formula::make_or(std::move(ks));
    }
    default: return f;
  }
}

bool unsat(const Formula& f, const SolverOptions& opts) { return !is_sat(f, opts).sat; }

Formula simplify_rec(const Formula& f, const Formula& ctx, const SolverOptions& opts) {
  using K = Formula::Kind;
  if (f.is_true() || f.is_false()) return f;
  if (unsat(ctx && f, opts)) return Formula::bottom();
  if (unsat(ctx && !f, opts)) return Formula::top();
  if (f.kind() == K::Atom) return f;
  std::vector<Formula> kids;
  for (const auto& k : f.children()) kids.push_back(simplify_rec(k, ctx, opts));
  if (f.kind() == K::And) {
    for (size_t i = 0; i < kids.size();) {
      std::vector<Formula> others;
      for (size_t j = 0; j < kids.size(); ++j)
        if (j != i) others.push_back(kids[j]);
      if (entails(ctx && Formula::make_and(others), kids[i], opts))
        kids.erase(kids.begin() + static_cast<long>(i));
      else
        ++i;
    }
    return Formula::make_and(std::move(kids));
  }
  for (size_t i = 0; i < kids.size();) {
    std::vector<Formula> others;
    for (size_t j = 0; j < kids.size(); ++j)
      if (j != i) others.push_back(kids[j]);
    if (!others.empty() && entails(ctx && kids[i], Formula::make_or(others), opts))
      kids.erase(kids.begin() + static_cast<long>(i));
    else
      ++i;
  }
  return Formula::make_or(std::move(kids));
}

}  // namespace

std::vector<Polyhedron> to_dnf(const Formula& f, const SolverOptions& opts) { return dnf_rec(nnf(f), opts); }

SatResult is_sat(const Formula& f, const SolverOptions& opts) {
  std::set<std::string> vs = f.vars();
  for (const auto& p : to_dnf(f, opts)) {
    if (auto m = p.model(vs)) {
      if (!f.evaluate(*m)) throw std::logic_error("model extraction produced a non-model for " + f.to_string());
      return SatResult{true, std::move(*m)};
    }
  }
  return SatResult{};
}

bool entails(const Formula& premise, const Formula& conclusion, const SolverOptions& opts) {
  return unsat(premise && !conclusion, opts);
}

bool equivalent(const Formula& a, const Formula& b, const SolverOptions& opts) {
  return entails(a, b, opts) && entails(b, a, opts);
}

Formula qe_exists(const std::set<std::string>& vars, const Formula& f, const SolverOptions& opts) {
  std::vector<Polyhedron> kept;
  for (auto& p : to_dnf(f, opts)) {
    p.eliminate_all(vars);
    if (p.contradictory() || !p.feasible()) continue;
    bool dup = false;
    for (const auto& k : kept)
      if (k == p) dup = true;
    if (!dup) kept.push_back(std::move(p));
  }
  std::vector<Formula> parts;
  for (const auto& p : kept) parts.push_back(p.to_formula());
  return Formula::make_or(std::move(parts));
}

Formula qe_forall(const std::set<std::string>& vars, const Formula& f, const SolverOptions& opts) {
  return nnf(!qe_exists(vars, !f, opts));
}

Formula simplify_under(const Formula& f, const Formula& ctx, const SolverOptions& opts) {
  return simplify_rec(canonicalize(nnf(f)), ctx, opts);
}

const SatBackend& builtin_backend() {
  static const BuiltinBackend b;
  return b;
}

}  // namespace agr
