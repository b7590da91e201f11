#include "agr/semantics.hpp"

#include "agr/composition.hpp"

namespace agr {

std::string ssa_name(const std::string& var, int k) { return var + "#" + std::to_string(k); }

std::optional<std::pair<std::string, int>> parse_ssa_name(const std::string& id) {
  auto p = id.rfind('#');
  if (p == std::string::npos || p + 1 >= id.size()) return std::nullopt;
  for (size_t i = p + 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return std::nullopt;
  return std::make_pair(id.substr(0, p), std::stoi(id.substr(p + 1)));
}

SsaEncoding ssa_encode(const Trace& t) {
  SsaEncoding enc;
  std::map<std::string, int>& idx = enc.final_index;
  for (const auto& a : t)
    for (const auto& v : a.vars()) idx.emplace(v, 0);
  auto at = [&](const std::map<std::string, int>& m) {
    return [&m](const std::string& v) { return ssa_name(v, m.at(v)); };
  };
  for (const auto& a : t) {
    switch (a.kind()) {
      case ActionKind::Read:
        idx[a.var()]++;
        enc.steps.push_back(Formula::top());
        break;
      case ActionKind::Write: enc.steps.push_back(Formula::top()); break;
      case ActionKind::Sync: {
        std::string w = ssa_name(a.writer(), idx[a.writer()]);
        idx[a.reader()]++;
        std::string r = ssa_name(a.reader(), idx[a.reader()]);
        enc.steps.push_back(Formula::atom(LinExpr::variable(r), Rel::Eq, LinExpr::variable(w)));
        break;
      }
      case ActionKind::Assign: {
        LinExpr rhs = a.expr().rename(at(idx));
        idx[a.var()]++;
        enc.steps.push_back(Formula::atom(LinExpr::variable(ssa_name(a.var(), idx[a.var()])), Rel::Eq, rhs));
        break;
      }
      case ActionKind::Constraint: enc.steps.push_back(a.formula().rename(at(idx))); break;
    }
  }
  enc.formula = Formula::make_and(enc.steps);
  return enc;
}

Feasibility is_feasible(const Trace& t, const SatBackend& backend) {
  SsaEncoding enc = ssa_encode(t);
  SatResult r = backend.check(enc.formula);
  Feasibility out;
  if (!r.sat) return out;
  out.feasible = true;
  std::map<std::string, int> idx;
  for (const auto& [v, _] : enc.final_index) idx[v] = 0;
  auto value = [&](const std::string& v, int k) {
    auto it = r.model.find(ssa_name(v, k));
    return it == r.model.end() ? Rational(0) : it->second;
  };
  auto snapshot = [&]() {
    Valuation val;
    for (const auto& [v, k] : idx) val[v] = value(v, k);
    return val;
  };
  out.execution.push_back(snapshot());
  for (const auto& a : t) {
    if (a.kind() == ActionKind::Read || a.kind() == ActionKind::Assign) idx[a.var()]++;
    if (a.kind() == ActionKind::Sync) idx[a.reader()]++;
    out.execution.push_back(snapshot());
  }
  return out;
}

bool execution_matches(const Trace& t, const Execution& e) {
  if (e.size() != t.size() + 1) return false;
  for (size_t i = 0; i < t.size(); ++i) {
    const Action& a = t[i];
    const Valuation& pre = e[i];
    const Valuation& post = e[i + 1];
    auto same_except = [&](const std::string& changed) {
      for (const auto& [v, val] : pre)
        if (v != changed && (!post.count(v) || post.at(v) != val)) return false;
      return post.size() == pre.size();
    };
    try {
      switch (a.kind()) {
        case ActionKind::Read:
          if (!same_except(a.var())) return false;
          break;
        case ActionKind::Write:
          if (!same_except("")) return false;
          break;
        case ActionKind::Sync:
          if (!same_except(a.reader()) || post.at(a.reader()) != pre.at(a.writer())) return false;
          break;
        case ActionKind::Assign:
          if (!same_except(a.var()) || post.at(a.var()) != a.expr().evaluate(pre)) return false;
          break;
        case ActionKind::Constraint:
          if (!same_except("") || !a.formula().evaluate(pre)) return false;
          break;
      }
    } catch (const std::out_of_range&) {
      return false;
    }
  }
  return true;
}

DetComplete check_det_complete(const Program& p) {
  using K = DetCompleteIssue::Kind;
  for (const auto& a : p.alphabet())
    if (a.kind() == ActionKind::Assign) throw PropertyShapeError("assignment " + a.key() + " in " + p.name());
  DetComplete r;
  auto report = [&](DetCompleteIssue i) {
    if (i.kind == K::SyntacticNondeterminism || i.kind == K::SemanticNondeterminism) r.deterministic = false;
    else r.complete = false;
    r.issues.push_back(std::move(i));
  };
  for (StateId s = 0; s < p.size(); ++s) {
    std::map<std::string, size_t> count;
    std::vector<const Transition*> guards;
    for (size_t idx : p.out(s)) {
      const Transition& t = p.transitions()[idx];
      count[t.action.key()]++;
      if (t.action.kind() == ActionKind::Constraint) guards.push_back(&t);
    }
    for (const auto& a : p.alphabet()) {
      auto it = count.find(a.key());
      size_t n = it == count.end() ? 0 : it->second;
      if (n == 0) report({K::SyntacticIncompleteness, s, a, std::nullopt, {}});
      if (n > 1) report({K::SyntacticNondeterminism, s, a, std::nullopt, {}});
    }
    for (size_t i = 0; i < guards.size(); ++i)
      for (size_t j = i + 1; j < guards.size(); ++j) {
        if (guards[i]->to == guards[j]->to || guards[i]->action == guards[j]->action) continue;
        SatResult both = is_sat(guards[i]->action.formula() && guards[j]->action.formula());
        if (both) report({K::SemanticNondeterminism, s, guards[i]->action, guards[j]->action, both.model});
      }
    if (!guards.empty()) {
      std::vector<Formula> cs;
      for (const auto* g : guards) cs.push_back(g->action.formula());
      SatResult gap = is_sat(!Formula::make_or(cs));
      if (gap) report({K::SemanticIncompleteness, s, std::nullopt, std::nullopt, gap.model});
    }
  }
  return r;
}

}  // namespace agr
