#include "agr/repair.hpp"

#include "agr/automata.hpp"

namespace agr {

const char* method_name(RepairMethod m) {
  switch (m) {
    case RepairMethod::Exact: return "exact";
    case RepairMethod::Approximate: return "approximate";
    case RepairMethod::Aggressive: return "aggressive";
  }
  return "?";
}

RepairMethod parse_method(const std::string& s) {
  if (s == "exact") return RepairMethod::Exact;
  if (s == "approx" || s == "approximate") return RepairMethod::Approximate;
  if (s == "aggressive") return RepairMethod::Aggressive;
  throw std::invalid_argument("unknown repair method '" + s + "'");
}

Abduction abduce(const Trace& t, const std::set<std::string>& m1_vars, const std::set<std::string>& m2_vars,
                 const Alphabet& system, const SolverOptions& opts) {
  SsaEncoding enc = ssa_encode(t);
  std::set<std::string> keep;
  for (const auto& [v, k] : enc.final_index)
    if (m2_vars.count(v) && !m1_vars.count(v)) keep.insert(ssa_name(v, k));
  std::set<std::string> quantified;
  for (const auto& id : enc.formula.vars())
    if (!keep.count(id)) quantified.insert(id);

  Formula psi = nnf(!qe_exists(quantified, enc.formula, opts));
  if (!is_sat(psi, opts)) throw TrivialAbduction("abduced constraint is false");

  std::vector<Formula> ctx_parts;
  for (size_t i = 0; i < t.size(); ++i)
    if (system.count(t[i])) ctx_parts.push_back(enc.steps[i]);
  Formula ctx = Formula::make_and(std::move(ctx_parts));
  Formula simple = simplify_under(psi, ctx, opts);
  if (simple.is_false() || simple.is_true()) throw TrivialAbduction("abduced constraint is trivial on this trace");
  if (is_sat(simple && enc.formula, opts)) throw std::logic_error("abduced constraint does not block the error trace");

  auto plain = [](const std::string& id) {
    auto p = parse_ssa_name(id);
    return p ? p->first : id;
  };
  return Abduction{simple.rename(plain), simple, ctx};
}

namespace {

std::string fresh_name(const Program& p, std::string base) {
  while (p.find_state(base)) base += "'";
  return base;
}

// Copy of the state space (names, acceptance, initial) and signature of m.
Program copy_states(const Program& m) {
  Program out(m.name());
  for (StateId s = 0; s < m.size(); ++s) out.add_state(m.state_name(s), m.is_accepting(s));
  out.set_initial(m.initial());
  adopt_signature(out, m);
  return out;
}

std::set<StateId> accepting_end(const Program& m, const Trace& t) {
  std::set<StateId> out;
  auto sets = run_sets(m, t);
  for (StateId q : sets.back())
    if (m.is_accepting(q)) out.insert(q);
  return out;
}

RepairResult exact_repair(const Program& m2, const Trace& t2) {
  Program d = trim(intersect(m2, complement(trace_program(t2, m2))));
  d.set_name(m2.name());
  adopt_signature(d, m2);
  return RepairResult{std::move(d), "exact", t2, std::nullopt, std::nullopt, {}};
}

void check_removed(const RepairResult& r) {
  if (accepts(r.m2, r.removed)) throw std::logic_error(r.kind + " repair kept " + trace_to_string(r.removed));
}

}  // namespace

RepairResult semantic_repair(const Program& m2, const Trace& t2, const Formula& psi) {
  Action guard = Action::constraint(psi);
  std::set<StateId> targets = accepting_end(m2, t2);
  Program out = copy_states(m2);
  out.add_letter(guard);
  RepairResult res{Program(), "abduction", t2, concat(t2, guard, {}), psi, {}};
  if (t2.empty()) {
    std::string n = fresh_name(out, m2.state_name(m2.initial()) + "~");
    StateId fresh = out.add_state(n, false);
    res.new_states.push_back(n);
    for (const auto& e : m2.transitions()) out.add_transition(e.from, e.action, e.to);
    out.add_transition(fresh, guard, m2.initial());
    out.set_initial(fresh);
  } else {
    std::map<StateId, StateId> split;
    for (StateId q : targets) {
      std::string n = fresh_name(out, m2.state_name(q) + "~");
      split[q] = out.add_state(n, false);
      res.new_states.push_back(n);
    }
    for (const auto& e : m2.transitions()) {
      auto it = split.find(e.to);
      out.add_transition(e.from, e.action, it == split.end() ? e.to : it->second);
    }
    for (const auto& [q, s] : split) out.add_transition(s, guard, q);
  }
  res.m2 = std::move(out);
  if (accepts(res.m2, t2)) {
    RepairResult ex = exact_repair(m2, t2);
    check_removed(ex);
    return ex;
  }
  return res;
}

RepairResult syntactic_repair(const Program& m2, const Trace& t2, RepairMethod method) {
  if (method == RepairMethod::Exact) {
    RepairResult r = exact_repair(m2, t2);
    check_removed(r);
    return r;
  }
  std::set<StateId> targets = accepting_end(m2, t2);
  Program out = copy_states(m2);
  RepairResult res{Program(), method_name(method), t2, std::nullopt, std::nullopt, {}};
  if (method == RepairMethod::Aggressive) {
    for (StateId q : targets) out.set_accepting(q, false);
    for (const auto& e : m2.transitions()) out.add_transition(e.from, e.action, e.to);
  } else {
    // q stops accepting; an accepting copy takes over every incoming edge except
    // the final step of t2.
    std::set<StateId> pre;
    if (!t2.empty()) pre = run_sets(m2, Trace(t2.begin(), t2.end() - 1)).back();
    std::map<StateId, StateId> copy;
    for (StateId q : targets) {
      out.set_accepting(q, false);
      std::string n = fresh_name(out, m2.state_name(q) + "+");
      copy[q] = out.add_state(n, true);
      res.new_states.push_back(n);
    }
    auto target = [&](const Transition& e) {
      auto it = copy.find(e.to);
      if (it == copy.end()) return e.to;
      bool last_step = !t2.empty() && pre.count(e.from) && e.action == t2.back();
      return last_step ? e.to : it->second;
    };
    for (const auto& e : m2.transitions()) {
      StateId to = target(e);
      out.add_transition(e.from, e.action, to);
      if (auto it = copy.find(e.from); it != copy.end()) out.add_transition(it->second, e.action, to);
    }
  }
  res.m2 = std::move(out);
  check_removed(res);
  return res;
}

std::optional<Pumping> detect_nonconvergence(const Program& product, const Trace& t) {
  if (has_constraints(t) || t.size() <= product.size()) return std::nullopt;
  auto sets = run_sets(product, t);
  std::optional<StateId> last;
  for (StateId q : sets.back())
    if (product.is_accepting(q)) last = q;
  if (!last) return std::nullopt;
  std::vector<StateId> run(t.size() + 1);
  run[t.size()] = *last;
  for (size_t i = t.size(); i-- > 0;) {
    bool found = false;
    for (StateId p : sets[i]) {
      for (StateId s : product.successors(p, t[i]))
        if (s == run[i + 1]) found = true;
      if (found) {
        run[i] = p;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  std::map<StateId, size_t> first;
  for (size_t j = 0; j < run.size(); ++j) {
    auto [it, fresh] = first.emplace(run[j], j);
    if (fresh) continue;
    size_t i = it->second;
    return Pumping{Trace(t.begin(), t.begin() + static_cast<long>(i)),
                   Trace(t.begin() + static_cast<long>(i), t.begin() + static_cast<long>(j)),
                   Trace(t.begin() + static_cast<long>(j), t.end())};
  }
  return std::nullopt;
}

}  // namespace agr
