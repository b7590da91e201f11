#include "agr/composition.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace agr {

namespace {

bool comm_on(const Action& a, const std::set<std::string>& channels) {
  return (a.kind() == ActionKind::Read || a.kind() == ActionKind::Write) && channels.count(a.channel());
}

// Sync action for a matching pair, with the equality m1var == m2var.
std::optional<std::pair<Action, Action>> pair_up(const Action& a1, const Action& a2) {
  if (a1.channel() != a2.channel() || a1.kind() == a2.kind()) return std::nullopt;
  Action s = a1.kind() == ActionKind::Write ? Action::sync(a1.channel(), a1.var(), a2.var())
                                            : Action::sync(a1.channel(), a2.var(), a1.var());
  Action eq = Action::constraint(Formula::atom(LinExpr::variable(a1.var()), Rel::Eq, LinExpr::variable(a2.var())));
  return std::make_pair(s, eq);
}

class ProductBuilder {
 public:
  explicit ProductBuilder(Program& out) : out_(out) {}
  StateId get(const std::string& name, bool accepting, std::deque<std::pair<StateId, StateId>>* q, StateId a,
              StateId b) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    StateId id = out_.add_state(name, accepting);
    ids_[name] = id;
    if (q) q->emplace_back(a, b);
    return id;
  }

 private:
  Program& out_;
  std::unordered_map<std::string, StateId> ids_;
};

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

}  // namespace

Program parallel_compose(const Program& m1, const Program& m2) {
  for (const auto& v : m1.vars())
    if (m2.vars().count(v)) throw SharedVariableError("variable " + v + " is shared by " + m1.name() + " and " + m2.name());
  std::set<std::string> common;
  for (const auto& c : m1.channels())
    if (m2.channels().count(c)) common.insert(c);

  Program out(m1.name() + "||" + m2.name());
  for (const auto& v : m1.vars()) out.add_var(v);
  for (const auto& v : m2.vars()) out.add_var(v);
  for (const auto& c : m1.channels()) out.add_channel(c);
  for (const auto& c : m2.channels()) out.add_channel(c);
  for (const auto& a : m1.alphabet())
    if (!comm_on(a, common)) out.add_letter(a);
  for (const auto& a : m2.alphabet())
    if (!comm_on(a, common)) out.add_letter(a);
  for (const auto& a1 : m1.alphabet()) {
    if (!comm_on(a1, common)) continue;
    for (const auto& a2 : m2.alphabet()) {
      if (!comm_on(a2, common)) continue;
      if (auto p = pair_up(a1, a2)) {
        out.add_letter(p->first);
        out.add_letter(p->second);
      }
    }
  }

  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::map<std::tuple<StateId, StateId, std::string>, StateId> mids;
  std::deque<std::pair<StateId, StateId>> queue;
  auto get = [&](StateId a, StateId b) {
    auto key = std::make_pair(a, b);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    StateId id = out.add_state(pair_name(m1.state_name(a), m2.state_name(b)), m1.is_accepting(a) && m2.is_accepting(b));
    ids[key] = id;
    queue.push_back(key);
    return id;
  };
  size_t dup_mid = 0;
  auto mid = [&](StateId a, StateId b, const Action& s) {
    auto key = std::make_tuple(a, b, s.key());
    auto it = mids.find(key);
    if (it != mids.end()) return it->second;
    std::string name = "(" + m1.state_name(a) + "'," + m2.state_name(b) + "')" + s.channel();
    if (out.find_state(name)) name += "/" + std::to_string(++dup_mid);
    StateId id = out.add_state(name, false);
    mids[key] = id;
    return id;
  };

  out.set_initial(get(m1.initial(), m2.initial()));
  while (!queue.empty()) {
    auto [q1, q2] = queue.front();
    queue.pop_front();
    StateId src = ids.at({q1, q2});
    for (size_t i1 : m1.out(q1)) {
      const Transition& e1 = m1.transitions()[i1];
      if (!comm_on(e1.action, common)) {
        out.add_transition(src, e1.action, get(e1.to, q2));
        continue;
      }
      for (size_t i2 : m2.out(q2)) {
        const Transition& e2 = m2.transitions()[i2];
        if (!comm_on(e2.action, common)) continue;
        auto p = pair_up(e1.action, e2.action);
        if (!p) continue;
        StateId m = mid(q1, q2, p->first);
        out.add_transition(src, p->first, m);
        out.add_transition(m, p->second, get(e1.to, e2.to));
      }
    }
    for (size_t i2 : m2.out(q2)) {
      const Transition& e2 = m2.transitions()[i2];
      if (!comm_on(e2.action, common)) out.add_transition(src, e2.action, get(q1, e2.to));
    }
  }
  return out;
}

Program trace_program(const Trace& t) {
  Program sig;
  for (const auto& a : t) {
    for (const auto& v : a.vars()) sig.add_var(v);
    if (a.is_comm()) sig.add_channel(a.channel());
  }
  return trace_program(t, sig);
}

Program trace_program(const Trace& t, const Program& signature) {
  Program out("trace");
  adopt_signature(out, signature);
  for (const auto& a : t) {
    for (const auto& v : a.vars()) out.add_var(v);
    if (a.is_comm()) out.add_channel(a.channel());
  }
  for (size_t i = 0; i <= t.size(); ++i) out.add_state("t" + std::to_string(i), i == t.size());
  out.set_initial(0);
  for (size_t i = 0; i < t.size(); ++i)
    out.add_transition(static_cast<StateId>(i), t[i], static_cast<StateId>(i + 1));
  return out;
}

Program conjunctive_compose(const Program& m, const Program& p) {
  for (const auto& a : p.alphabet())
    if (a.kind() == ActionKind::Assign) throw PropertyShapeError("property " + p.name() + " contains assignment " + a.key());
  for (const auto& v : p.vars())
    if (!m.vars().count(v)) throw PropertyShapeError("property variable " + v + " is not a program variable");

  auto interface = [&](const Action& a) { return a.is_comm() && m.alphabet().count(a) && p.alphabet().count(a); };

  Program out(m.name() + "x" + p.name());
  for (const auto& v : m.vars()) out.add_var(v);
  for (const auto& c : m.channels()) out.add_channel(c);
  for (const auto& c : p.channels()) out.add_channel(c);
  for (const auto& a : m.alphabet()) out.add_letter(a);
  for (const auto& a : p.alphabet()) out.add_letter(a);

  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::deque<std::pair<StateId, StateId>> queue;
  auto get = [&](StateId q, StateId r) {
    auto key = std::make_pair(q, r);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    StateId id = out.add_state(pair_name(m.state_name(q), p.state_name(r)), m.is_accepting(q) && !p.is_accepting(r));
    ids[key] = id;
    queue.push_back(key);
    return id;
  };
  out.set_initial(get(m.initial(), p.initial()));
  while (!queue.empty()) {
    auto [q, r] = queue.front();
    queue.pop_front();
    StateId src = ids.at({q, r});
    for (size_t im : m.out(q)) {
      const Transition& e = m.transitions()[im];
      if (!interface(e.action)) {
        out.add_transition(src, e.action, get(e.to, r));
        continue;
      }
      for (StateId r2 : p.successors(r, e.action)) out.add_transition(src, e.action, get(e.to, r2));
    }
    for (size_t ip : p.out(r)) {
      const Transition& e = p.transitions()[ip];
      if (!interface(e.action)) out.add_transition(src, e.action, get(q, e.to));
    }
  }
  return out;
}

Trace restrict_trace(const Trace& t, const Alphabet& alpha) {
  Trace out;
  for (const auto& a : t)
    if (alpha.count(a)) out.push_back(a);
  return out;
}

Trace project_trace(const Trace& composite, const Alphabet& component) {
  Trace out;
  for (size_t i = 0; i < composite.size(); ++i) {
    const Action& a = composite[i];
    if (a.kind() == ActionKind::Sync) {
      Action w = Action::write(a.channel(), a.writer());
      Action r = Action::read(a.channel(), a.reader());
      if (component.count(w)) out.push_back(w);
      else if (component.count(r)) out.push_back(r);
      else if (component.count(a)) out.push_back(a);
      continue;
    }
    if (is_sync_equality(composite, i)) continue;
    if (component.count(a)) out.push_back(a);
  }
  return out;
}

bool is_sync_equality(const Trace& t, size_t i) {
  if (i == 0 || i >= t.size()) return false;
  const Action& s = t[i - 1];
  const Action& c = t[i];
  if (s.kind() != ActionKind::Sync || c.kind() != ActionKind::Constraint) return false;
  const Formula& f = c.formula();
  if (f.kind() != Formula::Kind::Atom || f.as_atom().rel != Rel::Eq) return false;
  std::set<std::string> vs = f.vars();
  return vs == std::set<std::string>{s.writer(), s.reader()};
}

bool has_constraints(const Trace& t) {
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i].kind() == ActionKind::Constraint && !is_sync_equality(t, i)) return true;
  return false;
}

const char* verdict_name(SearchResult::Verdict v) {
  switch (v) {
    case SearchResult::Verdict::Satisfied: return "Satisfied";
    case SearchResult::Verdict::Violated: return "Violated";
    case SearchResult::Verdict::BoundExhausted: return "BoundExhausted";
  }
  return "?";
}

namespace {

using Store = std::vector<Polyhedron>;

class StoreStepper {
 public:
  // Post-image of a symbolic store under one action; empty result means infeasible.
  Store apply(const Store& in, const Action& a) {
    Store out;
    switch (a.kind()) {
      case ActionKind::Write: return in;
      case ActionKind::Read:
        for (auto p : in) {
          p.eliminate(a.var());
          push(out, std::move(p));
        }
        return out;
      case ActionKind::Sync:
        for (auto p : in) {
          p.eliminate(a.reader());
          if (p.add({LinExpr::variable(a.reader()) - LinExpr::variable(a.writer()), Cmp::Eq})) push(out, std::move(p));
        }
        return out;
      case ActionKind::Assign: {
        const std::string& x = a.var();
        const std::string old = x + "#old";
        for (auto p : in) {
          LinExpr rhs = a.expr();
          if (rhs.mentions(x)) {
            p.rename(x, old);
            rhs = rhs.substitute(x, LinExpr::variable(old));
          } else {
            p.eliminate(x);
          }
          if (!p.add({LinExpr::variable(x) - rhs, Cmp::Eq})) continue;
          p.eliminate(old);
          push(out, std::move(p));
        }
        return out;
      }
      case ActionKind::Constraint: {
        const Store& parts = dnf(a);
        for (const auto& p : in) {
          for (const auto& d : parts) {
            Polyhedron m = p;
            if (m.add_all(d.constraints()) && m.feasible()) push(out, std::move(m));
          }
        }
        return out;
      }
    }
    return out;
  }

 private:
  static void push(Store& out, Polyhedron p) {
    if (p.contradictory()) return;
    for (const auto& q : out)
      if (q == p) return;
    out.push_back(std::move(p));
  }
  const Store& dnf(const Action& a) {
    auto it = cache_.find(a.key());
    if (it != cache_.end()) return it->second;
    return cache_.emplace(a.key(), to_dnf(a.formula())).first->second;
  }
  std::unordered_map<std::string, Store> cache_;
};

}  // namespace

SearchResult find_accepting_run(const Program& product, size_t bound, const SatBackend& backend) {
  SearchResult res;
  res.bound = bound ? bound : 4 * std::max<size_t>(product.size(), 1);
  struct Node {
    StateId state;
    Store store;
    long parent;
    size_t edge;
    size_t depth;
  };
  std::vector<Node> nodes;
  std::vector<std::vector<Polyhedron>> seen(product.size());
  StoreStepper stepper;

  auto covered_filter = [&](StateId s, Store st) {
    Store fresh;
    for (auto& p : st) {
      bool cov = false;
      for (const auto& q : seen[s])
        if (q == p || p.entails(q)) {
          cov = true;
          break;
        }
      if (!cov) fresh.push_back(std::move(p));
    }
    for (const auto& p : fresh) seen[s].push_back(p);
    return fresh;
  };

  auto report = [&](size_t idx) {
    std::vector<size_t> chain;
    for (long i = static_cast<long>(idx); i >= 0; i = nodes[i].parent) chain.push_back(static_cast<size_t>(i));
    std::reverse(chain.begin(), chain.end());
    res.verdict = SearchResult::Verdict::Violated;
    for (size_t k = 0; k < chain.size(); ++k) {
      res.run.push_back(nodes[chain[k]].state);
      if (k > 0) res.error_trace.push_back(product.transitions()[nodes[chain[k]].edge].action);
    }
    Feasibility f = is_feasible(res.error_trace, backend);
    if (!f.feasible) throw std::logic_error("search produced an infeasible error trace " + trace_to_string(res.error_trace));
    res.witness = std::move(f.execution);
    return res;
  };

  Store init = covered_filter(product.initial(), Store{Polyhedron()});
  nodes.push_back({product.initial(), std::move(init), -1, 0, 0});
  if (product.is_accepting(product.initial())) return report(0);

  bool hit_bound = false;
  for (size_t head = 0; head < nodes.size(); ++head) {
    ++res.explored;
    StateId s = nodes[head].state;
    if (nodes[head].depth >= res.bound) {
      if (!product.out(s).empty()) hit_bound = true;
      continue;
    }
    for (size_t idx : product.out(s)) {
      const Transition& e = product.transitions()[idx];
      Store next = stepper.apply(nodes[head].store, e.action);
      if (next.empty()) continue;
      next = covered_filter(e.to, std::move(next));
      if (next.empty()) continue;
      nodes.push_back({e.to, std::move(next), static_cast<long>(head), idx, nodes[head].depth + 1});
      if (product.is_accepting(e.to)) return report(nodes.size() - 1);
    }
  }
  res.verdict = hit_bound ? SearchResult::Verdict::BoundExhausted : SearchResult::Verdict::Satisfied;
  return res;
}

SearchResult satisfies(const Program& m, const Program& p, size_t bound, const SatBackend& backend) {
  return find_accepting_run(conjunctive_compose(m, p), bound, backend);
}

}  // namespace agr
