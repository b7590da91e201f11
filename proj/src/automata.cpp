#include "agr/automata.hpp"

#include <algorithm>
#include <deque>

namespace agr {

namespace {

std::set<StateId> step(const Program& a, const std::set<StateId>& from, const Action& x) {
  std::set<StateId> out;
  for (StateId s : from)
    for (size_t idx : a.out(s))
      if (a.transitions()[idx].action == x) out.insert(a.transitions()[idx].to);
  return out;
}

bool any_accepting(const Program& a, const std::set<StateId>& s) {
  for (StateId q : s)
    if (a.is_accepting(q)) return true;
  return false;
}

std::string set_name(const Program& a, const std::set<StateId>& s) {
  std::string n = "{";
  bool first = true;
  for (StateId q : s) {
    if (!first) n += ",";
    n += a.state_name(q);
    first = false;
  }
  return n + "}";
}

std::vector<bool> coaccessible(const Program& a) {
  std::vector<std::vector<StateId>> rev(a.size());
  for (const auto& t : a.transitions()) rev[t.to].push_back(t.from);
  std::vector<bool> ok(a.size(), false);
  std::deque<StateId> q;
  for (StateId s = 0; s < a.size(); ++s)
    if (a.is_accepting(s)) {
      ok[s] = true;
      q.push_back(s);
    }
  while (!q.empty()) {
    StateId s = q.front();
    q.pop_front();
    for (StateId p : rev[s])
      if (!ok[p]) {
        ok[p] = true;
        q.push_back(p);
      }
  }
  return ok;
}

}  // namespace

std::vector<std::set<StateId>> run_sets(const Program& a, const Trace& t) {
  std::vector<std::set<StateId>> out{{a.initial()}};
  for (const auto& x : t) out.push_back(step(a, out.back(), x));
  return out;
}

bool accepts(const Program& a, const Trace& t) {
  if (a.size() == 0) return false;
  std::set<StateId> cur{a.initial()};
  for (const auto& x : t) {
    cur = step(a, cur, x);
    if (cur.empty()) return false;
  }
  return any_accepting(a, cur);
}

Program determinize(const Program& a) {
  Program out(a.name());
  adopt_signature(out, a);
  std::map<std::set<StateId>, StateId> ids;
  std::deque<std::set<StateId>> queue;
  auto get = [&](const std::set<StateId>& s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    StateId id = out.add_state(set_name(a, s), any_accepting(a, s));
    ids[s] = id;
    queue.push_back(s);
    return id;
  };
  out.set_initial(get({a.initial()}));
  while (!queue.empty()) {
    std::set<StateId> s = queue.front();
    queue.pop_front();
    StateId src = ids.at(s);
    for (const auto& x : a.alphabet()) out.add_transition(src, x, get(step(a, s, x)));
  }
  return out;
}

Program complement(const Program& a) {
  Program d = determinize(a);
  for (StateId s = 0; s < d.size(); ++s) d.set_accepting(s, !d.is_accepting(s));
  return d;
}

Program intersect(const Program& a, const Program& b) {
  Program out(a.name() + "&" + b.name());
  adopt_signature(out, a);
  adopt_signature(out, b);
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::deque<std::pair<StateId, StateId>> queue;
  auto get = [&](StateId p, StateId q) {
    auto key = std::make_pair(p, q);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    StateId id = out.add_state("(" + a.state_name(p) + "," + b.state_name(q) + ")", a.is_accepting(p) && b.is_accepting(q));
    ids[key] = id;
    queue.push_back(key);
    return id;
  };
  out.set_initial(get(a.initial(), b.initial()));
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    StateId src = ids.at({p, q});
    for (size_t ia : a.out(p)) {
      const Transition& ea = a.transitions()[ia];
      for (StateId q2 : b.successors(q, ea.action)) out.add_transition(src, ea.action, get(ea.to, q2));
    }
  }
  return out;
}

std::optional<Trace> contains_counterexample(const Program& a, const Program& b) {
  struct Node {
    StateId p;
    std::set<StateId> qs;
    long parent;
    std::optional<Action> via;
  };
  std::vector<Node> nodes;
  std::set<std::pair<StateId, std::set<StateId>>> seen;
  auto bad = [&](const Node& n) { return a.is_accepting(n.p) && !any_accepting(b, n.qs); };
  auto word = [&](size_t i) {
    Trace t;
    for (long k = static_cast<long>(i); nodes[k].parent >= 0; k = nodes[k].parent) t.push_back(*nodes[k].via);
    std::reverse(t.begin(), t.end());
    return t;
  };
  if (a.size() == 0) return std::nullopt;
  std::set<StateId> q0;
  if (b.size()) q0.insert(b.initial());
  nodes.push_back({a.initial(), q0, -1, std::nullopt});
  seen.insert({a.initial(), q0});
  if (bad(nodes[0])) return Trace{};
  for (size_t head = 0; head < nodes.size(); ++head) {
    StateId p = nodes[head].p;
    for (size_t idx : a.out(p)) {
      const Transition& e = a.transitions()[idx];
      std::set<StateId> qs = step(b, nodes[head].qs, e.action);
      if (!seen.insert({e.to, qs}).second) continue;
      nodes.push_back({e.to, std::move(qs), static_cast<long>(head), e.action});
      if (bad(nodes.back())) return word(nodes.size() - 1);
    }
  }
  return std::nullopt;
}

bool contains(const Program& a, const Program& b) { return !contains_counterexample(a, b); }

std::optional<Trace> shortest_accepted(const Program& a) {
  Program none;
  return contains_counterexample(a, none);
}

Program trim(const Program& a) {
  std::vector<bool> reach = a.reachable(), co = coaccessible(a);
  Program out(a.name());
  adopt_signature(out, a);
  std::vector<long> map(a.size(), -1);
  for (StateId s = 0; s < a.size(); ++s)
    if ((reach[s] && co[s]) || s == a.initial()) map[s] = out.add_state(a.state_name(s), a.is_accepting(s));
  out.set_initial(static_cast<StateId>(map[a.initial()]));
  for (const auto& t : a.transitions())
    if (map[t.from] >= 0 && map[t.to] >= 0)
      out.add_transition(static_cast<StateId>(map[t.from]), t.action, static_cast<StateId>(map[t.to]));
  return out;
}

size_t live_states(const Program& a) {
  std::vector<bool> reach = a.reachable(), co = coaccessible(a);
  size_t n = 0;
  for (StateId s = 0; s < a.size(); ++s)
    if (reach[s] && co[s]) ++n;
  return n;
}

}  // namespace agr
