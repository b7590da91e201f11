#include "agr/weakest.hpp"

#include <deque>

namespace agr {

Program signature_program(const Alphabet& alpha) {
  Program s("sig");
  s.add_state("s0", true);
  s.set_initial(0);
  for (const auto& a : alpha) {
    s.add_letter(a);
    for (const auto& v : a.vars()) s.add_var(v);
    if (a.is_comm()) s.add_channel(a.channel());
  }
  return s;
}

namespace {

using Pair = std::pair<StateId, StateId>;

void reject_constraints(const Alphabet& a, const std::string& who) {
  for (const auto& x : a)
    if (x.kind() == ActionKind::Constraint) throw ConstraintPresentError(who + " contains constraint " + x.key());
}

}  // namespace

WeakestAssumption weakest_assumption(const Program& m1, const Program& p, const Alphabet& alpha2) {
  reject_constraints(m1.alphabet(), "M1");
  reject_constraints(p.alphabet(), "property");
  reject_constraints(alpha2, "M2 alphabet");
  Program sig = signature_program(alpha2);
  Alphabet composite = parallel_compose(m1, sig).alphabet();
  std::set<std::string> common;
  for (const auto& c : m1.channels())
    if (sig.channels().count(c)) common.insert(c);
  auto on_common = [&](const Action& a) {
    return (a.kind() == ActionKind::Read || a.kind() == ActionKind::Write) && common.count(a.channel());
  };
  // A property letter synchronizes iff it is a communication of the composite system.
  auto p_syncs = [&](const Action& a) { return a.is_comm() && p.alphabet().count(a) && composite.count(a); };
  // Property moves for a system letter: forced when it synchronizes, otherwise P stays.
  auto p_moves = [&](StateId r, const Action& a) {
    if (!p_syncs(a)) return std::vector<StateId>{r};
    return p.successors(r, a);
  };

  auto closure = [&](std::set<Pair> s) {
    std::deque<Pair> work(s.begin(), s.end());
    while (!work.empty()) {
      auto [q, r] = work.front();
      work.pop_front();
      auto push = [&](Pair x) {
        if (s.insert(x).second) work.push_back(x);
      };
      for (size_t i : m1.out(q)) {
        const Transition& e = m1.transitions()[i];
        if (on_common(e.action)) continue;  // needs a partner from M2
        for (StateId r2 : p_moves(r, e.action)) push({e.to, r2});
      }
      for (size_t i : p.out(r)) {
        const Transition& e = p.transitions()[i];
        if (!p_syncs(e.action)) push({q, e.to});
      }
    }
    return s;
  };

  auto post = [&](const std::set<Pair>& s, const Action& a) {
    std::set<Pair> out;
    for (auto [q, r] : s) {
      if (on_common(a)) {
        for (size_t i : m1.out(q)) {
          const Transition& e = m1.transitions()[i];
          if (!on_common(e.action) || e.action.channel() != a.channel() || e.action.kind() == a.kind()) continue;
          Action sync = a.kind() == ActionKind::Write ? Action::sync(a.channel(), a.var(), e.action.var())
                                                      : Action::sync(a.channel(), e.action.var(), a.var());
          for (StateId r2 : p_moves(r, sync)) out.insert({e.to, r2});
        }
      } else {
        for (StateId r2 : p_moves(r, a)) out.insert({q, r2});
      }
    }
    return closure(std::move(out));
  };

  auto safe = [&](const std::set<Pair>& s) {
    for (auto [q, r] : s)
      if (m1.is_accepting(q) && !p.is_accepting(r)) return false;
    return true;
  };
  auto name = [&](const std::set<Pair>& s) {
    std::string n = "{";
    bool first = true;
    for (auto [q, r] : s) {
      if (!first) n += ",";
      n += "(" + m1.state_name(q) + "," + p.state_name(r) + ")";
      first = false;
    }
    return n + "}";
  };

  WeakestAssumption out;
  out.dfa = Program("weakest");
  adopt_signature(out.dfa, sig);
  std::map<std::set<Pair>, StateId> ids;
  std::deque<std::set<Pair>> queue;
  auto get = [&](const std::set<Pair>& s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    StateId id = out.dfa.add_state(name(s), safe(s));
    ids[s] = id;
    out.subsets.push_back(s);
    queue.push_back(s);
    return id;
  };
  out.dfa.set_initial(get(closure({{m1.initial(), p.initial()}})));
  while (!queue.empty()) {
    std::set<Pair> s = queue.front();
    queue.pop_front();
    StateId src = ids.at(s);
    for (const auto& a : alpha2) out.dfa.add_transition(src, a, get(post(s, a)));
  }
  return out;
}

}  // namespace agr
