#include "agr/program.hpp"

#include <algorithm>
#include <deque>

namespace agr {

StateId Program::add_state(const std::string& name, bool accepting) {
  if (by_name_.count(name)) throw ProgramError("duplicate state " + name);
  StateId id = static_cast<StateId>(names_.size());
  names_.push_back(name);
  by_name_[name] = id;
  accepting_.push_back(accepting);
  out_.emplace_back();
  return id;
}

std::optional<StateId> Program::find_state(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

StateId Program::state(const std::string& name) const {
  auto s = find_state(name);
  if (!s) throw ProgramError("unknown state " + name);
  return *s;
}

void Program::set_accepting(StateId s, bool acc) { accepting_.at(s) = acc; }

std::set<StateId> Program::accepting_states() const {
  std::set<StateId> out;
  for (StateId s = 0; s < accepting_.size(); ++s)
    if (accepting_[s]) out.insert(s);
  return out;
}

void Program::add_transition(StateId from, const Action& a, StateId to) {
  if (from >= names_.size() || to >= names_.size()) throw ProgramError("transition on unknown state");
  alphabet_.insert(a);
  auto& lst = out_[from];
  auto cmp = [&](size_t idx) {
    const Transition& t = edges_[idx];
    if (t.action != a) return t.action.key() < a.key();
    return t.to < to;
  };
  auto pos = std::partition_point(lst.begin(), lst.end(), cmp);
  if (pos != lst.end() && edges_[*pos].action == a && edges_[*pos].to == to) return;
  edges_.push_back({from, a, to});
  lst.insert(pos, edges_.size() - 1);
}

std::vector<StateId> Program::successors(StateId s, const Action& a) const {
  std::vector<StateId> out;
  for (size_t idx : out_.at(s))
    if (edges_[idx].action == a) out.push_back(edges_[idx].to);
  return out;
}

void Program::validate() const {
  if (names_.empty()) throw ProgramError(name_ + ": program has no states");
  if (initial_ >= names_.size()) throw ProgramError(name_ + ": initial state out of range");
  for (const auto& a : alphabet_) {
    for (const auto& v : a.vars())
      if (!vars_.count(v)) throw ProgramError(name_ + ": undeclared variable " + v + " in " + a.key());
    if (a.is_comm() && !channels_.count(a.channel()))
      throw ProgramError(name_ + ": undeclared channel " + a.channel() + " in " + a.key());
  }
}

std::vector<bool> Program::reachable() const {
  std::vector<bool> seen(names_.size(), false);
  if (names_.empty()) return seen;
  std::deque<StateId> q{initial_};
  seen[initial_] = true;
  while (!q.empty()) {
    StateId s = q.front();
    q.pop_front();
    for (size_t idx : out_[s]) {
      StateId t = edges_[idx].to;
      if (!seen[t]) {
        seen[t] = true;
        q.push_back(t);
      }
    }
  }
  return seen;
}

void adopt_signature(Program& to, const Program& from) {
  for (const auto& a : from.alphabet()) to.add_letter(a);
  for (const auto& v : from.vars()) to.add_var(v);
  for (const auto& c : from.channels()) to.add_channel(c);
}

std::vector<Action> letter_order(const Program& p) {
  std::vector<Action> out;
  std::set<std::string> seen;
  for (const auto& t : p.transitions())
    if (seen.insert(t.action.key()).second) out.push_back(t.action);
  for (const auto& a : p.alphabet())
    if (seen.insert(a.key()).second) out.push_back(a);
  return out;
}

}  // namespace agr
