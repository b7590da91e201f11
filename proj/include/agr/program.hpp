#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "agr/action.hpp"

namespace agr {

using StateId = uint32_t;

struct Transition {
  StateId from;
  Action action;
  StateId to;
};

struct ProgramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A program (or property) automaton: states, initial state, accepting set,
// alphabet of actions, declared variables and channels, and labelled edges.
class Program {
 public:
  explicit Program(std::string name = "") : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  StateId add_state(const std::string& name, bool accepting = false);
  std::optional<StateId> find_state(const std::string& name) const;
  StateId state(const std::string& name) const;  // throws if unknown
  size_t size() const { return names_.size(); }
  const std::string& state_name(StateId s) const { return names_.at(s); }

  void set_initial(StateId s) { initial_ = s; }
  StateId initial() const { return initial_; }
  void set_accepting(StateId s, bool acc);
  bool is_accepting(StateId s) const { return accepting_.at(s); }
  std::set<StateId> accepting_states() const;

  // Adds the action to the alphabet; duplicate edges are ignored.
  void add_transition(StateId from, const Action& a, StateId to);
  void add_letter(const Action& a) { alphabet_.insert(a); }
  void add_var(const std::string& v) { vars_.insert(v); }
  void add_channel(const std::string& c) { channels_.insert(c); }
  void set_alphabet(Alphabet a) { alphabet_ = std::move(a); }

  const std::vector<Transition>& transitions() const { return edges_; }
  // Outgoing edges of s, ordered by (action key, target).
  const std::vector<size_t>& out(StateId s) const { return out_.at(s); }
  std::vector<StateId> successors(StateId s, const Action& a) const;

  const Alphabet& alphabet() const { return alphabet_; }
  const std::set<std::string>& vars() const { return vars_; }
  const std::set<std::string>& channels() const { return channels_; }

  // Every used variable/channel is declared and the initial state exists.
  void validate() const;
  // States reachable from the initial state.
  std::vector<bool> reachable() const;

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::map<std::string, StateId> by_name_;
  std::vector<bool> accepting_;
  StateId initial_ = 0;
  std::vector<Transition> edges_;
  std::vector<std::vector<size_t>> out_;
  Alphabet alphabet_;
  std::set<std::string> vars_, channels_;
};

// Alphabet letters in order of first use on an edge, then unused letters by key.
std::vector<Action> letter_order(const Program& p);

// Copy the signature (alphabet, variables, channels) of `from` onto `to`.
void adopt_signature(Program& to, const Program& from);

}  // namespace agr
