#include "agr/lstar.hpp"

#include <algorithm>

namespace agr {

ObservationTable::ObservationTable(const std::vector<Action>& sigma) : sigma_(sigma) {
  for (const auto& a : sigma_) gen_[a.key()] = 0;
  s_.insert(Trace{});
  e_.push_back(Trace{});
}

std::optional<bool> ObservationTable::entry(const Trace& w) const {
  auto it = t_.find(w);
  if (it == t_.end()) return std::nullopt;
  return it->second;
}

void ObservationTable::set_entry(const Trace& w, bool value) {
  auto [it, inserted] = t_.emplace(w, value);
  if (!inserted && it->second != value)
    throw ConflictError("conflicting value for " + trace_to_string(w));
}

bool ObservationTable::add_suffix(const Trace& e) {
  if (std::find(e_.begin(), e_.end(), e) != e_.end()) return false;
  e_.push_back(e);
  return true;
}

void ObservationTable::add_letter(const Action& a) {
  if (gen_.count(a.key())) return;
  gen_[a.key()] = ++generations_;
  sigma_.push_back(a);
}

int ObservationTable::generation(const Action& a) const {
  auto it = gen_.find(a.key());
  return it == gen_.end() ? 0 : it->second;
}

int ObservationTable::generation(const Trace& w) const {
  int g = 0;
  for (const auto& a : w) g = std::max(g, generation(a));
  return g;
}

std::vector<Trace> ObservationTable::missing_cells() const {
  std::set<Trace, ShortLex> cells;
  for (const auto& s : s_) {
    for (const auto& e : e_) {
      Trace w = concat(s, e);
      if (!t_.count(w)) cells.insert(w);
      for (const auto& a : sigma_) {
        Trace v = concat(s, a, e);
        if (!t_.count(v)) cells.insert(std::move(v));
      }
    }
  }
  std::vector<Trace> out(cells.begin(), cells.end());
  std::stable_sort(out.begin(), out.end(), [&](const Trace& a, const Trace& b) { return generation(a) < generation(b); });
  return out;
}

std::vector<char> ObservationTable::row(const Trace& s) const {
  std::vector<char> r;
  r.reserve(e_.size());
  for (const auto& e : e_) r.push_back(t_.at(concat(s, e)) ? 1 : 0);
  return r;
}

std::string ObservationTable::to_text() const {
  std::string out = "S:";
  for (const auto& s : s_) out += " " + trace_to_string(s);
  out += "\nE:";
  for (const auto& e : e_) out += " " + trace_to_string(e);
  out += "\nT:\n";
  for (const auto& [w, v] : t_) out += "  " + trace_to_string(w) + " = " + (v ? "1" : "0") + "\n";
  return out;
}

Learner::Step Learner::step(std::optional<bool> answer) {
  if (pending_) {
    if (!answer) throw ProtocolError("pending membership query " + trace_to_string(*pending_) + " has no answer");
    table_.set_entry(*pending_, *answer);
    pending_.reset();
  } else if (answer) {
    throw ProtocolError("answer given without a pending query");
  }
  while (true) {
    if (dirty_) {
      auto cells = table_.missing_cells();
      queue_.assign(cells.begin(), cells.end());
      dirty_ = false;
    }
    while (!queue_.empty()) {
      Trace w = std::move(queue_.front());
      queue_.pop_front();
      if (table_.entry(w)) continue;
      pending_ = w;
      ++queries_;
      return Step{Step::Kind::Query, std::move(w), std::nullopt};
    }
    if (auto s = unclosed()) {
      table_.add_prefix(*s);
      dirty_ = true;
      continue;
    }
    if (auto e = inconsistency()) {
      table_.add_suffix(*e);
      dirty_ = true;
      continue;
    }
    return Step{Step::Kind::Conjecture, {}, conjecture()};
  }
}

const char* cex_handling_name(CexHandling h) {
  return h == CexHandling::Prefixes ? "prefixes" : "suffixes";
}

CexHandling parse_cex_handling(const std::string& s) {
  if (s == "prefixes") return CexHandling::Prefixes;
  if (s == "suffixes") return CexHandling::Suffixes;
  throw std::invalid_argument("unknown counterexample handling: " + s);
}

void Learner::add_counterexample(const Trace& t, bool positive) { add_counterexample(t, positive, handling_); }

void Learner::add_counterexample(const Trace& t, bool positive, CexHandling how) {
  table_.set_entry(t, positive);
  if (how == CexHandling::Prefixes) {
    for (size_t n = 0; n <= t.size(); ++n) table_.add_prefix(Trace(t.begin(), t.begin() + static_cast<long>(n)));
  } else {
    for (size_t n = 0; n < t.size(); ++n) table_.add_suffix(Trace(t.begin() + static_cast<long>(n), t.end()));
  }
  if (pending_ && table_.entry(*pending_)) pending_.reset();
  dirty_ = true;
}

void Learner::extend_alphabet(const Action& a) {
  table_.add_letter(a);
  dirty_ = true;
}

void Learner::override_entry(const Trace& t, bool value) {
  table_.override_entry(t, value);
  dirty_ = true;
}

std::optional<Trace> Learner::unclosed() const {
  std::set<std::vector<char>> rows;
  for (const auto& s : table_.prefixes()) rows.insert(table_.row(s));
  for (const auto& s : table_.prefixes())
    for (const auto& a : table_.alphabet()) {
      Trace sa = concat(s, a, {});
      if (!rows.count(table_.row(sa))) return sa;
    }
  return std::nullopt;
}

std::optional<Trace> Learner::inconsistency() const {
  std::map<std::vector<char>, std::vector<const Trace*>> groups;
  for (const auto& s : table_.prefixes()) groups[table_.row(s)].push_back(&s);
  for (const auto& [_, members] : groups) {
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j)
        for (const auto& a : table_.alphabet())
          for (const auto& e : table_.suffixes()) {
            bool x = *table_.entry(concat(*members[i], a, e));
            bool y = *table_.entry(concat(*members[j], a, e));
            if (x != y) {
              Trace ae{a};
              ae.insert(ae.end(), e.begin(), e.end());
              return ae;
            }
          }
  }
  return std::nullopt;
}

Program Learner::conjecture() const {
  Program a("A");
  std::map<std::vector<char>, StateId> ids;
  for (const auto& s : table_.prefixes()) {
    auto r = table_.row(s);
    if (ids.count(r)) continue;
    ids[r] = a.add_state("s" + std::to_string(ids.size()), r[0] != 0);
  }
  for (const auto& x : table_.alphabet()) a.add_letter(x);
  a.set_initial(ids.at(table_.row(Trace{})));
  std::set<std::vector<char>> done;
  for (const auto& s : table_.prefixes()) {
    auto r = table_.row(s);
    if (!done.insert(r).second) continue;
    for (const auto& x : table_.alphabet()) a.add_transition(ids.at(r), x, ids.at(table_.row(concat(s, x, {}))));
  }
  return a;
}

}  // namespace agr
