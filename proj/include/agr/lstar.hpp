#pragma once

#include <deque>
#include <map>
#include <optional>
#include <stdexcept>

#include "agr/program.hpp"

namespace agr {

struct ProtocolError : std::logic_error {
  using std::logic_error::logic_error;
};

struct ConflictError : std::logic_error {
  using std::logic_error::logic_error;
};

// Angluin observation table (S, E, T) over a growing alphabet.
class ObservationTable {
 public:
  explicit ObservationTable(const std::vector<Action>& sigma);

  const std::vector<Action>& alphabet() const { return sigma_; }
  const std::set<Trace, ShortLex>& prefixes() const { return s_; }
  const std::vector<Trace>& suffixes() const { return e_; }
  const std::map<Trace, bool, ShortLex>& entries() const { return t_; }

  std::optional<bool> entry(const Trace& w) const;
  // Throws ConflictError when w already has the opposite value.
  void set_entry(const Trace& w, bool value);
  void override_entry(const Trace& w, bool value) { t_[w] = value; }
  void add_prefix(const Trace& s) { s_.insert(s); }
  bool add_suffix(const Trace& e);
  void add_letter(const Action& a);
  // Generation of a letter: 0 for the initial alphabet, k after k extensions.
  int generation(const Action& a) const;
  int generation(const Trace& w) const;

  // Cells of (S u S.Sigma) x E without a value, ordered by (generation, length, letters).
  std::vector<Trace> missing_cells() const;
  std::vector<char> row(const Trace& s) const;  // requires all cells filled
  std::string to_text() const;

 private:
  std::vector<Action> sigma_;
  std::map<std::string, int> gen_;
  int generations_ = 0;
  std::set<Trace, ShortLex> s_;
  std::vector<Trace> e_;
  std::map<Trace, bool, ShortLex> t_;
};

// Prefixes: every prefix of a counterexample joins S (Angluin).
// Suffixes: every suffix joins E (Maler-Pnueli); rows of S stay distinct.
enum class CexHandling { Prefixes, Suffixes };
const char* cex_handling_name(CexHandling h);
CexHandling parse_cex_handling(const std::string& s);

class Learner {
 public:
  struct Step {
    enum class Kind { Query, Conjecture } kind;
    Trace query;
    std::optional<Program> conjecture;
  };

  explicit Learner(const std::vector<Action>& sigma, CexHandling h = CexHandling::Suffixes) : table_(sigma), handling_(h) {}
  explicit Learner(const Alphabet& sigma, CexHandling h = CexHandling::Suffixes)
      : Learner(std::vector<Action>(sigma.begin(), sigma.end()), h) {}

  // Pass the answer to the pending membership query, if any.
  Step step(std::optional<bool> answer = std::nullopt);
  // Records t with its value and adds its prefixes to S or its suffixes to E.
  // Resolves the pending query when t is that query.
  void add_counterexample(const Trace& t, bool positive);
  void add_counterexample(const Trace& t, bool positive, CexHandling how);
  void extend_alphabet(const Action& a);
  void override_entry(const Trace& t, bool value);

  const ObservationTable& table() const { return table_; }
  const std::optional<Trace>& pending() const { return pending_; }
  size_t queries_asked() const { return queries_; }

 private:
  std::optional<Trace> unclosed() const;
  std::optional<Trace> inconsistency() const;
  Program conjecture() const;

  ObservationTable table_;
  CexHandling handling_;
  std::optional<Trace> pending_;
  std::deque<Trace> queue_;
  bool dirty_ = true;
  size_t queries_ = 0;
};

}  // namespace agr
