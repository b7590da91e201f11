#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "agr/formula.hpp"

namespace agr {

enum class ActionKind { Read, Write, Sync, Assign, Constraint };

// One letter of a program alphabet. Equality and ordering are structural,
// through a canonical key (the same text the DSL parser accepts).
class Action {
 public:
  static Action read(const std::string& channel, const std::string& var);
  static Action write(const std::string& channel, const std::string& var);
  // Order of the two halves does not matter; the writer is stored first.
  static Action sync(const std::string& channel, const std::string& writer, const std::string& reader);
  static Action assign(const std::string& var, const LinExpr& expr);
  static Action constraint(const Formula& f);

  ActionKind kind() const { return d_->kind; }
  bool is_comm() const { return kind() == ActionKind::Read || kind() == ActionKind::Write || kind() == ActionKind::Sync; }
  const std::string& channel() const { return d_->channel; }
  // Read/Write: the variable; Assign: the target; Sync: the writer.
  const std::string& var() const { return d_->var; }
  const std::string& writer() const { return d_->var; }
  const std::string& reader() const { return d_->var2; }
  const LinExpr& expr() const { return d_->expr; }
  const Formula& formula() const { return d_->formula; }

  std::set<std::string> vars() const;
  const std::string& key() const { return d_->key; }
  const std::string& to_string() const { return d_->key; }

  Action rename_vars(const std::function<std::string(const std::string&)>& f) const;

  friend bool operator==(const Action& a, const Action& b) { return a.d_ == b.d_ || a.d_->key == b.d_->key; }
  friend bool operator!=(const Action& a, const Action& b) { return !(a == b); }
  friend bool operator<(const Action& a, const Action& b) { return a.d_ != b.d_ && a.d_->key < b.d_->key; }

 private:
  struct Data {
    ActionKind kind;
    std::string channel, var, var2;
    LinExpr expr;
    Formula formula;
    std::string key;
  };
  explicit Action(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static Action make(Data d);
  std::shared_ptr<const Data> d_;
};

using Trace = std::vector<Action>;
using Alphabet = std::set<Action>;

std::string trace_to_string(const Trace& t);
Trace concat(const Trace& a, const Trace& b);
Trace concat(const Trace& a, const Action& x, const Trace& b);
// Shortlex order on traces (length first, then letter keys).
bool shortlex_less(const Trace& a, const Trace& b);
struct ShortLex {
  bool operator()(const Trace& a, const Trace& b) const { return shortlex_less(a, b); }
};

}  // namespace agr
