#include "agr/action.hpp"

namespace agr {

Action Action::make(Data d) { return Action(std::make_shared<const Data>(std::move(d))); }

Action Action::read(const std::string& channel, const std::string& var) {
  return make({ActionKind::Read, channel, var, "", {}, {}, channel + "?" + var});
}

Action Action::write(const std::string& channel, const std::string& var) {
  return make({ActionKind::Write, channel, var, "", {}, {}, channel + "!" + var});
}

Action Action::sync(const std::string& channel, const std::string& writer, const std::string& reader) {
  return make({ActionKind::Sync, channel, writer, reader, {}, {},
               "(" + channel + "!" + writer + ", " + channel + "?" + reader + ")"});
}

Action Action::assign(const std::string& var, const LinExpr& expr) {
  return make({ActionKind::Assign, "", var, "", expr, {}, var + " := " + expr.to_string()});
}

Action Action::constraint(const Formula& f) {
  return make({ActionKind::Constraint, "", "", "", {}, f, "[" + f.to_string() + "]"});
}

std::set<std::string> Action::vars() const {
  std::set<std::string> out;
  switch (kind()) {
    case ActionKind::Read:
    case ActionKind::Write: out.insert(var()); break;
    case ActionKind::Sync:
      out.insert(writer());
      out.insert(reader());
      break;
    case ActionKind::Assign:
      out.insert(var());
      expr().collect_vars(out);
      break;
    case ActionKind::Constraint: formula().collect_vars(out); break;
  }
  return out;
}

Action Action::rename_vars(const std::function<std::string(const std::string&)>& f) const {
  switch (kind()) {
    case ActionKind::Read: return read(channel(), f(var()));
    case ActionKind::Write: return write(channel(), f(var()));
    case ActionKind::Sync: return sync(channel(), f(writer()), f(reader()));
    case ActionKind::Assign: return assign(f(var()), expr().rename(f));
    case ActionKind::Constraint: return constraint(formula().rename(f));
  }
  return *this;
}

std::string trace_to_string(const Trace& t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += t[i].key();
  }
  return out + ")";
}

Trace concat(const Trace& a, const Trace& b) {
  Trace r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Trace concat(const Trace& a, const Action& x, const Trace& b) {
  Trace r = a;
  r.push_back(x);
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

bool shortlex_less(const Trace& a, const Trace& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return a[i].key() < b[i].key();
  }
  return false;
}

}  // namespace agr
