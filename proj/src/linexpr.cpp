#include "agr/linexpr.hpp"

#include <stdexcept>

namespace agr {

LinExpr LinExpr::variable(const std::string& name, const Rational& coeff) {
  LinExpr e;
  if (coeff != 0) e.terms_[name] = coeff;
  return e;
}

Rational LinExpr::coeff(const std::string& var) const {
  auto it = terms_.find(var);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LinExpr::collect_vars(std::set<std::string>& out) const {
  for (const auto& [v, _] : terms_) out.insert(v);
}

LinExpr& LinExpr::operator+=(const LinExpr& other) {
  constant_ += other.constant_;
  for (const auto& [v, a] : other.terms_) {
    Rational& slot = terms_[v];
    slot += a;
    if (slot == 0) terms_.erase(v);
  }
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& other) { return *this += -other; }

LinExpr& LinExpr::operator*=(const Rational& k) {
  if (k == 0) {
    terms_.clear();
    constant_ = 0;
    return *this;
  }
  constant_ *= k;
  for (auto& [_, a] : terms_) a *= k;
  return *this;
}

Rational LinExpr::evaluate(const Valuation& v) const {
  Rational r = constant_;
  for (const auto& [name, a] : terms_) {
    auto it = v.find(name);
    if (it == v.end()) throw std::out_of_range("unassigned variable " + name);
    r += a * it->second;
  }
  return r;
}

LinExpr LinExpr::substitute(const std::string& var, const LinExpr& by) const {
  auto it = terms_.find(var);
  if (it == terms_.end()) return *this;
  LinExpr r = *this;
  Rational a = it->second;
  r.terms_.erase(var);
  r += by * a;
  return r;
}

LinExpr LinExpr::rename(const std::function<std::string(const std::string&)>& f) const {
  LinExpr r(constant_);
  for (const auto& [v, a] : terms_) r += variable(f(v), a);
  return r;
}

std::string LinExpr::to_string() const {
  std::string out;
  bool first = true;
  for (const auto& [v, a] : terms_) {
    Rational mag = abs(a);
    if (first) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    if (mag != 1) out += agr::to_string(mag) + "*";
    out += v;
    first = false;
  }
  if (first) return agr::to_string(constant_);
  if (constant_ != 0) out += (constant_ < 0 ? " - " : " + ") + agr::to_string(abs(constant_));
  return out;
}

}  // namespace agr
