#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>

#include "agr/rational.hpp"

namespace agr {

using Valuation = std::map<std::string, Rational>;

// c + sum a_i * x_i with exact rational coefficients; zero coefficients are never stored.
class LinExpr {
 public:
  using Terms = std::map<std::string, Rational>;

  LinExpr() = default;
  explicit LinExpr(const Rational& constant) : constant_(constant) {}
  static LinExpr variable(const std::string& name, const Rational& coeff = 1);

  const Rational& constant() const { return constant_; }
  const Terms& terms() const { return terms_; }
  Rational coeff(const std::string& var) const;
  bool is_constant() const { return terms_.empty(); }
  bool mentions(const std::string& var) const { return terms_.count(var) != 0; }
  void collect_vars(std::set<std::string>& out) const;

  LinExpr& operator+=(const LinExpr& other);
  LinExpr& operator-=(const LinExpr& other);
  LinExpr& operator*=(const Rational& k);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, const Rational& k) { return a *= k; }
  friend LinExpr operator*(const Rational& k, LinExpr a) { return a *= k; }
  LinExpr operator-() const { return *this * Rational(-1); }

  // Throws std::out_of_range when a variable is missing from the valuation.
  Rational evaluate(const Valuation& v) const;
  LinExpr substitute(const std::string& var, const LinExpr& by) const;
  LinExpr rename(const std::function<std::string(const std::string&)>& f) const;

  std::string to_string() const;

  friend bool operator==(const LinExpr& a, const LinExpr& b) {
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const LinExpr& a, const LinExpr& b) {
    if (a.terms_ != b.terms_) return a.terms_ < b.terms_;
    return a.constant_ < b.constant_;
  }

 private:
  Rational constant_ = 0;
  Terms terms_;
};

}  // namespace agr
