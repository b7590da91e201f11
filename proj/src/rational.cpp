#include "agr/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace agr {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

mpz_class parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad number: " + s);
  for (size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw std::invalid_argument("bad number: " + s);
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

// Exponent k if |v| == 2^k with k >= 16, otherwise -1.
long power_of_two_exponent(const mpz_class& v) {
  mpz_class a = abs(v);
  if (a < 65536) return -1;
  if (mpz_popcount(a.get_mpz_t()) != 1) return -1;
  return static_cast<long>(mpz_scan1(a.get_mpz_t(), 0));
}

std::string integer_text(const mpz_class& v) {
  long k = power_of_two_exponent(v);
  if (k < 0) return v.get_str();
  return (v < 0 ? "-2^" : "2^") + std::to_string(k);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = trim(text);
  if (auto p = s.find('^'); p != std::string::npos) {
    if (s[0] == '-') return -parse_rational(std::string_view(s).substr(1));
    mpz_class base = parse_integer(trim(s.substr(0, p)));
    mpz_class exp = parse_integer(trim(s.substr(p + 1)));
    if (exp < 0 || exp > 4096) throw std::invalid_argument("bad exponent: " + s);
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
    return Rational(r);
  }
  if (auto p = s.find('/'); p != std::string::npos) {
    mpz_class num = parse_integer(trim(s.substr(0, p)));
    mpz_class den = parse_integer(trim(s.substr(p + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto p = s.find('.'); p != std::string::npos) {
    std::string ip = s.substr(0, p), fp = s.substr(p + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (ip.empty() || ip == "-" || ip == "+") ip += "0";
    if (fp.empty()) fp = "0";
    for (char c : fp)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad number: " + s);
    mpz_class whole = abs(parse_integer(ip));
    mpz_class frac(fp, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    Rational r(whole * scale + frac, scale);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }
  return Rational(parse_integer(s));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return integer_text(value.get_num());
  return integer_text(value.get_num()) + "/" + integer_text(value.get_den());
}

Rational floor_of(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

Rational ceil_of(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

bool is_integer(const Rational& value) { return mpz_divisible_p(value.get_num_mpz_t(), value.get_den_mpz_t()) != 0; }

}  // namespace agr
