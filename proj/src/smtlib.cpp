#include "agr/smtlib.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <unistd.h>

namespace agr {

namespace {

std::string smt_rational(const Rational& r) {
  auto nat = [](const mpz_class& z) { return z.get_str() + ".0"; };
  std::string num = nat(abs(r.get_num()));
  if (r < 0) num = "(- " + num + ")";
  if (r.get_den() == 1) return num;
  return "(/ " + num + " " + nat(r.get_den()) + ")";
}

std::string smt_linexpr(const LinExpr& e) {
  std::vector<std::string> parts;
  for (const auto& [v, a] : e.terms()) {
    if (a == 1) parts.push_back(smt_symbol(v));
    else parts.push_back("(* " + smt_rational(a) + " " + smt_symbol(v) + ")");
  }
  if (e.constant() != 0 || parts.empty()) parts.push_back(smt_rational(e.constant()));
  if (parts.size() == 1) return parts[0];
  std::string out = "(+";
  for (const auto& p : parts) out += " " + p;
  return out + ")";
}

// Minimal s-expression reader for solver replies.
struct Sexp {
  std::string atom;
  std::vector<Sexp> list;
  bool is_list = false;
};

struct Reader {
  const std::string& s;
  size_t i = 0;
  void skip() {
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      else if (s[i] == ';')
        while (i < s.size() && s[i] != '\n') ++i;
      else break;
    }
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  Sexp read() {
    skip();
    if (i >= s.size()) throw SmtParseError("unexpected end of solver reply");
    Sexp e;
    if (s[i] == '(') {
      e.is_list = true;
      ++i;
      while (true) {
        skip();
        if (i >= s.size()) throw SmtParseError("unbalanced parentheses in solver reply");
        if (s[i] == ')') {
          ++i;
          break;
        }
        e.list.push_back(read());
      }
      return e;
    }
    if (s[i] == ')') throw SmtParseError("unexpected ')' in solver reply");
    if (s[i] == '|') {
      size_t j = s.find('|', i + 1);
      if (j == std::string::npos) throw SmtParseError("unterminated quoted symbol");
      e.atom = s.substr(i + 1, j - i - 1);
      i = j + 1;
      return e;
    }
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '(' && s[j] != ')') ++j;
    e.atom = s.substr(i, j - i);
    i = j;
    return e;
  }
};

Rational eval_value(const Sexp& e) {
  if (!e.is_list) return parse_rational(e.atom);
  if (e.list.empty() || e.list[0].is_list) throw SmtParseError("bad model value");
  const std::string& op = e.list[0].atom;
  if (op == "-" && e.list.size() == 2) return -eval_value(e.list[1]);
  if (op == "-" && e.list.size() == 3) return eval_value(e.list[1]) - eval_value(e.list[2]);
  if (op == "/" && e.list.size() == 3) return eval_value(e.list[1]) / eval_value(e.list[2]);
  throw SmtParseError("unsupported model value operator " + op);
}

}  // namespace

std::string smt_symbol(const std::string& name) {
  bool simple = !name.empty() && !std::isdigit(static_cast<unsigned char>(name[0]));
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) simple = false;
  return simple ? name : "|" + name + "|";
}

std::string smt_term(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return "true";
    case K::False: return "false";
    case K::Atom: {
      const Atom& a = f.as_atom();
      std::string l = smt_linexpr(a.lhs), r = smt_linexpr(a.rhs);
      switch (a.rel) {
        case Rel::Lt: return "(< " + l + " " + r + ")";
        case Rel::Le: return "(<= " + l + " " + r + ")";
        case Rel::Eq: return "(= " + l + " " + r + ")";
        case Rel::Ne: return "(not (= " + l + " " + r + "))";
        case Rel::Ge: return "(>= " + l + " " + r + ")";
        case Rel::Gt: return "(> " + l + " " + r + ")";
      }
      return "";
    }
    case K::Not: return "(not " + smt_term(f.children()[0]) + ")";
    default: {
      std::string out = f.kind() == K::And ? "(and" : "(or";
      for (const auto& k : f.children()) out += " " + smt_term(k);
      return out + ")";
    }
  }
}

std::string to_smtlib(const Formula& f) {
  std::string out = "(set-logic LRA)\n(set-option :produce-models true)\n";
  for (const auto& v : f.vars()) out += "(declare-fun " + smt_symbol(v) + " () Real)\n";
  out += "(assert " + smt_term(f) + ")\n(check-sat)\n(get-model)\n";
  return out;
}

SatResult parse_smt_reply(const std::string& reply) {
  Reader rd{reply};
  if (rd.done()) throw SmtParseError("empty solver reply");
  Sexp head = rd.read();
  if (head.is_list) throw SmtParseError("expected sat/unsat");
  if (head.atom == "unsat") return SatResult{};
  if (head.atom != "sat") throw SmtParseError("solver answered '" + head.atom + "'");
  SatResult r{true, {}};
  if (rd.done()) return r;
  Sexp model = rd.read();
  if (!model.is_list) return r;
  size_t start = (!model.list.empty() && !model.list[0].is_list && model.list[0].atom == "model") ? 1 : 0;
  for (size_t k = start; k < model.list.size(); ++k) {
    const Sexp& d = model.list[k];
    if (!d.is_list || d.list.size() != 5 || d.list[0].atom != "define-fun") continue;
    r.model[d.list[1].atom] = eval_value(d.list[4]);
  }
  return r;
}

SatResult ExternalBackend::check(const Formula& f) const {
  char path[] = "/tmp/agr_smt_XXXXXX";
  int fd = mkstemp(path);
  if (fd < 0) throw std::runtime_error("cannot create temporary SMT-LIB file");
  {
    std::string script = to_smtlib(f);
    if (write(fd, script.data(), script.size()) != static_cast<ssize_t>(script.size())) {
      close(fd);
      unlink(path);
      throw std::runtime_error("cannot write SMT-LIB script");
    }
    close(fd);
  }
  std::string cmd = command_ + " < " + path + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    unlink(path);
    throw std::runtime_error("cannot start external solver: " + command_);
  }
  std::string reply;
  std::array<char, 4096> buf;
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) reply.append(buf.data(), n);
  pclose(pipe);
  unlink(path);
  SatResult r = parse_smt_reply(reply);
  if (r.sat) {
    for (const auto& v : f.vars())
      if (!r.model.count(v)) r.model[v] = 0;
  }
  return r;
}

}  // namespace agr
