#include "agr/dsl.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace agr {

ParseError::ParseError(const std::string& source, size_t l, size_t c, const std::string& msg)
    : std::runtime_error(source + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), col(c) {}

ValidationError::ValidationError(const std::string& source, size_t l, const std::string& msg)
    : std::runtime_error(source + ":" + std::to_string(l) + ": " + msg), line(l) {}

namespace {

enum class Tok { Ident, Number, String, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  size_t col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(const std::string& line, const std::string& src, size_t lineno) {
  static const char* syms[] = {":=", "->", "&&", "||", "<=", ">=", "==", "!=", "<", ">", "=", "!", "?",
                               "(",  ")",  "[",  "]",  ",",  ":",  "+",  "-",  "*", "/", "^"};
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < line.size() && line[i + 1] == '/') break;
    if (ident_start(c)) {
      size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, line.substr(i, j - i), i + 1});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j + 1 < line.size() && line[j] == '.' && std::isdigit(static_cast<unsigned char>(line[j + 1]))) {
        ++j;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      }
      out.push_back({Tok::Number, line.substr(i, j - i), i + 1});
      i = j;
      continue;
    }
    if (c == '"') {
      size_t j = line.find('"', i + 1);
      if (j == std::string::npos) throw ParseError(src, lineno, i + 1, "unterminated string");
      out.push_back({Tok::String, line.substr(i + 1, j - i - 1), i + 1});
      i = j + 1;
      continue;
    }
    bool matched = false;
    for (const char* s : syms) {
      size_t n = std::char_traits<char>::length(s);
      if (line.compare(i, n, s) == 0) {
        out.push_back({Tok::Sym, s, i + 1});
        i += n;
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(src, lineno, i + 1, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", line.size() + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, std::string src, size_t line)
      : toks_(std::move(toks)), src_(std::move(src)), line_(line) {}

  const Token& peek(size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_sym(const std::string& s, size_t k = 0) const { return peek(k).kind == Tok::Sym && peek(k).text == s; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(src_, line_, peek().col, msg + (at_end() ? " at end of line" : " near '" + peek().text + "'"));
  }
  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  void expect_sym(const std::string& s) {
    if (!is_sym(s)) fail("expected '" + s + "'");
    ++pos_;
  }
  std::string ident() {
    if (peek().kind != Tok::Ident) fail("expected identifier");
    return next().text;
  }
  std::string state_name() {
    if (peek().kind != Tok::Ident && peek().kind != Tok::String) fail("expected state name");
    return next().text;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  std::vector<std::string> name_list(bool states) {
    std::vector<std::string> out;
    if (at_end()) return out;
    out.push_back(states ? state_name() : ident());
    while (is_sym(",")) {
      ++pos_;
      out.push_back(states ? state_name() : ident());
    }
    return out;
  }

  Rational number() {
    if (peek().kind != Tok::Number) fail("expected number");
    std::string text = next().text;
    if (is_sym("^") || is_sym("/")) {
      text += next().text;
      if (peek().kind != Tok::Number) fail("expected number");
      text += next().text;
    }
    try {
      return parse_rational(text);
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  // term: ['-'] factor ('*' factor)*, at most one variable factor
  LinExpr term() {
    Rational k = 1;
    std::optional<std::string> var;
    auto factor = [&]() {
      if (peek().kind == Tok::Number) {
        k *= number();
      } else if (peek().kind == Tok::Ident) {
        std::string v = next().text;
        if (v == "true" || v == "false") fail("unexpected boolean in arithmetic");
        if (var) fail("nonlinear product of variables");
        var = v;
      } else {
        fail("expected number or variable");
      }
    };
    factor();
    while (is_sym("*")) {
      ++pos_;
      factor();
    }
    return var ? LinExpr::variable(*var, k) : LinExpr(k);
  }

  LinExpr linexpr() {
    LinExpr e;
    bool neg = false;
    if (is_sym("-")) {
      ++pos_;
      neg = true;
    } else if (is_sym("+")) {
      ++pos_;
    }
    LinExpr t = term();
    e += neg ? -t : t;
    while (is_sym("+") || is_sym("-")) {
      bool minus = next().text == "-";
      LinExpr u = term();
      e += minus ? -u : u;
    }
    return e;
  }

  Formula formula() {
    std::vector<Formula> parts{conjunction()};
    while (is_sym("||")) {
      ++pos_;
      parts.push_back(conjunction());
    }
    return parts.size() == 1 ? parts[0] : Formula::make_or(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (is_sym("&&")) {
      ++pos_;
      parts.push_back(unary());
    }
    return parts.size() == 1 ? parts[0] : Formula::make_and(std::move(parts));
  }

  Formula unary() {
    if (is_sym("!")) {
      ++pos_;
      return Formula::make_not(unary());
    }
    if (is_sym("(")) {
      ++pos_;
      Formula f = formula();
      expect_sym(")");
      return f;
    }
    if (peek().kind == Tok::Ident && peek().text == "true") {
      ++pos_;
      return Formula::top();
    }
    if (peek().kind == Tok::Ident && peek().text == "false") {
      ++pos_;
      return Formula::bottom();
    }
    LinExpr lhs = linexpr();
    static const std::map<std::string, Rel> rels = {{"<", Rel::Lt},  {"<=", Rel::Le}, {"==", Rel::Eq}, {"=", Rel::Eq},
                                                   {"!=", Rel::Ne}, {">=", Rel::Ge}, {">", Rel::Gt}};
    if (peek().kind != Tok::Sym || !rels.count(peek().text)) fail("expected comparison operator");
    Rel r = rels.at(next().text);
    LinExpr rhs = linexpr();
    return Formula::atom(lhs, r, rhs);
  }

  // Returns nullopt for the wildcard '*'.
  std::optional<Action> action() {
    if (is_sym("*")) {
      ++pos_;
      return std::nullopt;
    }
    if (is_sym("[")) {
      ++pos_;
      Formula f = formula();
      expect_sym("]");
      return Action::constraint(f);
    }
    if (is_sym("(")) {
      ++pos_;
      auto half = [&]() {
        std::string ch = ident();
        if (!is_sym("!") && !is_sym("?")) fail("expected '!' or '?'");
        bool write = next().text == "!";
        return std::make_tuple(ch, write, ident());
      };
      auto [c1, w1, v1] = half();
      expect_sym(",");
      auto [c2, w2, v2] = half();
      expect_sym(")");
      if (c1 != c2) fail("sync halves use different channels");
      if (w1 == w2) fail("sync pair needs one write and one read");
      return w1 ? Action::sync(c1, v1, v2) : Action::sync(c1, v2, v1);
    }
    std::string a = ident();
    if (is_sym(":=")) {
      ++pos_;
      return Action::assign(a, linexpr());
    }
    if (is_sym("?")) {
      ++pos_;
      return Action::read(a, ident());
    }
    if (is_sym("!")) {
      ++pos_;
      return Action::write(a, ident());
    }
    fail("expected action");
  }

  size_t line() const { return line_; }

 private:
  std::vector<Token> toks_;
  std::string src_;
  size_t line_;
  size_t pos_ = 0;
};

template <class T, class F>
T parse_whole(const std::string& text, F f) {
  LineParser lp(lex(text, "<text>", 1), "<text>", 1);
  T v = f(lp);
  lp.expect_end();
  return v;
}

struct Block {
  ParsedProgram out;
  size_t header_line = 0;
  std::optional<std::string> init;
  size_t init_line = 0;
  struct Edge {
    std::string from, to;
    std::optional<Action> action;
    size_t line;
  };
  std::vector<Edge> edges;
  std::vector<std::pair<Action, size_t>> letters;
  std::vector<std::pair<std::string, bool>> state_order;  // name, accepting
  std::map<std::string, size_t> state_index;

  void touch(const std::string& n) {
    if (state_index.count(n)) return;
    state_index[n] = state_order.size();
    state_order.emplace_back(n, false);
  }
};

ParsedProgram finish(Block& b, const std::string& src) {
  Program& p = b.out.program;
  if (!b.init) throw ValidationError(src, b.header_line, "missing 'init' declaration");
  for (const auto& [n, acc] : b.state_order) p.add_state(n, acc);
  p.set_initial(p.state(*b.init));
  auto check = [&](const Action& a, size_t line) {
    for (const auto& v : a.vars())
      if (!p.vars().count(v)) throw ValidationError(src, line, "undeclared variable '" + v + "'");
    if (a.is_comm() && !p.channels().count(a.channel()))
      throw ValidationError(src, line, "undeclared channel '" + a.channel() + "'");
    if (b.out.is_property && a.kind() == ActionKind::Assign)
      throw ValidationError(src, line, "assignment in property");
  };
  for (const auto& [a, line] : b.letters) {
    check(a, line);
    p.add_letter(a);
  }
  for (const auto& e : b.edges)
    if (e.action) {
      check(*e.action, e.line);
      p.add_letter(*e.action);
    }
  Alphabet all = p.alphabet();
  for (const auto& e : b.edges) {
    if (e.action) {
      p.add_transition(p.state(e.from), *e.action, p.state(e.to));
    } else {
      if (!b.out.is_property) throw ValidationError(src, e.line, "wildcard edge outside a property");
      for (const auto& a : all) p.add_transition(p.state(e.from), a, p.state(e.to));
    }
  }
  return std::move(b.out);
}

}  // namespace

std::vector<ParsedProgram> parse_dsl(const std::string& text, const std::string& src) {
  std::vector<ParsedProgram> result;
  std::optional<Block> cur;
  std::istringstream in(text);
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    LineParser lp(lex(raw, src, lineno), src, lineno);
    if (lp.at_end()) continue;
    const Token& first = lp.peek();
    if (first.kind == Tok::Ident && (first.text == "program" || first.text == "property")) {
      if (cur) result.push_back(finish(*cur, src));
      cur.emplace();
      cur->out.is_property = first.text == "property";
      cur->header_line = lineno;
      lp.next();
      cur->out.program.set_name(lp.state_name());
      lp.expect_end();
      continue;
    }
    if (!cur) throw ParseError(src, lineno, first.col, "expected 'program' or 'property' header");
    Block& b = *cur;
    static const std::set<std::string> keywords = {"vars", "channels", "states", "init", "accept", "letter"};
    if (first.kind == Tok::Ident && keywords.count(first.text)) {
      std::string kw = lp.next().text;
      if (kw == "vars") {
        for (const auto& v : lp.name_list(false)) b.out.program.add_var(v);
      } else if (kw == "channels") {
        for (const auto& c : lp.name_list(false)) b.out.program.add_channel(c);
      } else if (kw == "states") {
        for (const auto& st : lp.name_list(true)) b.touch(st);
      } else if (kw == "init") {
        b.init = lp.state_name();
        b.init_line = lineno;
        b.touch(*b.init);
      } else if (kw == "accept") {
        for (const auto& st : lp.name_list(true)) {
          b.touch(st);
          b.state_order[b.state_index[st]].second = true;
        }
      } else {
        auto a = lp.action();
        if (!a) lp.fail("wildcard is not a letter");
        b.letters.emplace_back(*a, lineno);
      }
      lp.expect_end();
      continue;
    }
    std::string from = lp.state_name();
    lp.expect_sym("->");
    std::string to = lp.state_name();
    lp.expect_sym(":");
    auto a = lp.action();
    lp.expect_end();
    b.touch(from);
    b.touch(to);
    b.edges.push_back({from, to, a, lineno});
  }
  if (cur) result.push_back(finish(*cur, src));
  return result;
}

ParsedProgram parse_single(const std::string& text, const std::string& source) {
  auto all = parse_dsl(text, source);
  if (all.empty()) throw ParseError(source, 1, 1, "expected 'program' or 'property'");
  if (all.size() != 1)
    throw ValidationError(source, 1, "expected exactly one program, found " + std::to_string(all.size()));
  return std::move(all[0]);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParsedProgram load_program_file(const std::string& path) { return parse_single(read_file(path), path); }

Action parse_action(const std::string& text) {
  return parse_whole<Action>(text, [](LineParser& lp) {
    auto a = lp.action();
    if (!a) lp.fail("wildcard is not an action");
    return *a;
  });
}

Formula parse_formula(const std::string& text) {
  return parse_whole<Formula>(text, [](LineParser& lp) { return lp.formula(); });
}

LinExpr parse_linexpr(const std::string& text) {
  return parse_whole<LinExpr>(text, [](LineParser& lp) { return lp.linexpr(); });
}

Trace parse_trace(const std::string& text, const std::string& src) {
  Trace t;
  std::istringstream in(text);
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    LineParser lp(lex(raw, src, lineno), src, lineno);
    if (lp.at_end()) continue;
    auto a = lp.action();
    if (!a) lp.fail("wildcard is not an action");
    lp.expect_end();
    t.push_back(*a);
  }
  return t;
}

Trace load_trace_file(const std::string& path) { return parse_trace(read_file(path), path); }

namespace {

std::string print_name(const std::string& n) {
  static const std::set<std::string> reserved = {"program", "property", "vars", "channels", "states",
                                                 "init",    "accept",   "letter", "true",   "false"};
  bool plain = !n.empty() && ident_start(n[0]) && !reserved.count(n);
  for (char c : n)
    if (!ident_char(c)) plain = false;
  return plain ? n : "\"" + n + "\"";
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out;
}

}  // namespace

std::string print_program(const Program& p, bool is_property) {
  std::ostringstream out;
  out << (is_property ? "property " : "program ") << print_name(p.name().empty() ? "unnamed" : p.name()) << "\n";
  if (!p.vars().empty()) out << "vars " << join({p.vars().begin(), p.vars().end()}) << "\n";
  if (!p.channels().empty()) out << "channels " << join({p.channels().begin(), p.channels().end()}) << "\n";
  std::vector<std::string> states, acc;
  for (StateId s = 0; s < p.size(); ++s) {
    states.push_back(print_name(p.state_name(s)));
    if (p.is_accepting(s)) acc.push_back(print_name(p.state_name(s)));
  }
  out << "states " << join(states) << "\n";
  if (p.size()) out << "init " << print_name(p.state_name(p.initial())) << "\n";
  out << "accept " << join(acc) << "\n";
  std::set<std::string> used;
  for (const auto& t : p.transitions()) used.insert(t.action.key());
  for (const auto& a : p.alphabet())
    if (!used.count(a.key())) out << "letter " << a.key() << "\n";
  for (StateId s = 0; s < p.size(); ++s)
    for (size_t idx : p.out(s)) {
      const Transition& t = p.transitions()[idx];
      out << print_name(p.state_name(t.from)) << " -> " << print_name(p.state_name(t.to)) << " : " << t.action.key()
          << "\n";
    }
  return out.str();
}

}  // namespace agr
