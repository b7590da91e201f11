#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "agr/dsl.hpp"

namespace agr::test {

std::string fixture_path(const std::string& rel) { return std::string(AGR_FIXTURES) + "/" + rel; }

Program fixture(const std::string& rel) { return load_program_file(fixture_path(rel)).program; }

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

LinExpr random_expr(Rng& rng, const std::vector<std::string>& vars, int max_coeff) {
  LinExpr e(uniform(rng, -5, 5));
  for (const auto& v : vars)
    if (uniform(rng, 0, 2) != 0) e += LinExpr::variable(v, uniform(rng, -max_coeff, max_coeff));
  return e;
}

}  // namespace

Formula random_formula(Rng& rng, const std::vector<std::string>& vars, int depth, int max_coeff) {
  if (depth <= 0 || uniform(rng, 0, 3) == 0) {
    static const Rel rels[] = {Rel::Lt, Rel::Le, Rel::Eq, Rel::Ne, Rel::Ge, Rel::Gt};
    return Formula::atom(random_expr(rng, vars, max_coeff), rels[uniform(rng, 0, 5)], LinExpr(0));
  }
  switch (uniform(rng, 0, 4)) {
    case 0: return !random_formula(rng, vars, depth - 1, max_coeff);
    case 1:
    case 2:
      return random_formula(rng, vars, depth - 1, max_coeff) && random_formula(rng, vars, depth - 1, max_coeff);
    default:
      return random_formula(rng, vars, depth - 1, max_coeff) || random_formula(rng, vars, depth - 1, max_coeff);
  }
}

std::vector<Valuation> integer_grid(const std::vector<std::string>& vars) {
  std::vector<Valuation> out{Valuation{}};
  for (const auto& v : vars) {
    std::vector<Valuation> next;
    for (const auto& base : out)
      for (int k = -5; k <= 5; ++k) {
        Valuation w = base;
        w[v] = k;
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

bool grid_sat(const Formula& f, const std::vector<std::string>& vars) {
  for (const auto& v : integer_grid(vars))
    if (f.evaluate(v)) return true;
  return false;
}

const std::vector<Rational>& dense_line() {
  static const std::vector<Rational> line = [] {
    std::vector<Rational> pts{Rational(-1000), Rational(1000)};
    for (int k = -100; k <= 100; ++k) pts.emplace_back(k, 4);
    for (auto& p : pts) p.canonicalize();
    return pts;
  }();
  return line;
}

bool exists_on_line(const Formula& f, const std::string& x, Valuation v) {
  for (const auto& p : dense_line()) {
    v[x] = p;
    if (f.evaluate(v)) return true;
  }
  return false;
}

bool forall_on_line(const Formula& f, const std::string& x, Valuation v) {
  for (const auto& p : dense_line()) {
    v[x] = p;
    if (!f.evaluate(v)) return false;
  }
  return true;
}

Program random_nfa(Rng& rng, size_t max_states, const std::vector<Action>& letters) {
  Program a("N");
  size_t n = static_cast<size_t>(uniform(rng, 1, static_cast<int>(max_states)));
  for (size_t i = 0; i < n; ++i) a.add_state("n" + std::to_string(i), uniform(rng, 0, 2) == 0);
  for (const auto& l : letters) a.add_letter(l);
  for (size_t i = 0; i < n; ++i)
    for (const auto& l : letters)
      for (size_t j = 0; j < n; ++j)
        if (uniform(rng, 0, static_cast<int>(n) + 1) == 0)
          a.add_transition(static_cast<StateId>(i), l, static_cast<StateId>(j));
  return a;
}

bool oracle_accepts(const Program& a, const Trace& w) {
  std::set<StateId> cur{a.initial()};
  for (const auto& x : w) {
    std::set<StateId> next;
    for (const auto& t : a.transitions())
      if (cur.count(t.from) && t.action.key() == x.key()) next.insert(t.to);
    cur = std::move(next);
  }
  return std::any_of(cur.begin(), cur.end(), [&](StateId s) { return a.is_accepting(s); });
}

std::vector<Trace> all_words(const std::vector<Action>& letters, size_t max_len) {
  std::vector<Trace> out{Trace{}};
  size_t begin = 0;
  for (size_t len = 1; len <= max_len; ++len) {
    size_t end = out.size();
    for (size_t i = begin; i < end; ++i)
      for (const auto& l : letters) out.push_back(concat(out[i], l, {}));
    begin = end;
  }
  return out;
}

std::vector<Action> letters_ab() { return {Action::write("a", "x"), Action::write("b", "x")}; }

namespace {

Program random_component(Rng& rng, const std::string& name, const std::string& prefix, size_t max_states,
                         const std::vector<Action>& pool) {
  Program m(name);
  size_t n = static_cast<size_t>(uniform(rng, 1, static_cast<int>(max_states)));
  for (size_t i = 0; i < n; ++i) m.add_state(prefix + std::to_string(i), uniform(rng, 0, 2) != 0);
  std::vector<Action> letters;
  for (const auto& l : pool)
    if (uniform(rng, 0, 3) != 0) letters.push_back(l);
  if (letters.empty()) letters.push_back(pool[0]);
  // A spine through all states keeps most of them reachable.
  for (size_t i = 0; i + 1 < n; ++i)
    m.add_transition(static_cast<StateId>(i), letters[static_cast<size_t>(uniform(rng, 0, static_cast<int>(letters.size()) - 1))],
                     static_cast<StateId>(i + 1));
  size_t extra = static_cast<size_t>(uniform(rng, 0, static_cast<int>(2 * n)));
  for (size_t k = 0; k < extra; ++k)
    m.add_transition(static_cast<StateId>(uniform(rng, 0, static_cast<int>(n) - 1)),
                     letters[static_cast<size_t>(uniform(rng, 0, static_cast<int>(letters.size()) - 1))],
                     static_cast<StateId>(uniform(rng, 0, static_cast<int>(n) - 1)));
  for (const auto& l : letters) {
    m.add_letter(l);
    for (const auto& v : l.vars()) m.add_var(v);
    m.add_channel(l.channel());
  }
  return m;
}

}  // namespace

RandomSystem random_system(Rng& rng, size_t max_states) {
  RandomSystem s;
  s.m1 = random_component(rng, "M1", "p", max_states,
                          {Action::read("g", "y"), Action::write("h", "y"), Action::write("c", "y")});
  s.m2 = random_component(rng, "M2", "q", max_states,
                          {Action::write("g", "x"), Action::read("h", "x"), Action::write("a", "x"), Action::write("b", "x")});
  for (const auto& ch : {"g", "h"}) {
    s.m1.add_channel(ch);
    s.m2.add_channel(ch);
  }

  std::vector<Action> pool{Action::write("a", "x"), Action::write("b", "x"), Action::write("c", "y"),
                           Action::sync("g", "x", "y"), Action::sync("h", "y", "x")};
  Program p("P");
  size_t n = static_cast<size_t>(uniform(rng, 1, 3));
  for (size_t i = 0; i < n; ++i) p.add_state("r" + std::to_string(i), true);
  StateId err = p.add_state("rerr", false);
  std::vector<Action> used;
  for (const auto& l : pool)
    if (uniform(rng, 0, 2) != 0) used.push_back(l);
  if (used.empty()) used.push_back(pool[3]);
  for (size_t i = 0; i < n; ++i)
    for (const auto& l : used) {
      int r = uniform(rng, 0, 5);
      if (r == 0) p.add_transition(static_cast<StateId>(i), l, err);
      else if (r != 1) p.add_transition(static_cast<StateId>(i), l, static_cast<StateId>(uniform(rng, 0, static_cast<int>(n) - 1)));
    }
  for (const auto& l : used) {
    p.add_letter(l);
    p.add_transition(err, l, err);
    for (const auto& v : l.vars()) p.add_var(v);
    p.add_channel(l.channel());
  }
  s.p = std::move(p);
  return s;
}

bool isomorphic(const Program& a, const Program& b) {
  if (a.size() != b.size() || a.transitions().size() != b.transitions().size()) return false;
  if (a.alphabet() != b.alphabet()) return false;
  auto signature = [](const Program& m, StateId s) {
    std::multiset<std::string> out, in;
    for (const auto& t : m.transitions()) {
      if (t.from == s) out.insert(t.action.key());
      if (t.to == s) in.insert(t.action.key());
    }
    return std::make_tuple(m.is_accepting(s), s == m.initial(), out, in);
  };
  std::set<std::tuple<StateId, std::string, StateId>> eb;
  for (const auto& t : b.transitions()) eb.insert({t.from, t.action.key(), t.to});

  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  std::function<bool(StateId)> assign = [&](StateId s) -> bool {
    if (s == a.size()) {
      for (const auto& t : a.transitions())
        if (!eb.count({static_cast<StateId>(map[t.from]), t.action.key(), static_cast<StateId>(map[t.to])})) return false;
      return true;
    }
    auto sig = signature(a, s);
    for (StateId c = 0; c < b.size(); ++c) {
      if (used[c] || signature(b, c) != sig) continue;
      map[s] = static_cast<int>(c);
      used[c] = true;
      if (assign(s + 1)) return true;
      used[c] = false;
    }
    map[s] = -1;
    return false;
  };
  return assign(0);
}

}  // namespace agr::test
