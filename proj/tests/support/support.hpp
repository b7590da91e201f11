#pragma once

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "agr/formula.hpp"
#include "agr/program.hpp"

namespace agr::test {

using Rng = std::mt19937_64;

std::string fixture_path(const std::string& rel);
Program fixture(const std::string& rel);

// Random quantifier-free formula; coefficients in [-max_coeff, max_coeff], constants in [-5, 5].
Formula random_formula(Rng& rng, const std::vector<std::string>& vars, int depth, int max_coeff = 2);

// Does some point of the integer grid [-5,5]^n satisfy f?
bool grid_sat(const Formula& f, const std::vector<std::string>& vars);
// Every valuation of vars over [-5,5].
std::vector<Valuation> integer_grid(const std::vector<std::string>& vars);
// Quarter steps on [-25,25] plus far sentinels. Exact for one variable whose
// coefficients are in {+-1, +-2} when the other terms stay within [-25,25].
const std::vector<Rational>& dense_line();
bool exists_on_line(const Formula& f, const std::string& x, Valuation v);
bool forall_on_line(const Formula& f, const std::string& x, Valuation v);

// Random NFA over the letters: 1..max_states states, random edges and accepting set.
Program random_nfa(Rng& rng, size_t max_states, const std::vector<Action>& letters);
// Independent subset simulation over the edge list.
bool oracle_accepts(const Program& a, const Trace& w);
std::vector<Trace> all_words(const std::vector<Action>& letters, size_t max_len);
std::vector<Action> letters_ab();

// Constraint-free M1, M2 and property sharing channels g (M2 writes) and h (M1 writes).
struct RandomSystem {
  Program m1, m2, p;
};
RandomSystem random_system(Rng& rng, size_t max_states = 6);

// Bijection on states preserving initial, acceptance and labelled edges.
bool isomorphic(const Program& a, const Program& b);

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

}  // namespace agr::test
