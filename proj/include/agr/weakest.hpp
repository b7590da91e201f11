#pragma once

#include "agr/composition.hpp"

namespace agr {

struct ConstraintPresentError : ProgramError {
  using ProgramError::ProgramError;
};

struct WeakestAssumption {
  Program dfa;  // over the M2 alphabet, complete
  // Subset of (M1 state, P state) pairs represented by each DFA state.
  std::vector<std::set<std::pair<StateId, StateId>>> subsets;
};

// For constraint-free M1, P and M2 alphabet: the DFA accepting exactly the words w
// over alpha2 with M1 || w |= P. `alpha2` is M2's alphabet; its channels and
// variables form the signature used for composition.
WeakestAssumption weakest_assumption(const Program& m1, const Program& p, const Alphabet& alpha2);

// Signature-only program (one state, no edges) carrying an alphabet.
Program signature_program(const Alphabet& alpha);

}  // namespace agr
