#pragma once

#include <cstddef>
#include <vector>

#include "ura/automata/automaton.hpp"

namespace ura {

struct OrbitiseResult {
  RegisterAutomaton automaton;
  // Indices of input rules whose guard is unsatisfiable (no orbit emitted).
  std::vector<std::size_t> unsatisfiable_rules;
};

// Splits each rule into one rule per orbit of its guard. Rules that already
// carry an orbit are kept as they are.
OrbitiseResult orbitise_with_lint(const RegisterAutomaton& a);

RegisterAutomaton orbitise(const RegisterAutomaton& a);

}  // namespace ura
