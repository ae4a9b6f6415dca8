#pragma once

#include <optional>

#include "ura/automata/automaton.hpp"
#include "ura/automata/data.hpp"

namespace ura {

struct PropertyReport {
  bool deterministic = true;
  bool unambiguous = true;
  bool non_guessing = true;
  // Canonical words witnessing each failure.
  std::optional<DataWord> nondeterminism_witness;
  std::optional<DataWord> ambiguity_witness;
  std::optional<DataWord> guessing_witness;
};

// Breadth-first reachability over abstract states (location and equality
// type of the valuation), replayed on canonical atoms. The automaton is
// orbitised first.
PropertyReport check_properties(const RegisterAutomaton& a);

}  // namespace ura
