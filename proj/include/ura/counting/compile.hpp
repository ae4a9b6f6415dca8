#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ura/automata/automaton.hpp"
#include "ura/counting/linrec.hpp"

namespace ura {

// Orbit-counting system of an automaton: one variable per (location,
// valuation orbit), then "S" counting all word orbits, and the derived
// variable "G" counting rejected word orbits.
struct CountingSystem {
  LinrecSystem system;
  std::vector<std::pair<std::size_t, EqualityType>> orbit_of;  // per location variable
  std::size_t stirling_variable = 0;
};

std::string counting_variable_name(const RegisterAutomaton& a, std::size_t location, const EqualityType& orbit);

// The automaton is orbitised first if needed. Throws PreconditionError if it
// is guessing.
CountingSystem build_counting_system(const RegisterAutomaton& a);

}  // namespace ura
