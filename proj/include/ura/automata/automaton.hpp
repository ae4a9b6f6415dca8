#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ura/automata/constraint.hpp"
#include "ura/automata/equality_type.hpp"

namespace ura {

struct Rule {
  std::size_t source = 0;
  std::size_t symbol = 0;
  std::size_t target = 0;
  Constraint guard;
  // Set when the guard denotes exactly one orbit over 2d+1 positions.
  std::optional<EqualityType> type;
};

struct RegisterAutomaton {
  int registers = 0;
  std::vector<std::string> alphabet;
  std::vector<std::string> locations;
  std::vector<std::size_t> initial;
  std::vector<std::size_t> final;
  std::vector<Rule> rules;
  // Every rule carries its orbit in `type`.
  bool orbitised = false;

  bool is_initial(std::size_t location) const;
  bool is_final(std::size_t location) const;
  std::optional<std::size_t> location_index(std::string_view name) const;
  std::optional<std::size_t> symbol_index(std::string_view name) const;

  // Throws Error when references or register indices are out of range.
  void validate() const;
};

// The single orbit denoted by `guard`, if it denotes exactly one.
std::optional<EqualityType> single_orbit(const Constraint& guard, int registers);

// Fills rule types where the guard is a single orbit and sets the flag when
// every rule has one.
void detect_orbits(RegisterAutomaton& a);

RegisterAutomaton parse_automaton(std::string_view text);
std::string serialize_automaton(const RegisterAutomaton& a);

// A location name not yet used, starting from `base`.
std::string fresh_location_name(const RegisterAutomaton& a, const std::string& base);

}  // namespace ura
