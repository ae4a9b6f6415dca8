#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "ura/automata/automaton.hpp"
#include "ura/automata/data.hpp"

namespace ura {

struct Configuration {
  std::size_t location = 0;
  Valuation valuation;
  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

struct RunStep {
  std::size_t rule = 0;  // index into the automaton's rules
  std::size_t symbol = 0;
  Atom atom = 0;
  Configuration config;
};

// Runs are sequences of rule applications, so two parallel copies of the same
// rule yield two distinct runs.
struct Run {
  Configuration start;
  std::vector<RunStep> steps;
  const Configuration& last() const { return steps.empty() ? start : steps.back().config; }
};

// Calls visit(rule_index, next_valuation) for every way to take one step.
// For rules with a known orbit the next valuation is determined (fresh
// blocks get the smallest atoms above everything in sight); otherwise
// candidates range over undefined, the atoms in sight, and one fresh atom.
void for_each_successor(const RegisterAutomaton& a, const Configuration& c, std::size_t symbol, Atom input,
                        const std::function<void(std::size_t, const Valuation&)>& visit);

std::set<Configuration> step(const RegisterAutomaton& a, const Configuration& c, std::size_t symbol, Atom input);

std::vector<Configuration> initial_configurations(const RegisterAutomaton& a);

std::vector<Run> runs_over(const RegisterAutomaton& a, const DataWord& w);

bool accepts(const RegisterAutomaton& a, const DataWord& w);

std::size_t count_accepting_runs(const RegisterAutomaton& a, const DataWord& w);

}  // namespace ura
