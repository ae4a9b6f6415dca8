#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "ura/automata/automaton.hpp"

namespace ura::test {

// Fixed unless URA_SEED is set in the environment.
std::uint64_t seed();

std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);
RegisterAutomaton load_fixture(const std::string& name);

struct RandomAutomatonOptions {
  int registers = 1;
  std::size_t max_locations = 3;
  std::size_t max_symbols = 1;
  std::size_t max_rules = 6;
  bool deterministic = false;
};

// Orbitised and non-guessing by construction: next registers only copy
// current registers or the input, or become undefined.
RegisterAutomaton random_automaton(std::mt19937_64& rng, const RandomAutomatonOptions& options);

}  // namespace ura::test

#include <functional>
#include <vector>

#include "ura/automata/data.hpp"

namespace ura::test {

// Walks all canonical words up to max_length over the shared alphabet size,
// tracking reachable configurations of every automaton. `check` receives the
// word and per-automaton acceptance; returning false stops the walk, and the
// function then returns false.
bool for_all_canonical_words(const std::vector<const RegisterAutomaton*>& automata, std::size_t alphabet_size,
                             std::size_t max_length,
                             const std::function<bool(const DataWord&, const std::vector<bool>&)>& check);

bool universal_up_to(const RegisterAutomaton& a, std::size_t max_length);
bool included_up_to(const RegisterAutomaton& a, const RegisterAutomaton& b, std::size_t max_length);

}  // namespace ura::test
