#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "ura/automata/automaton.hpp"
#include "ura/automata/data.hpp"
#include "ura/core/rational.hpp"
#include "ura/counting/linrec.hpp"

namespace ura {

// Restricted-growth strings of length n with maximum k (atoms 1..k).
void rgs_enumerate(std::size_t n, std::size_t k, const std::function<void(const std::vector<Atom>&)>& visit);
std::vector<std::vector<Atom>> rgs_enumerate(std::size_t n, std::size_t k);

// Every canonical data word (restricted-growth atoms, any symbols) of length
// at most max_length, in depth-first order; `visit` returns false to prune
// the extensions of the visited word.
void for_each_canonical_word(std::size_t alphabet_size, std::size_t max_length,
                             const std::function<bool(const DataWord&)>& visit);

struct OracleCounts {
  std::map<std::pair<std::size_t, EqualityType>, Int> runs;  // by end location and end valuation orbit
  Int accepted_words;
};

// Brute force over canonical words of length n and width k.
OracleCounts oracle_count(const RegisterAutomaton& a, std::size_t n, std::size_t k);

// oracle_count for all n <= max_n and k <= max_k at once, as a table with
// the variable names of build_counting_system for location variables plus the
// column "accepted".
SequenceTable oracle_table(const RegisterAutomaton& a, std::size_t max_n, std::size_t max_k);

}  // namespace ura
