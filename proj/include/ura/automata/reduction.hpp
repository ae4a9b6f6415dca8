#pragma once

#include <vector>

#include "ura/automata/automaton.hpp"

namespace ura {

// Completes a deterministic orbitised automaton with a sink and swaps final
// and non-final locations. Throws PreconditionError if `a` is not
// deterministic.
RegisterAutomaton determinise_complement(const RegisterAutomaton& a);

// One initial location; rules leaving the old initial locations are copied
// onto a new start location. Returns `a` unchanged if it has at most one.
RegisterAutomaton merge_initial_locations(const RegisterAutomaton& a);

// Relabels every rule of `a` with its own symbol ("t<i>"). The result is
// deterministic when `a` is orbitised with a single initial location.
RegisterAutomaton relabel_by_rules(const RegisterAutomaton& a);

// Synchronous product with registers of `b` placed after those of `a`.
// Alphabets must agree; both must be orbitised. The result is orbitised.
RegisterAutomaton product(const RegisterAutomaton& a, const RegisterAutomaton& b);

// Prepends `leading` registers that stay undefined on every rule.
RegisterAutomaton pad_registers(const RegisterAutomaton& a, int leading);

// Disjoint union of two orbitised automata over the same alphabet and
// register count. Clashing location names of `b` are renamed.
RegisterAutomaton disjoint_union(const RegisterAutomaton& a, const RegisterAutomaton& b);

// All orbits of the joint tuple whose restrictions to the two components are
// `ta` and `tb` (component registers laid out as a then b).
std::vector<EqualityType> joint_orbits(const EqualityType& ta, int da, const EqualityType& tb, int db);

// Builds C over the alphabet of rules of `a` such that C is universal iff
// L(a) is included in L(b). `a` is orbitised first when needed. Throws
// PreconditionError naming the violated property.
RegisterAutomaton reduce_inclusion_to_universality(const RegisterAutomaton& a, const RegisterAutomaton& b);

}  // namespace ura
