#include "ura/automata/orbitise.hpp"

namespace ura {

OrbitiseResult orbitise_with_lint(const RegisterAutomaton& a) {
  OrbitiseResult out;
  out.automaton = a;
  out.automaton.rules.clear();
  const auto positions = static_cast<std::size_t>(2 * a.registers + 1);
  std::vector<bool> bottom_allowed(positions, true);
  bottom_allowed[static_cast<std::size_t>(a.registers)] = false;
  const auto types = enumerate_equality_types(positions, bottom_allowed);
  for (std::size_t ri = 0; ri < a.rules.size(); ++ri) {
    const Rule& r = a.rules[ri];
    if (r.type) {
      out.automaton.rules.push_back(r);
      continue;
    }
    bool any = false;
    for (const EqualityType& t : types) {
      if (!r.guard.holds(t.representative(), a.registers)) continue;
      any = true;
      out.automaton.rules.push_back(Rule{r.source, r.symbol, r.target, canonical_constraint(t, a.registers), t});
    }
    if (!any) out.unsatisfiable_rules.push_back(ri);
  }
  out.automaton.orbitised = true;
  return out;
}

RegisterAutomaton orbitise(const RegisterAutomaton& a) { return orbitise_with_lint(a).automaton; }

}  // namespace ura
