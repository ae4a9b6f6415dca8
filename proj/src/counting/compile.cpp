#include "ura/counting/compile.hpp"

#include <map>

#include "ura/automata/orbitise.hpp"
#include "ura/automata/properties.hpp"
#include "ura/core/error.hpp"

namespace ura {

std::string counting_variable_name(const RegisterAutomaton& a, std::size_t location, const EqualityType& orbit) {
  return "G_" + a.locations[location] + "[" + orbit.to_string() + "]";
}

CountingSystem build_counting_system(const RegisterAutomaton& input) {
  RegisterAutomaton a = input.orbitised ? input : orbitise(input);
  if (!check_properties(a).non_guessing) throw PreconditionError("automaton is guessing");
  const auto d = static_cast<std::size_t>(a.registers);
  const auto orbits = valuation_orbits(d);

  CountingSystem out;
  LinrecSystem& sys = out.system;
  std::map<std::pair<std::size_t, EqualityType>, std::size_t> index;
  for (std::size_t l = 0; l < a.locations.size(); ++l) {
    for (const EqualityType& o : orbits) {
      index[{l, o}] = sys.variables.size();
      sys.variables.push_back(counting_variable_name(a, l, o));
      out.orbit_of.emplace_back(l, o);
    }
  }
  out.stirling_variable = sys.variables.size();
  sys.variables.push_back("S");
  const std::size_t m = sys.variables.size();
  sys.equations.assign(m, std::vector<AffineOperator>(m));
  sys.boundaries.assign(m, Boundary{Rat(0), Rat(0), Rat(0)});

  for (const Rule& r : a.rules) {
    const EqualityType& t = *r.type;
    EqualityType source = t.restrict(0, d);
    EqualityType target = t.restrict(d + 1, 2 * d + 1);
    const std::size_t from = index.at({r.source, source});
    const std::size_t to = index.at({r.target, target});
    AffineOperator& op = sys.equations[to][from];
    const int width = source.width();
    const bool input_in_register = t.code(d) < width;
    if (input_in_register) {
      op.p10 += PolyK(1);
    } else {
      op.p00 += PolyK(1);
      op.p10 += PolyK(std::vector<Rat>{Rat(1 - width), Rat(1)});
    }
  }
  for (std::size_t l : a.initial) sys.boundaries[index.at({l, orbits.front()})].origin = 1;

  const auto s = static_cast<long>(a.alphabet.size());
  const LinrecSystem st = stirling_system(s);
  sys.equations[out.stirling_variable][out.stirling_variable] = st.equations[0][0];
  sys.boundaries[out.stirling_variable] = st.boundaries[0];

  DerivedVariable g{"G", {{out.stirling_variable, Rat(1)}}};
  for (std::size_t v = 0; v < out.orbit_of.size(); ++v)
    if (a.is_final(out.orbit_of[v].first)) g.terms.emplace_back(v, Rat(-1));
  sys.derived.push_back(std::move(g));
  return out;
}

}  // namespace ura
