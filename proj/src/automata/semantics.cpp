#include "ura/automata/semantics.hpp"

#include <algorithm>
#include <map>

namespace ura {

namespace {

Atom max_atom(const Valuation& v, Atom input) {
  Atom m = input;
  for (const Slot& s : v)
    if (s) m = std::max(m, *s);
  return m;
}

}  // namespace

void for_each_successor(const RegisterAutomaton& a, const Configuration& c, std::size_t symbol, Atom input,
                        const std::function<void(std::size_t, const Valuation&)>& visit) {
  const auto d = static_cast<std::size_t>(a.registers);
  std::vector<Slot> prefix(c.valuation.begin(), c.valuation.end());
  prefix.push_back(input);
  EqualityType prefix_type = EqualityType::of(prefix);
  const int prefix_width = prefix_type.width();
  const Atom top = max_atom(c.valuation, input);

  // Atom realising each block of the prefix.
  std::vector<Atom> block_atom(static_cast<std::size_t>(prefix_width));
  for (std::size_t p = 0; p < prefix.size(); ++p)
    if (prefix[p]) block_atom[static_cast<std::size_t>(prefix_type.code(p))] = *prefix[p];

  for (std::size_t ri = 0; ri < a.rules.size(); ++ri) {
    const Rule& r = a.rules[ri];
    if (r.source != c.location || r.symbol != symbol) continue;
    if (r.type) {
      const auto& codes = r.type->codes();
      if (!std::equal(prefix_type.codes().begin(), prefix_type.codes().end(), codes.begin())) continue;
      Valuation next(d);
      for (std::size_t i = 0; i < d; ++i) {
        int code = codes[d + 1 + i];
        if (code == EqualityType::kBottom) continue;
        next[i] = code < prefix_width ? block_atom[static_cast<std::size_t>(code)]
                                      : top + 1 + static_cast<Atom>(code - prefix_width);
      }
      visit(ri, next);
      continue;
    }
    std::vector<Slot> candidates{Slot{}};
    for (Atom at : block_atom) candidates.push_back(at);
    candidates.push_back(top + 1);
    std::vector<std::size_t> choice(d, 0);
    std::vector<Slot> tuple = prefix;
    tuple.resize(2 * d + 1);
    while (true) {
      for (std::size_t i = 0; i < d; ++i) tuple[d + 1 + i] = candidates[choice[i]];
      if (r.guard.holds(tuple, a.registers)) visit(ri, Valuation(tuple.begin() + static_cast<long>(d) + 1, tuple.end()));
      std::size_t i = 0;
      while (i < d && ++choice[i] == candidates.size()) choice[i++] = 0;
      if (i == d) break;
    }
  }
}

std::set<Configuration> step(const RegisterAutomaton& a, const Configuration& c, std::size_t symbol, Atom input) {
  std::set<Configuration> out;
  for_each_successor(a, c, symbol, input, [&](std::size_t ri, const Valuation& next) {
    out.insert(Configuration{a.rules[ri].target, next});
  });
  return out;
}

std::vector<Configuration> initial_configurations(const RegisterAutomaton& a) {
  std::vector<Configuration> out;
  for (std::size_t l : a.initial) out.push_back(Configuration{l, Valuation(static_cast<std::size_t>(a.registers))});
  return out;
}

std::vector<Run> runs_over(const RegisterAutomaton& a, const DataWord& w) {
  std::vector<Run> frontier;
  for (auto& c : initial_configurations(a)) frontier.push_back(Run{c, {}});
  for (const Letter& letter : w) {
    std::vector<Run> next;
    for (const Run& run : frontier) {
      for_each_successor(a, run.last(), letter.symbol, letter.atom, [&](std::size_t ri, const Valuation& v) {
        Run extended = run;
        extended.steps.push_back(RunStep{ri, letter.symbol, letter.atom, Configuration{a.rules[ri].target, v}});
        next.push_back(std::move(extended));
      });
    }
    frontier = std::move(next);
  }
  return frontier;
}

bool accepts(const RegisterAutomaton& a, const DataWord& w) {
  std::set<Configuration> current;
  for (auto& c : initial_configurations(a)) current.insert(c);
  for (const Letter& letter : w) {
    std::set<Configuration> next;
    for (const auto& c : current) {
      auto s = step(a, c, letter.symbol, letter.atom);
      next.insert(s.begin(), s.end());
    }
    current = std::move(next);
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(), [&](const Configuration& c) { return a.is_final(c.location); });
}

std::size_t count_accepting_runs(const RegisterAutomaton& a, const DataWord& w) {
  std::map<Configuration, std::size_t> current;
  for (auto& c : initial_configurations(a)) current[c] += 1;
  for (const Letter& letter : w) {
    std::map<Configuration, std::size_t> next;
    for (const auto& [c, mult] : current) {
      for_each_successor(a, c, letter.symbol, letter.atom, [&, m = mult](std::size_t ri, const Valuation& v) {
        next[Configuration{a.rules[ri].target, v}] += m;
      });
    }
    current = std::move(next);
  }
  std::size_t total = 0;
  for (const auto& [c, mult] : current)
    if (a.is_final(c.location)) total += mult;
  return total;
}

}  // namespace ura
