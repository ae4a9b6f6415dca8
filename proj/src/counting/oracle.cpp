#include "ura/counting/oracle.hpp"

#include <algorithm>

#include "ura/automata/semantics.hpp"
#include "ura/counting/compile.hpp"

namespace ura {

namespace {

void rgs_rec(std::vector<Atom>& word, std::size_t n, std::size_t k, Atom max_so_far,
             const std::function<void(const std::vector<Atom>&)>& visit) {
  const std::size_t remaining = n - word.size();
  if (remaining == 0) {
    if (max_so_far == k) visit(word);
    return;
  }
  if (k - max_so_far > remaining) return;
  for (Atom a = 1; a <= std::min<Atom>(max_so_far + 1, k); ++a) {
    word.push_back(a);
    rgs_rec(word, n, k, std::max(max_so_far, a), visit);
    word.pop_back();
  }
}

using Multiset = std::map<Configuration, Int>;

void canonical_rec(DataWord& w, Atom width, std::size_t alphabet_size, std::size_t max_length,
                   const std::function<bool(const DataWord&)>& visit) {
  if (!visit(w) || w.size() == max_length) return;
  for (std::size_t s = 0; s < alphabet_size; ++s) {
    for (Atom at = 1; at <= width + 1; ++at) {
      w.push_back({s, at});
      canonical_rec(w, std::max(width, at), alphabet_size, max_length, visit);
      w.pop_back();
    }
  }
}

struct OracleWalk {
  const RegisterAutomaton& a;
  std::size_t max_n, max_k;
  std::function<void(std::size_t n, std::size_t k, const Multiset&)> record;

  void run(const Multiset& configs, std::size_t n, Atom width) {
    if (width <= max_k) record(n, width, configs);
    if (n == max_n) return;
    for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
      for (Atom at = 1; at <= width + 1; ++at) {
        Atom w2 = std::max(width, at);
        // Width never decreases, so longer words stay out of range.
        if (w2 > max_k) continue;
        Multiset next;
        for (const auto& [c, mult] : configs)
          for_each_successor(a, c, s, at, [&, &m = mult](std::size_t ri, const Valuation& v) {
            next[Configuration{a.rules[ri].target, v}] += m;
          });
        run(next, n + 1, w2);
      }
    }
  }
};

Multiset initial_multiset(const RegisterAutomaton& a) {
  Multiset m;
  for (const auto& c : initial_configurations(a)) m[c] += 1;
  return m;
}

}  // namespace

void rgs_enumerate(std::size_t n, std::size_t k, const std::function<void(const std::vector<Atom>&)>& visit) {
  if (k > n) return;
  std::vector<Atom> word;
  rgs_rec(word, n, k, 0, visit);
}

std::vector<std::vector<Atom>> rgs_enumerate(std::size_t n, std::size_t k) {
  std::vector<std::vector<Atom>> out;
  rgs_enumerate(n, k, [&](const std::vector<Atom>& w) { out.push_back(w); });
  return out;
}

void for_each_canonical_word(std::size_t alphabet_size, std::size_t max_length,
                             const std::function<bool(const DataWord&)>& visit) {
  DataWord w;
  canonical_rec(w, 0, alphabet_size, max_length, visit);
}

OracleCounts oracle_count(const RegisterAutomaton& a, std::size_t n, std::size_t k) {
  OracleCounts out;
  OracleWalk walk{a, n, k, [&](std::size_t len, std::size_t width, const Multiset& configs) {
                    if (len != n || width != k) return;
                    bool accepted = false;
                    for (const auto& [c, mult] : configs) {
                      out.runs[{c.location, EqualityType::of(c.valuation)}] += mult;
                      accepted = accepted || a.is_final(c.location);
                    }
                    if (accepted) out.accepted_words += 1;
                  }};
  walk.run(initial_multiset(a), 0, 0);
  return out;
}

SequenceTable oracle_table(const RegisterAutomaton& a, std::size_t max_n, std::size_t max_k) {
  const auto orbits = valuation_orbits(static_cast<std::size_t>(a.registers));
  std::vector<std::string> names;
  std::map<std::pair<std::size_t, EqualityType>, std::size_t> index;
  for (std::size_t l = 0; l < a.locations.size(); ++l)
    for (const EqualityType& o : orbits) {
      index[{l, o}] = names.size();
      names.push_back(counting_variable_name(a, l, o));
    }
  names.push_back("accepted");
  SequenceTable t(names, max_n, max_k);
  const std::size_t accepted_col = names.size() - 1;
  OracleWalk walk{a, max_n, max_k, [&](std::size_t n, std::size_t k, const Multiset& configs) {
                    bool accepted = false;
                    for (const auto& [c, mult] : configs) {
                      t.at(index.at({c.location, EqualityType::of(c.valuation)}), n, k) += Rat(mult);
                      accepted = accepted || a.is_final(c.location);
                    }
                    if (accepted) t.at(accepted_col, n, k) += 1;
                  }};
  walk.run(initial_multiset(a), 0, 0);
  return t;
}

}  // namespace ura
