#include "ura/automata/properties.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "ura/automata/orbitise.hpp"
#include "ura/automata/semantics.hpp"

namespace ura {

namespace {

Atom word_max(const DataWord& w) {
  Atom m = 0;
  for (const Letter& l : w) m = std::max(m, l.atom);
  return m;
}

std::vector<Atom> input_choices(const Valuation& v, const DataWord& w) {
  std::vector<Atom> out;
  for (const Slot& s : v)
    if (s && std::find(out.begin(), out.end(), *s) == out.end()) out.push_back(*s);
  std::sort(out.begin(), out.end());
  out.push_back(word_max(w) + 1);
  return out;
}

bool stores_fresh(const Valuation& current, Atom input, const Valuation& next) {
  for (const Slot& s : next) {
    if (!s) continue;
    if (*s == input) continue;
    if (std::find(current.begin(), current.end(), s) == current.end()) return true;
  }
  return false;
}

struct Node {
  std::size_t loc;
  Valuation val;
  DataWord word;
};

std::optional<DataWord> find_guessing(const RegisterAutomaton& a) {
  std::set<std::pair<std::size_t, EqualityType>> seen;
  std::deque<Node> queue;
  for (const auto& c : initial_configurations(a)) {
    if (seen.insert({c.location, EqualityType::of(c.valuation)}).second) queue.push_back({c.location, c.valuation, {}});
  }
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym) {
      for (Atom in : input_choices(node.val, node.word)) {
        std::optional<DataWord> witness;
        for_each_successor(a, Configuration{node.loc, node.val}, sym, in, [&](std::size_t ri, const Valuation& next) {
          if (witness) return;
          DataWord w = node.word;
          w.push_back({sym, in});
          if (stores_fresh(node.val, in, next)) {
            witness = w;
            return;
          }
          std::size_t target = a.rules[ri].target;
          if (seen.insert({target, EqualityType::of(next)}).second) queue.push_back({target, next, std::move(w)});
        });
        if (witness) return witness;
      }
    }
  }
  return std::nullopt;
}

struct PairNode {
  std::size_t loc1, loc2;
  Valuation val1, val2;
  bool diverged;
  DataWord word;
};

// Self-product search. Returns the first word reaching a diverged pair that
// satisfies `goal`.
template <typename Goal>
std::optional<DataWord> find_divergence(const RegisterAutomaton& a, Goal goal) {
  using Key = std::tuple<std::size_t, std::size_t, EqualityType, bool>;
  auto key = [](const PairNode& n) {
    Valuation joint = n.val1;
    joint.insert(joint.end(), n.val2.begin(), n.val2.end());
    return Key{n.loc1, n.loc2, EqualityType::of(joint), n.diverged};
  };
  std::set<Key> seen;
  std::deque<PairNode> queue;
  const auto d = static_cast<std::size_t>(a.registers);
  auto push = [&](PairNode n) -> bool {
    if (n.diverged && goal(n.loc1, n.loc2)) return true;
    if (seen.insert(key(n)).second) queue.push_back(std::move(n));
    return false;
  };
  for (std::size_t i : a.initial)
    for (std::size_t j : a.initial)
      if (push(PairNode{i, j, Valuation(d), Valuation(d), i != j, {}})) return DataWord{};
  while (!queue.empty()) {
    PairNode node = std::move(queue.front());
    queue.pop_front();
    Valuation joint = node.val1;
    joint.insert(joint.end(), node.val2.begin(), node.val2.end());
    for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym) {
      for (Atom in : input_choices(joint, node.word)) {
        std::vector<std::pair<std::size_t, Valuation>> s1, s2;
        for_each_successor(a, Configuration{node.loc1, node.val1}, sym, in,
                           [&](std::size_t ri, const Valuation& v) { s1.emplace_back(ri, v); });
        if (s1.empty()) continue;
        for_each_successor(a, Configuration{node.loc2, node.val2}, sym, in,
                           [&](std::size_t ri, const Valuation& v) { s2.emplace_back(ri, v); });
        for (const auto& [r1, v1] : s1) {
          for (const auto& [r2, v2] : s2) {
            DataWord w = node.word;
            w.push_back({sym, in});
            bool diverged = node.diverged || r1 != r2 || v1 != v2;
            PairNode next{a.rules[r1].target, a.rules[r2].target, v1, v2, diverged, w};
            if (push(std::move(next))) return w;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PropertyReport check_properties(const RegisterAutomaton& input) {
  RegisterAutomaton a = input.orbitised ? input : orbitise(input);
  PropertyReport report;
  report.guessing_witness = find_guessing(a);
  report.non_guessing = !report.guessing_witness;
  report.ambiguity_witness =
      find_divergence(a, [&](std::size_t l1, std::size_t l2) { return a.is_final(l1) && a.is_final(l2); });
  report.unambiguous = !report.ambiguity_witness;
  report.nondeterminism_witness = find_divergence(a, [](std::size_t, std::size_t) { return true; });
  report.deterministic = !report.nondeterminism_witness;
  return report;
}

}  // namespace ura
