#include "ura/automata/reduction.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "ura/automata/orbitise.hpp"
#include "ura/automata/properties.hpp"
#include "ura/core/error.hpp"

namespace ura {

namespace {

RegisterAutomaton ensure_orbitised(const RegisterAutomaton& a) { return a.orbitised ? a : orbitise(a); }

Rule typed_rule(std::size_t src, std::size_t sym, std::size_t dst, const EqualityType& t, int registers) {
  return Rule{src, sym, dst, canonical_constraint(t, registers), t};
}

}  // namespace

RegisterAutomaton determinise_complement(const RegisterAutomaton& input) {
  RegisterAutomaton a = ensure_orbitised(input);
  if (!check_properties(a).deterministic) throw PreconditionError("complement requires a deterministic automaton");
  const auto d = static_cast<std::size_t>(a.registers);
  if (a.initial.empty()) {
    a.locations.push_back(fresh_location_name(a, "__start"));
    a.initial.push_back(a.locations.size() - 1);
  }
  a.locations.push_back(fresh_location_name(a, "__sink"));
  const std::size_t sink = a.locations.size() - 1;

  std::set<std::tuple<std::size_t, std::size_t, std::vector<int>>> covered;
  for (const Rule& r : a.rules) {
    const auto& codes = r.type->codes();
    covered.insert({r.source, r.symbol, std::vector<int>(codes.begin(), codes.begin() + static_cast<long>(d) + 1)});
  }
  std::vector<Rule> completion;
  for (const EqualityType& orbit : valuation_orbits(d)) {
    for (int in = 0; in <= orbit.width(); ++in) {
      std::vector<int> prefix = orbit.codes();
      prefix.push_back(in);
      std::vector<int> full = prefix;
      full.resize(2 * d + 1, EqualityType::kBottom);
      EqualityType t(full);
      for (std::size_t l = 0; l < a.locations.size(); ++l)
        for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym)
          if (!covered.count({l, sym, prefix})) completion.push_back(typed_rule(l, sym, sink, t, a.registers));
    }
  }
  a.rules.insert(a.rules.end(), completion.begin(), completion.end());
  std::vector<std::size_t> complement_final;
  for (std::size_t l = 0; l < a.locations.size(); ++l)
    if (!a.is_final(l)) complement_final.push_back(l);
  a.final = std::move(complement_final);
  a.orbitised = true;
  return a;
}

RegisterAutomaton merge_initial_locations(const RegisterAutomaton& a) {
  if (a.initial.size() <= 1) return a;
  RegisterAutomaton out = a;
  out.locations.push_back(fresh_location_name(a, "__init"));
  const std::size_t start = out.locations.size() - 1;
  bool final = std::any_of(a.initial.begin(), a.initial.end(), [&](std::size_t l) { return a.is_final(l); });
  for (const Rule& r : a.rules) {
    if (!a.is_initial(r.source)) continue;
    Rule copy = r;
    copy.source = start;
    out.rules.push_back(std::move(copy));
  }
  out.initial = {start};
  if (final) out.final.push_back(start);
  return out;
}

RegisterAutomaton relabel_by_rules(const RegisterAutomaton& a) {
  RegisterAutomaton out = a;
  out.alphabet.clear();
  for (std::size_t i = 0; i < a.rules.size(); ++i) {
    out.alphabet.push_back("t" + std::to_string(i));
    out.rules[i].symbol = i;
  }
  return out;
}

std::vector<EqualityType> joint_orbits(const EqualityType& ta, int da, const EqualityType& tb, int db) {
  const auto ua = static_cast<std::size_t>(da), ub = static_cast<std::size_t>(db);
  const int wa = ta.width(), wb = tb.width();
  const int in_a = ta.code(ua), in_b = tb.code(ub);
  // match[j] = a-block merged with b-block j, or -1.
  std::vector<int> match(static_cast<std::size_t>(wb), -1);
  std::vector<bool> used(static_cast<std::size_t>(wa), false);
  match[static_cast<std::size_t>(in_b)] = in_a;
  used[static_cast<std::size_t>(in_a)] = true;
  std::vector<EqualityType> out;

  auto emit = [&]() {
    std::vector<Atom> atom_b(static_cast<std::size_t>(wb));
    Atom next_atom = static_cast<Atom>(wa) + 1;
    for (int j = 0; j < wb; ++j) {
      int m = match[static_cast<std::size_t>(j)];
      atom_b[static_cast<std::size_t>(j)] = m >= 0 ? static_cast<Atom>(m) + 1 : next_atom++;
    }
    auto slot_a = [&](std::size_t p) { return ta.is_bottom(p) ? Slot{} : Slot{static_cast<Atom>(ta.code(p)) + 1}; };
    auto slot_b = [&](std::size_t p) {
      return tb.is_bottom(p) ? Slot{} : Slot{atom_b[static_cast<std::size_t>(tb.code(p))]};
    };
    Valuation tuple;
    for (std::size_t i = 0; i < ua; ++i) tuple.push_back(slot_a(i));
    for (std::size_t i = 0; i < ub; ++i) tuple.push_back(slot_b(i));
    tuple.push_back(slot_a(ua));
    for (std::size_t i = 0; i < ua; ++i) tuple.push_back(slot_a(ua + 1 + i));
    for (std::size_t i = 0; i < ub; ++i) tuple.push_back(slot_b(ub + 1 + i));
    out.push_back(EqualityType::of(tuple));
  };

  std::function<void(int)> rec = [&](int j) {
    if (j == wb) {
      emit();
      return;
    }
    if (j == in_b) {
      rec(j + 1);
      return;
    }
    match[static_cast<std::size_t>(j)] = -1;
    rec(j + 1);
    for (int i = 0; i < wa; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      used[static_cast<std::size_t>(i)] = true;
      match[static_cast<std::size_t>(j)] = i;
      rec(j + 1);
      used[static_cast<std::size_t>(i)] = false;
    }
    match[static_cast<std::size_t>(j)] = -1;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

RegisterAutomaton product(const RegisterAutomaton& x_in, const RegisterAutomaton& y_in) {
  RegisterAutomaton x = ensure_orbitised(x_in), y = ensure_orbitised(y_in);
  if (x.alphabet != y.alphabet) throw PreconditionError("product requires identical alphabets");
  RegisterAutomaton out;
  out.registers = x.registers + y.registers;
  out.alphabet = x.alphabet;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  auto intern = [&](std::size_t p, std::size_t q) {
    auto [it, inserted] = index.try_emplace({p, q}, out.locations.size());
    if (inserted) {
      out.locations.push_back("(" + x.locations[p] + "," + y.locations[q] + ")");
      if (x.is_final(p) && y.is_final(q)) out.final.push_back(it->second);
      queue.emplace_back(p, q);
    }
    return it->second;
  };
  for (std::size_t p : x.initial)
    for (std::size_t q : y.initial) out.initial.push_back(intern(p, q));
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    const std::size_t src = index.at({p, q});
    for (const Rule& rx : x.rules) {
      if (rx.source != p) continue;
      for (const Rule& ry : y.rules) {
        if (ry.source != q || ry.symbol != rx.symbol) continue;
        const std::size_t dst = intern(rx.target, ry.target);
        for (const EqualityType& t : joint_orbits(*rx.type, x.registers, *ry.type, y.registers))
          out.rules.push_back(typed_rule(src, rx.symbol, dst, t, out.registers));
      }
    }
  }
  std::sort(out.initial.begin(), out.initial.end());
  std::sort(out.final.begin(), out.final.end());
  out.orbitised = true;
  return out;
}

RegisterAutomaton pad_registers(const RegisterAutomaton& in, int leading) {
  RegisterAutomaton a = ensure_orbitised(in);
  if (leading == 0) return a;
  const auto d = static_cast<std::size_t>(a.registers), lead = static_cast<std::size_t>(leading);
  for (Rule& r : a.rules) {
    const auto& c = r.type->codes();
    std::vector<int> codes(lead, EqualityType::kBottom);
    codes.insert(codes.end(), c.begin(), c.begin() + static_cast<long>(d) + 1);
    codes.insert(codes.end(), lead, EqualityType::kBottom);
    codes.insert(codes.end(), c.begin() + static_cast<long>(d) + 1, c.end());
    r.type = EqualityType(codes);
    r.guard = canonical_constraint(*r.type, a.registers + leading);
  }
  a.registers += leading;
  return a;
}

RegisterAutomaton disjoint_union(const RegisterAutomaton& x, const RegisterAutomaton& y) {
  if (x.alphabet != y.alphabet) throw PreconditionError("union requires identical alphabets");
  if (x.registers != y.registers) throw PreconditionError("union requires equal register counts");
  RegisterAutomaton out = ensure_orbitised(x);
  RegisterAutomaton right = ensure_orbitised(y);
  const std::size_t offset = out.locations.size();
  for (const auto& name : right.locations) out.locations.push_back(fresh_location_name(out, name));
  for (std::size_t l : right.initial) out.initial.push_back(l + offset);
  for (std::size_t l : right.final) out.final.push_back(l + offset);
  for (Rule r : right.rules) {
    r.source += offset;
    r.target += offset;
    out.rules.push_back(std::move(r));
  }
  return out;
}

RegisterAutomaton reduce_inclusion_to_universality(const RegisterAutomaton& a_in, const RegisterAutomaton& b_in) {
  std::vector<std::string> sa = a_in.alphabet, sb = b_in.alphabet;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) throw PreconditionError("automata have different alphabets");

  RegisterAutomaton a = ensure_orbitised(a_in);
  if (!check_properties(a).non_guessing) throw PreconditionError("left automaton is guessing");
  RegisterAutomaton b = ensure_orbitised(b_in);
  PropertyReport pb = check_properties(b);
  if (!pb.non_guessing) throw PreconditionError("right automaton is guessing");
  if (!pb.unambiguous) throw PreconditionError("right automaton is not unambiguous");

  RegisterAutomaton a1 = merge_initial_locations(a);
  RegisterAutomaton relabelled = relabel_by_rules(a1);

  RegisterAutomaton lifted = b;
  lifted.alphabet = relabelled.alphabet;
  lifted.rules.clear();
  for (const Rule& rb : b.rules) {
    const std::string& name = b.alphabet[rb.symbol];
    for (std::size_t t = 0; t < a1.rules.size(); ++t) {
      if (a1.alphabet[a1.rules[t].symbol] != name) continue;
      Rule copy = rb;
      copy.symbol = t;
      lifted.rules.push_back(std::move(copy));
    }
  }

  RegisterAutomaton both = product(lifted, relabelled);
  RegisterAutomaton outside = pad_registers(determinise_complement(relabelled), b.registers);
  return disjoint_union(both, outside);
}

}  // namespace ura
