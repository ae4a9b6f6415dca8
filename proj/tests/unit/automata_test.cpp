#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "ura/automata/orbitise.hpp"
#include "ura/automata/properties.hpp"
#include "ura/automata/semantics.hpp"
#include "ura/core/error.hpp"
#include "ura/counting/oracle.hpp"

using namespace ura;

namespace {

DataWord word(std::initializer_list<Atom> atoms) {
  DataWord w;
  for (Atom a : atoms) w.push_back({0, a});
  return w;
}

std::size_t bell(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n + 1, std::vector<std::size_t>(n + 1, 0));
  t[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + j * t[i - 1][j];
  std::size_t s = 0;
  for (std::size_t j = 0; j <= n; ++j) s += t[n][j];
  return s;
}

}  // namespace

TEST_CASE("equality types enumerate set partitions") {
  CHECK(enumerate_equality_types(1, {true}).size() == 2);
  CHECK(enumerate_equality_types(1, {true}).front().is_bottom(0));
  CHECK(enumerate_equality_types(2, {false, false}).size() == 2);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(enumerate_equality_types(n, std::vector<bool>(n, false)).size() == bell(n));

  auto types = enumerate_equality_types(4, std::vector<bool>(4, true));
  std::set<EqualityType> distinct(types.begin(), types.end());
  CHECK(distinct.size() == types.size());
  CHECK(std::is_sorted(types.begin(), types.end()));
  // Every tuple over 4 positions with values in {undefined, 1..4} has its type listed.
  std::vector<Slot> tuple(4);
  for (int code = 0; code < 625; ++code) {
    int c = code;
    for (auto& s : tuple) {
      s = c % 5 == 0 ? Slot{} : Slot{static_cast<Atom>(c % 5)};
      c /= 5;
    }
    CHECK(distinct.count(EqualityType::of(tuple)) == 1);
  }
}

TEST_CASE("equality type helpers") {
  EqualityType t = EqualityType::of(Valuation{Slot{7}, Slot{}, Slot{3}, Slot{7}});
  CHECK(t.to_string() == "1_21");
  CHECK(t.width() == 2);
  CHECK(t.restrict(2, 4).to_string() == "12");
  CHECK(EqualityType::of(t.representative()) == t);
  CHECK_THROWS_AS(EqualityType(std::vector<int>{1}), Error);
}

TEST_CASE("constraint evaluation") {
  Constraint c = parse_constraint("x1 = _ & x1' = y", 1);
  CHECK(eval_constraint(c, Valuation{Slot{}}, 5, Valuation{Slot{5}}));
  CHECK_FALSE(eval_constraint(parse_constraint("x1 = y", 1), Valuation{Slot{3}}, 4, Valuation{Slot{3}}));
  Constraint contradiction = parse_constraint("!(x1 = x1)", 1);
  for (Slot s : {Slot{}, Slot{1}})
    CHECK_FALSE(eval_constraint(contradiction, Valuation{s}, 1, Valuation{s}));
}

TEST_CASE("constraint parsing and rendering") {
  Constraint c = parse_constraint("x1 = y | !(x2' != _) & x1 != x2", 2);
  CHECK(c.kind() == Constraint::Kind::Or);
  CHECK(parse_constraint(c.to_string(), 2) == c);
  CHECK(c.to_string() == "x1 = y | !x2' != _ & x1 != x2");
  CHECK(parse_constraint("(x1 = y | x1 = _) & x1' = y", 1).to_string() == "(x1 = y | x1 = _) & x1' = y");
  CHECK_THROWS_AS(parse_constraint("x2 = y", 1), ParseError);
  CHECK_THROWS_AS(parse_constraint("_ = _", 1), ParseError);
  CHECK_THROWS_AS(parse_constraint("x1 = ", 1), ParseError);
  CHECK_THROWS_AS(parse_constraint("x1 = y )", 1), ParseError);
}

TEST_CASE("canonical constraints denote their orbit") {
  for (int d = 0; d <= 2; ++d) {
    auto positions = static_cast<std::size_t>(2 * d + 1);
    std::vector<bool> allowed(positions, true);
    allowed[static_cast<std::size_t>(d)] = false;
    for (const EqualityType& t : enumerate_equality_types(positions, allowed)) {
      auto orbit = single_orbit(canonical_constraint(t, d), d);
      REQUIRE(orbit.has_value());
      CHECK(*orbit == t);
    }
  }
  EqualityType free = EqualityType(std::vector<int>{0});
  CHECK(canonical_constraint(free, 0).to_string() == "y = y");
}

TEST_CASE("parse the running example") {
  RegisterAutomaton a = test::load_fixture("running.ra");
  CHECK(a.locations.size() == 4);
  CHECK(a.registers == 1);
  CHECK(a.rules.size() == 6);
  CHECK(a.orbitised);
  CHECK(a.initial == std::vector<std::size_t>{0});
  CHECK(a.final == std::vector<std::size_t>{3});
}

TEST_CASE("serialization round-trips") {
  for (const char* name : {"running.ra", "two-register.ra", "ura-universal.ra", "universal.ra"}) {
    RegisterAutomaton a = test::load_fixture(name);
    std::string text = serialize_automaton(a);
    RegisterAutomaton b = parse_automaton(text);
    CHECK(serialize_automaton(b) == text);
    CHECK(b.rules.size() == a.rules.size());
    CHECK(b.orbitised == a.orbitised);
  }
  std::string canonical =
      "registers 1\nalphabet a b\nlocations p q\ninitial p\nfinal\n"
      "rule p a q \"x1 = _ & x1' = y\"\nrule p b p \"x1 = _ & x1' = _\"\n";
  CHECK(serialize_automaton(parse_automaton(canonical)) == canonical);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_automaton("registers 1\nalphabet a\nlocations p\ninitial p\nfinal p\nrule p a p \"x2 = y\"\n");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
    CHECK(e.column() == 13);
    CHECK(std::string(e.what()).find("register index") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_automaton("registers 1\nalphabet a\nlocations p\nrule p a q \"y = y\"\n"), ParseError);
  CHECK_THROWS_AS(parse_automaton("registers 1\nalphabet a\nlocations p\nrule p b p \"y = y\"\n"), ParseError);
  CHECK_THROWS_AS(parse_automaton("registers 1\nalphabet a\nlocations p\nrule p a p \"y = y\n"), ParseError);
  CHECK_THROWS_AS(parse_automaton("alphabet a\nlocations p\n"), ParseError);
  CHECK_THROWS_AS(parse_automaton("registers 1\nalphabet a\nlocations p\nbogus\n"), ParseError);
}

TEST_CASE("empty rule list accepts exactly the empty word") {
  RegisterAutomaton a = parse_automaton("registers 1\nalphabet a\nlocations p\ninitial p\nfinal p\n");
  CHECK(accepts(a, {}));
  CHECK_FALSE(accepts(a, word({1})));
  RegisterAutomaton b = parse_automaton("registers 1\nalphabet a\nlocations p q\ninitial p\nfinal q\n");
  CHECK_FALSE(accepts(b, {}));
}

TEST_CASE("step on the running example") {
  RegisterAutomaton a = test::load_fixture("running.ra");
  auto p = *a.location_index("p"), q = *a.location_index("q"), r = *a.location_index("r"),
       s = *a.location_index("s");
  auto succ = step(a, Configuration{p, {Slot{}}}, 0, 7);
  CHECK(succ == std::set<Configuration>{{q, {Slot{7}}}, {r, {Slot{7}}}});
  CHECK(step(a, Configuration{s, {Slot{7}}}, 0, 7).empty());
  CHECK(step(a, Configuration{s, {Slot{7}}}, 0, 8).empty());
  CHECK(step(a, Configuration{q, {Slot{7}}}, 0, 7) == std::set<Configuration>{{s, {Slot{7}}}});
}

TEST_CASE("runs and acceptance on the running example") {
  RegisterAutomaton a = test::load_fixture("running.ra");
  auto s = *a.location_index("s");
  auto runs = runs_over(a, word({1, 1}));
  CHECK(std::count_if(runs.begin(), runs.end(), [&](const Run& r) { return r.last().location == s; }) == 1);
  auto empty = runs_over(a, {});
  CHECK(empty.size() == 1);
  CHECK(empty.front().steps.empty());
  CHECK_FALSE(accepts(a, {}));
  CHECK(accepts(a, word({1, 2, 1})));
  CHECK_FALSE(accepts(a, word({1, 2, 3})));
  CHECK(accepts(a, word({1, 1, 2})));
  CHECK(count_accepting_runs(a, word({1, 2, 1})) == 1);
}

TEST_CASE("orbitise splits guards into orbits") {
  RegisterAutomaton a = parse_automaton(
      "registers 1\nalphabet a\nlocations p\ninitial p\nfinal p\nrule p a p \"x1 = x1'\"\n"
      "rule p a p \"!(x1 = x1)\"\n");
  CHECK_FALSE(a.orbitised);
  OrbitiseResult o = orbitise_with_lint(a);
  CHECK(o.unsatisfiable_rules == std::vector<std::size_t>{1});
  // x1 = x1' holds for (undefined, y, undefined), (a, a, a) and (a, b, a).
  CHECK(o.automaton.rules.size() == 3);
  CHECK(o.automaton.orbitised);
  std::set<std::string> rendered;
  for (const Rule& r : o.automaton.rules) rendered.insert(r.guard.to_string());
  CHECK(rendered.count("x1 = _ & x1' = _") == 1);
  CHECK(rendered.count("y = x1 & x1' = x1 & x1 != _") == 1);
  CHECK(rendered.count("x1' = x1 & x1 != _ & x1 != y") == 1);

  RegisterAutomaton e = test::load_fixture("running.ra");
  CHECK(orbitise(e).rules.size() == e.rules.size());
}

TEST_CASE("orbitise preserves acceptance and run counts") {
  std::mt19937_64 rng(test::seed());
  std::vector<RegisterAutomaton> samples;
  samples.push_back(parse_automaton(
      "registers 1\nalphabet a b\nlocations p q\ninitial p\nfinal q\n"
      "rule p a q \"x1 = _ & x1' = y | x1 = y & x1' = x1\"\nrule q b q \"x1 != y & x1' = x1\"\n"
      "rule q a p \"x1' = _\"\nrule p b p \"x1 = x1'\"\n"));
  samples.push_back(parse_automaton(
      "registers 2\nalphabet a\nlocations p q\ninitial p\nfinal q\n"
      "rule p a q \"x1' = y & x2' = x1\"\nrule q a q \"(x1 = y | x2 = y) & x1' = x2 & x2' = y\"\n"));
  for (const RegisterAutomaton& a : samples) {
    RegisterAutomaton o = orbitise(a);
    for_each_canonical_word(a.alphabet.size(), a.registers == 1 ? 6 : 5, [&](const DataWord& w) {
      CHECK(accepts(a, w) == accepts(o, w));
      CHECK(runs_over(a, w).size() == runs_over(o, w).size());
      return true;
    });
  }
}

TEST_CASE("automorphism invariance of runs") {
  RegisterAutomaton a = test::load_fixture("two-register.ra");
  std::mt19937_64 rng(test::seed());
  for_each_canonical_word(1, 6, [&](const DataWord& w) {
    std::vector<Atom> image(8);
    for (auto& x : image) x = rng() % 1000000 + 1;
    std::set<Atom> distinct(image.begin(), image.end());
    if (distinct.size() != image.size()) return true;
    DataWord v = w;
    for (auto& l : v) l.atom = image[l.atom];
    auto runs = runs_over(a, w);
    auto mapped = runs_over(a, v);
    REQUIRE(runs.size() == mapped.size());
    for (std::size_t i = 0; i < runs.size(); ++i) {
      for (std::size_t j = 0; j < runs[i].steps.size(); ++j) {
        Valuation expect = runs[i].steps[j].config.valuation;
        for (auto& slot : expect)
          if (slot) slot = image[*slot];
        CHECK(mapped[i].steps[j].config.valuation == expect);
      }
    }
    return true;
  });
}

TEST_CASE("properties of the fixture automata") {
  PropertyReport e = check_properties(test::load_fixture("running.ra"));
  CHECK_FALSE(e.deterministic);
  CHECK(e.unambiguous);
  CHECK(e.non_guessing);
  REQUIRE(e.nondeterminism_witness);
  CHECK(e.nondeterminism_witness->size() == 1);

  PropertyReport t = check_properties(test::load_fixture("two-register.ra"));
  CHECK(t.deterministic);
  CHECK(t.unambiguous);
  CHECK(t.non_guessing);

  PropertyReport u = check_properties(test::load_fixture("universal.ra"));
  CHECK(u.deterministic);
  PropertyReport v = check_properties(test::load_fixture("ura-universal.ra"));
  CHECK(v.unambiguous);
  CHECK_FALSE(v.deterministic);
}

TEST_CASE("duplicate rules are ambiguous") {
  RegisterAutomaton a = parse_automaton(
      "registers 1\nalphabet a\nlocations p q\ninitial p\nfinal q\n"
      "rule p a q \"x1 = _ & x1' = y\"\nrule p a q \"x1 = _ & x1' = y\"\n");
  PropertyReport r = check_properties(a);
  CHECK_FALSE(r.unambiguous);
  REQUIRE(r.ambiguity_witness);
  CHECK(r.ambiguity_witness->size() == 1);
  CHECK(count_accepting_runs(a, *r.ambiguity_witness) == 2);
}

TEST_CASE("guessing is detected with a witness") {
  RegisterAutomaton a = parse_automaton(
      "registers 1\nalphabet a\nlocations p q\ninitial p\nfinal q\n"
      "rule p a q \"x1 = _ & x1' = y\"\nrule q a q \"x1' != x1 & x1' != y\"\n");
  PropertyReport r = check_properties(a);
  CHECK_FALSE(r.non_guessing);
  REQUIRE(r.guessing_witness);
  CHECK(*r.guessing_witness == word({1, 1}));
}

TEST_CASE("property checks agree with bounded exploration") {
  std::mt19937_64 rng(test::seed() + 1);
  for (int iter = 0; iter < 60; ++iter) {
    test::RandomAutomatonOptions opt;
    opt.registers = 1 + iter % 2;
    opt.max_symbols = 2;
    RegisterAutomaton a = test::random_automaton(rng, opt);
    PropertyReport r = check_properties(a);
    CHECK(r.non_guessing);
    bool ambiguous = false, nondeterministic = a.initial.size() > 1;
    for_each_canonical_word(a.alphabet.size(), 5, [&](const DataWord& w) {
      if (count_accepting_runs(a, w) > 1) ambiguous = true;
      if (runs_over(a, w).size() > 1) nondeterministic = true;
      return true;
    });
    if (r.unambiguous) CHECK_FALSE(ambiguous);
    if (r.deterministic) CHECK_FALSE(nondeterministic);
    if (!r.unambiguous) CHECK(count_accepting_runs(a, *r.ambiguity_witness) > 1);
    if (!r.deterministic) CHECK(runs_over(a, *r.nondeterminism_witness).size() > 1);
    if (r.non_guessing) {
      for_each_canonical_word(a.alphabet.size(), 4, [&](const DataWord& w) {
        for (const Run& run : runs_over(a, w))
          for (std::size_t j = 0; j < run.steps.size(); ++j)
            for (const Slot& s : run.steps[j].config.valuation)
              if (s) {
                bool seen = false;
                for (std::size_t i = 0; i <= j; ++i) seen = seen || w[i].atom == *s;
                CHECK(seen);
              }
        return true;
      });
    }
  }
}
