#include <doctest.h>

#include "support.hpp"
#include "ura/automata/properties.hpp"
#include "ura/automata/reduction.hpp"
#include "ura/automata/semantics.hpp"
#include "ura/core/error.hpp"

using namespace ura;

namespace {

RegisterAutomaton empty_language() {
  return parse_automaton("registers 1\nalphabet a\nlocations p\ninitial p\nrule p a p \"x1 = _ & x1' = y\"\n");
}

bool same_language_up_to(const RegisterAutomaton& a, const RegisterAutomaton& b, std::size_t len) {
  return test::for_all_canonical_words({&a, &b}, a.alphabet.size(), len,
                                       [](const DataWord&, const std::vector<bool>& acc) { return acc[0] == acc[1]; });
}

}  // namespace

TEST_CASE("complement of deterministic automata") {
  RegisterAutomaton u = test::load_fixture("universal.ra");
  RegisterAutomaton cu = determinise_complement(u);
  CHECK(cu.orbitised);
  CHECK(test::for_all_canonical_words({&cu}, 1, 6,
                                      [](const DataWord&, const std::vector<bool>& acc) { return !acc[0]; }));
  CHECK(check_properties(cu).deterministic);

  RegisterAutomaton t = test::load_fixture("two-register.ra");
  RegisterAutomaton cct = determinise_complement(determinise_complement(t));
  CHECK(same_language_up_to(t, cct, 6));
  RegisterAutomaton ct = determinise_complement(t);
  CHECK(test::for_all_canonical_words({&t, &ct}, 1, 6, [](const DataWord&, const std::vector<bool>& acc) {
    return acc[0] != acc[1];
  }));

  CHECK(test::universal_up_to(determinise_complement(empty_language()), 6));
  RegisterAutomaton none = parse_automaton("registers 1\nalphabet a\nlocations p\n");
  CHECK(test::universal_up_to(determinise_complement(none), 5));

  CHECK_THROWS_AS(determinise_complement(test::load_fixture("running.ra")), PreconditionError);
}

TEST_CASE("sink name avoids user locations") {
  RegisterAutomaton a = parse_automaton(
      "registers 1\nalphabet a\nlocations __sink\ninitial __sink\nfinal __sink\nrule __sink a __sink \"x1' = _\"\n");
  RegisterAutomaton c = determinise_complement(a);
  CHECK(c.locations.size() == 2);
  CHECK(c.locations[0] == "__sink");
  CHECK(c.locations[1] == "__sink_1");
}

TEST_CASE("joint orbits of a product") {
  // Two one-register types sharing the input: the other blocks may or may
  // not be merged.
  EqualityType ta(std::vector<int>{0, 1, 1});
  EqualityType tb(std::vector<int>{0, 1, 0});
  auto joint = joint_orbits(ta, 1, tb, 1);
  CHECK(joint.size() == 2);
  for (const auto& t : joint) {
    CHECK(t.size() == 5);
    CHECK(t.code(2) != EqualityType::kBottom);
  }
}

TEST_CASE("running example is included in the universal automaton") {
  RegisterAutomaton c = reduce_inclusion_to_universality(test::load_fixture("running.ra"), test::load_fixture("universal.ra"));
  CHECK(c.orbitised);
  PropertyReport p = check_properties(c);
  CHECK(p.unambiguous);
  CHECK(p.non_guessing);
  CHECK(test::universal_up_to(c, 4));
  CHECK(test::included_up_to(test::load_fixture("running.ra"), test::load_fixture("universal.ra"), 6));
}

TEST_CASE("the universal automaton is not included in the running example") {
  RegisterAutomaton c = reduce_inclusion_to_universality(test::load_fixture("universal.ra"), test::load_fixture("running.ra"));
  std::optional<DataWord> rejected;
  test::for_all_canonical_words({&c}, c.alphabet.size(), 3, [&](const DataWord& w, const std::vector<bool>& acc) {
    if (!acc[0]) rejected = w;
    return acc[0];
  });
  REQUIRE(rejected);
  CHECK(rejected->size() <= 1);
}

TEST_CASE("empty left language always reduces to a universal automaton") {
  RegisterAutomaton c = reduce_inclusion_to_universality(empty_language(), test::load_fixture("running.ra"));
  CHECK(test::universal_up_to(c, 5));
}

TEST_CASE("reduction preconditions") {
  CHECK_THROWS_AS(reduce_inclusion_to_universality(test::load_fixture("universal.ra"),
                                                   parse_automaton("registers 1\nalphabet a\nlocations p q\ninitial p q\nfinal p q\n")),
                  PreconditionError);
  CHECK_THROWS_AS(reduce_inclusion_to_universality(test::load_fixture("universal.ra"),
                                                   parse_automaton("registers 1\nalphabet b\nlocations p\ninitial p\n")),
                  PreconditionError);
  CHECK_THROWS_AS(reduce_inclusion_to_universality(
                      parse_automaton("registers 1\nalphabet a\nlocations p\ninitial p\nfinal p\nrule p a p \"x1' != y\"\n"),
                      test::load_fixture("universal.ra")),
                  PreconditionError);
}

TEST_CASE("multiple initial locations on the left") {
  RegisterAutomaton a = parse_automaton(
      "registers 1\nalphabet a\nlocations p q\ninitial p q\nfinal q\n"
      "rule p a p \"x1 = _ & x1' = y\"\nrule p a q \"x1 = y & x1' = x1\"\n");
  RegisterAutomaton m = merge_initial_locations(a);
  CHECK(m.initial.size() == 1);
  CHECK(same_language_up_to(a, m, 5));
  RegisterAutomaton c = reduce_inclusion_to_universality(a, test::load_fixture("universal.ra"));
  CHECK(test::universal_up_to(c, 4));
}

TEST_CASE("reduction soundness on random pairs") {
  std::mt19937_64 rng(test::seed() + 3);
  int done = 0, included = 0;
  for (int iter = 0; done < 12 && iter < 200; ++iter) {
    test::RandomAutomatonOptions oa;
    oa.max_symbols = 2;
    oa.max_rules = 4;
    RegisterAutomaton a = test::random_automaton(rng, oa);
    test::RandomAutomatonOptions ob = oa;
    ob.deterministic = true;
    ob.max_rules = 8;
    RegisterAutomaton b = test::random_automaton(rng, ob);
    // Align alphabets.
    if (a.alphabet.size() != b.alphabet.size()) continue;
    RegisterAutomaton c = reduce_inclusion_to_universality(a, b);
    bool inc = test::included_up_to(a, b, 4);
    CHECK(inc == test::universal_up_to(c, 4));
    ++done;
    included += inc;
  }
  CHECK(done == 12);
}
