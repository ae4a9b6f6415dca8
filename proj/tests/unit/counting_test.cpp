#include <doctest.h>

#include "support.hpp"
#include "ura/automata/properties.hpp"
#include "ura/automata/semantics.hpp"
#include "ura/core/error.hpp"
#include "ura/counting/compile.hpp"
#include "ura/counting/oracle.hpp"

using namespace ura;

namespace {

// S(n,k) = (1/k!) sum_j (-1)^j C(k,j) (k-j)^n.
Int stirling_by_inclusion_exclusion(unsigned n, unsigned k) {
  Int sum = 0, binom = 1, fact = 1;
  for (unsigned j = 0; j <= k; ++j) {
    Int power;
    mpz_ui_pow_ui(power.get_mpz_t(), k - j, n);
    sum += (j % 2 == 0 ? 1 : -1) * binom * power;
    binom = binom * (k - j) / (j + 1);
  }
  for (unsigned i = 2; i <= k; ++i) fact *= i;
  return sum / fact;
}

PolyK lin(long c0, long c1) { return PolyK(std::vector<Rat>{Rat(c0), Rat(c1)}); }

const Rat& value(const SequenceTable& t, const std::string& name, std::size_t n, std::size_t k) {
  auto idx = t.index(name);
  REQUIRE(idx.has_value());
  return t.at(*idx, n, k);
}

}  // namespace

TEST_CASE("PolyK arithmetic") {
  PolyK k = PolyK::k();
  CHECK((k * k).shift(1) == k * k + 2 * k + PolyK(1));
  CHECK(PolyK(1).shift(5) == PolyK(1));
  CHECK((k * k - PolyK(1)).degree() == 2);
  CHECK(PolyK().degree() == kZeroDegree);
  CHECK((k * k + PolyK(3) * k - PolyK(1)).to_string() == "k^2+3*k-1");
  CHECK((-k - PolyK(1)).to_string() == "-k-1");
  CHECK(gcd(k * k - PolyK(1), k * k + 2 * k + PolyK(1)) == k + PolyK(1));
  auto [q, r] = divmod(k * k * k + PolyK(2), k - PolyK(1));
  CHECK(q * (k - PolyK(1)) + r == k * k * k + PolyK(2));
  CHECK(r.degree() < 1);
  PolyK p = PolyK(std::vector<Rat>{Rat(2, 3), Rat(-5), Rat(7, 2)});
  CHECK(p.shift(3).shift(-3) == p);
}

TEST_CASE("Stirling system") {
  SequenceTable t = evaluate(stirling_system(1), 15, 15);
  for (unsigned n = 0; n <= 15; ++n)
    for (unsigned k = 0; k <= 15; ++k) CHECK(t.at(0, n, k) == Rat(stirling_by_inclusion_exclusion(n, k)));
  CHECK(t.at(0, 4, 2) == 7);
  CHECK(t.at(0, 5, 3) == 25);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(t.at(0, n, n) == 1);
  CHECK(evaluate(stirling_system(2), 3, 3).at(0, 2, 1) == 4);
  CHECK_THROWS_AS(stirling_system(0), Error);
}

TEST_CASE("Bell numbers via partial sums") {
  // C(n+1,k+1) = S(n,k) + C(n+1,k) with C(n,0) = 0 sums row n of S up to k.
  LinrecSystem sys = stirling_system(1);
  sys.variables.push_back("C");
  sys.equations[0].push_back(AffineOperator{});
  sys.equations.push_back({AffineOperator{PolyK(1), PolyK(), PolyK()}, AffineOperator{PolyK(), PolyK(1), PolyK()}});
  sys.boundaries.push_back(Boundary{Rat(0), Rat(0), Rat(0)});
  SequenceTable t = evaluate(sys, 11, 11);
  const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (std::size_t n = 0; n <= 10; ++n) CHECK(t.at(1, n + 1, n + 1) == bell[n]);
}

TEST_CASE("evaluation boundaries") {
  LinrecSystem sys = stirling_system(3);
  sys.boundaries[0] = Boundary{Rat(5, 2), Rat(-1), Rat(4)};
  SequenceTable t = evaluate(sys, 3, 3);
  CHECK(t.at(0, 0, 0) == Rat(5, 2));
  CHECK(t.at(0, 0, 2) == -1);
  CHECK(t.at(0, 2, 0) == 4);
}

TEST_CASE("linrec JSON round trip and CSV") {
  CountingSystem cs = build_counting_system(test::load_fixture("running.ra"));
  std::string json = to_json(cs.system);
  CHECK(linrec_from_json(json) == cs.system);
  CHECK(to_json(linrec_from_json(json)) == json);
  std::string csv = to_csv(evaluate(cs.system, 1, 1), "G_q");
  CHECK(csv.find("var,n,k,value\n") == 0);
  CHECK(csv.find("G_q[1],1,1,1/1\n") != std::string::npos);
  CHECK(csv.find("G_p") == std::string::npos);
  CHECK_THROWS_AS(linrec_from_json("{\"variables\": [1]}"), Error);
}

TEST_CASE("running example counting equations") {
  CountingSystem cs = build_counting_system(test::load_fixture("running.ra"));
  const LinrecSystem& sys = cs.system;
  auto idx = [&](const char* name) { return *sys.variable_index(name); };
  const std::size_t p = idx("G_p[_]"), q = idx("G_q[1]"), r = idx("G_r[1]"), s = idx("G_s[1]");
  CHECK(sys.variables.back() == "S");
  CHECK(sys.variables.size() == 9);
  CHECK(sys.equations[q][p] == AffineOperator{PolyK(1), PolyK(), lin(1, 1)});
  CHECK(sys.equations[q][q] == AffineOperator{PolyK(1), PolyK(), lin(0, 1)});
  CHECK(sys.equations[r][p] == AffineOperator{PolyK(1), PolyK(), lin(1, 1)});
  CHECK(sys.equations[r][r] == AffineOperator{PolyK(), PolyK(), PolyK(1)});
  CHECK(sys.equations[s][q] == AffineOperator{PolyK(), PolyK(), PolyK(1)});
  CHECK(sys.equations[s][r] == AffineOperator{PolyK(1), PolyK(), lin(0, 1)});
  for (std::size_t j = 0; j < sys.size(); ++j) CHECK(sys.equations[p][j].is_zero());
  CHECK(sys.boundaries[p].origin == 1);
  CHECK(sys.boundaries[q].origin == 0);
  REQUIRE(sys.derived.size() == 1);
  CHECK(sys.derived[0].name == "G");
  CHECK(sys.derived[0].terms.size() == 3);  // S - G_s[_] - G_s[1]

  SequenceTable t = evaluate(sys, 4, 4);
  CHECK(value(t, "G_q[1]", 1, 1) == 1);
  CHECK(value(t, "G", 1, 1) == 1);
}

TEST_CASE("two-register counting equations") {
  CountingSystem cs = build_counting_system(test::load_fixture("two-register.ra"));
  const LinrecSystem& sys = cs.system;
  auto idx = [&](const char* name) { return *sys.variable_index(name); };
  const std::size_t p = idx("G_p[__]"), q = idx("G_q[1_]"), r = idx("G_r[12]");
  CHECK(sys.equations[q][p] == AffineOperator{PolyK(1), PolyK(), lin(1, 1)});
  CHECK(sys.equations[r][q] == AffineOperator{PolyK(1), PolyK(), lin(0, 1)});
  CHECK(sys.equations[r][r] == AffineOperator{PolyK(1), PolyK(), lin(-1, 1)});
  CHECK(sys.derived[0].terms.size() == 1 + 3 * 5);
}

TEST_CASE("automaton without rules") {
  RegisterAutomaton a = parse_automaton("registers 1\nalphabet a\nlocations p\ninitial p\nfinal p\n");
  CountingSystem cs = build_counting_system(a);
  SequenceTable t = evaluate(cs.system, 5, 5);
  CHECK(value(t, "G", 0, 0) == 0);
  for (std::size_t n = 0; n <= 5; ++n)
    for (std::size_t k = 0; k <= 5; ++k)
      if (n + k > 0) CHECK(value(t, "G", n, k) == value(t, "S", n, k));
}

TEST_CASE("guessing automata are rejected") {
  RegisterAutomaton a = parse_automaton(
      "registers 1\nalphabet a\nlocations p\ninitial p\nfinal p\nrule p a p \"x1' != y\"\n");
  CHECK_THROWS_AS(build_counting_system(a), PreconditionError);
}

TEST_CASE("restricted growth strings") {
  auto w = rgs_enumerate(3, 2);
  CHECK(w == std::vector<std::vector<Atom>>{{1, 1, 2}, {1, 2, 1}, {1, 2, 2}});
  CHECK(rgs_enumerate(0, 0).size() == 1);
  CHECK(rgs_enumerate(2, 3).empty());
  SequenceTable s = evaluate(stirling_system(1), 8, 8);
  for (std::size_t n = 0; n <= 8; ++n)
    for (std::size_t k = 0; k <= 8; ++k) CHECK(Rat(static_cast<long>(rgs_enumerate(n, k).size())) == s.at(0, n, k));
}

TEST_CASE("oracle examples") {
  RegisterAutomaton a = test::load_fixture("running.ra");
  OracleCounts c = oracle_count(a, 2, 1);
  auto s = *a.location_index("s");
  CHECK(c.runs[{s, EqualityType(std::vector<int>{0})}] == 1);
  CHECK(c.accepted_words == 1);
  OracleCounts z = oracle_count(a, 1, 0);
  CHECK(z.runs.empty());

  CountingSystem cs = build_counting_system(a);
  SequenceTable t = evaluate(cs.system, 3, 2);
  OracleCounts c32 = oracle_count(a, 3, 2);
  Rat final_sum = value(t, "G_s[_]", 3, 2) + value(t, "G_s[1]", 3, 2);
  Int oracle_sum = 0;
  for (const auto& [key, count] : c32.runs)
    if (key.first == s) oracle_sum += count;
  CHECK(final_sum == Rat(oracle_sum));
}

namespace {

void check_oracle_equivalence(const RegisterAutomaton& a, std::size_t bound) {
  CountingSystem cs = build_counting_system(a);
  SequenceTable sys = evaluate(cs.system, bound, bound);
  SequenceTable oracle = oracle_table(a, bound, bound);
  for (std::size_t v = 0; v + 1 < oracle.names().size(); ++v) {
    auto idx = sys.index(oracle.names()[v]);
    REQUIRE(idx.has_value());
    for (std::size_t n = 0; n <= bound; ++n)
      for (std::size_t k = 0; k <= bound; ++k) {
        CHECK(sys.at(*idx, n, k) == oracle.at(v, n, k));
        // Zero region: fewer distinct values than the orbit width.
        if (static_cast<int>(k) < cs.orbit_of[v].second.width()) CHECK(sys.at(*idx, n, k) == 0);
      }
  }
}

}  // namespace

TEST_CASE("oracle equivalence on the fixture automata") {
  for (const char* name : {"running.ra", "two-register.ra", "ura-universal.ra", "universal.ra"})
    check_oracle_equivalence(test::load_fixture(name), 7);
}

TEST_CASE("oracle equivalence on non-orbitised input") {
  RegisterAutomaton a = parse_automaton(
      "registers 1\nalphabet a b\nlocations p q\ninitial p\nfinal q\n"
      "rule p a q \"x1 = _ & x1' = y | x1 = y & x1' = x1\"\nrule q b q \"x1 != y & x1' = x1\"\n"
      "rule q a p \"x1' = _\"\nrule p b p \"x1 = x1'\"\n");
  check_oracle_equivalence(a, 6);
}

TEST_CASE("unambiguous automata count accepted words") {
  std::mt19937_64 rng(test::seed() + 7);
  int checked = 0;
  for (int iter = 0; iter < 40; ++iter) {
    test::RandomAutomatonOptions opt;
    opt.registers = 1 + iter % 2;
    opt.max_symbols = 2;
    RegisterAutomaton a = test::random_automaton(rng, opt);
    if (!check_properties(a).unambiguous) continue;
    ++checked;
    CountingSystem cs = build_counting_system(a);
    SequenceTable t = evaluate(cs.system, 6, 6);
    SequenceTable o = oracle_table(a, 6, 6);
    const std::size_t g = *t.index("G"), st = cs.stirling_variable;
    for (std::size_t n = 0; n <= 6; ++n)
      for (std::size_t k = 0; k <= 6; ++k) CHECK(t.at(st, n, k) - t.at(g, n, k) == o.at(o.names().size() - 1, n, k));
  }
  CHECK(checked > 10);
}
