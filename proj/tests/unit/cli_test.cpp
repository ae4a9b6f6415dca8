#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "ura/cli/cli.hpp"

using namespace ura;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return test::fixture_path(name + ".ra"); }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("ura_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("check universality") {
  for (const std::string backend : {"elim", "hnf"}) {
    CAPTURE(backend);
    Result u = run({"check", "universality", fx("universal"), "--backend", backend});
    CHECK(u.code == 0);
    CHECK(u.out.find("universality: holds") != std::string::npos);
    CHECK(test::universal_up_to(test::load_fixture("universal.ra"), 6));

    for (const char* name : {"running", "ura-universal"}) {
      Result r = run({"check", "universality", fx(name), "--backend", backend, "--format", "json"});
      CHECK(r.code == 1);
      auto j = nlohmann::json::parse(r.out);
      CHECK(j["holds"] == false);
      CHECK(j["witness"]["n"].get<int>() < 2);
      CHECK(j["relation"]["monic"] == true);
      CHECK(j["counterexample"].is_array());
      CHECK_FALSE(test::universal_up_to(test::load_fixture(std::string(name) + ".ra"), 6));
    }
  }
  Result text = run({"check", "universality", fx("running")});
  CHECK(text.out ==
        "universality: fails\nverdict: NONZERO n=0 k=0 value=1/1\ncounterexample: <empty>\n"
        "relation: lead=(5,5) monic=true\n");
}

TEST_CASE("check inclusion and equivalence") {
  Result in = run({"check", "inclusion", fx("running"), fx("universal")});
  CHECK(in.code == 0);
  CHECK(test::included_up_to(test::load_fixture("running.ra"), test::load_fixture("universal.ra"), 6));

  Result out = run({"check", "inclusion", fx("universal"), fx("running"), "--format", "json"});
  CHECK(out.code == 1);
  auto j = nlohmann::json::parse(out.out);
  REQUIRE(j["counterexample"].is_array());
  CHECK(j["counterexample"].size() <= 2);
  CHECK_FALSE(test::included_up_to(test::load_fixture("universal.ra"), test::load_fixture("running.ra"), 6));

  CHECK(run({"check", "equivalence", fx("universal"), fx("universal")}).code == 0);
  Result eq = run({"check", "equivalence", fx("universal"), fx("ura-universal")});
  CHECK(eq.code == 1);
  CHECK(eq.out.find("direction: first not included in second") != std::string::npos);
  CHECK(run({"check", "equivalence", fx("universal"), fx("ura-universal"), "--backend", "hnf"}).code == 1);
}

TEST_CASE("informational commands") {
  CHECK(run({"props", fx("running")}).out.rfind("deterministic=false unambiguous=true non_guessing=true\n", 0) == 0);
  auto props = nlohmann::json::parse(run({"props", fx("universal"), "--format", "json"}).out);
  CHECK(props["deterministic"] == true);

  Result eval = run({"eval", fx("running"), "--n", "4", "--k", "4", "--var", "G_q"});
  CHECK(eval.code == 0);
  CHECK(eval.out.find("G_q[1],1,1,1/1\n") != std::string::npos);
  CHECK(eval.out.find("G_p") == std::string::npos);
  auto ej = nlohmann::json::parse(run({"eval", fx("running"), "--n", "2", "--k", "2", "--format", "json"}).out);
  CHECK(ej["values"]["G"][1][1] == "1/1");

  Result cr = run({"cr", fx("ura-universal")});
  CHECK(cr.out == "CR2 target=G lead=(3,3) monic=true\n(2,2): -1\n(2,3): -k-3\n(3,3): 1\n");
  CHECK(run({"cr", fx("ura-universal"), "--backend", "hnf"}).out == cr.out);
  CHECK(nlohmann::json::parse(run({"cr", fx("two-register"), "--format", "json"}).out)["monic"] == true);

  Result linrec = run({"linrec", fx("running")});
  CHECK(linrec.out.find("G_q[1](n+1,k+1) = G_p[_](n,k) + (k+1)*G_p[_](n,k+1) + G_q[1](n,k) + k*G_q[1](n,k+1)") !=
        std::string::npos);
  CHECK(nlohmann::json::parse(run({"linrec", fx("running"), "--format", "json"}).out).is_object());

  Result oracle = run({"oracle", fx("running"), "--n", "1", "--k", "1", "--var", "G_q"});
  CHECK(oracle.out == "G_q[_](1,1)=0/1\nG_q[1](1,1)=1/1\n");

  for (const char* name : {"two-register", "running"}) {
    Result v = run({"verify", fx(name), "--max-n", "7", "--max-k", "7"});
    CHECK(v.code == 0);
    CHECK(v.out.rfind("agree:", 0) == 0);
  }
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "universality"}).code == 2);
  CHECK(run({"check", "inclusion", fx("universal")}).code == 2);
  CHECK(run({"props", "/nonexistent/file.ra"}).code == 2);
  CHECK(run({"props", fx("universal"), "--format", "xml"}).code == 2);
  CHECK(run({"cr", fx("universal"), "--backend", "magic"}).code == 2);

  Result parse = run({"props", temp_file("broken.ra", "registers 1\nalphabet a\nbogus line\n")});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("broken.ra") != std::string::npos);

  const std::string ambiguous = temp_file("ambiguous.ra",
                                          "registers 1\nalphabet a\nlocations p q\ninitial p\nfinal q\n"
                                          "rule p a q \"x1 = _ & x1' = y\"\nrule p a q \"x1 = _ & x1' = y\"\n");
  CHECK(run({"check", "universality", ambiguous}).code == 3);
  CHECK(run({"check", "inclusion", fx("universal"), ambiguous}).code == 3);

  const std::string guessing =
      temp_file("guessing.ra", "registers 1\nalphabet a\nlocations p\ninitial p\nfinal p\nrule p a p \"x1' != y\"\n");
  CHECK(run({"linrec", guessing}).code == 3);

  Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("check") != std::string::npos);
}
