#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string cli = MULTIARITY_CLI_PATH;
const std::string fx = MULTIARITY_FIXTURES;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string out_path = std::string(std::tmpnam(nullptr)) + ".out";
  std::string cmd = cli + " " + args + " > " + out_path + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(out_path.c_str());
  return r;
}

std::string fixture(const std::string& name) { return fx + "/" + name; }

}  // namespace

TEST_CASE("validators pass on the healthy fixtures") {
  for (const auto& [kind, file] :
       std::vector<std::pair<std::string, std::string>>{
           {"clone", "clone-projections.json"},
           {"clone", "clone-fragment.json"},
           {"multicat", "multicat-fragment.json"},
           {"premulticat", "premulticat-stateful2.json"},
           {"effectful", "effectful-stateful3.json"},
           {"enriched", "enriched-g-of-stateful3.json"},
           {"arrowobj-duoidal", "arrowobj-pool.json"}}) {
    auto r = run("check " + kind + " " + fixture(file));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"status\": \"pass\"") != std::string::npos);
  }
}

TEST_CASE("validators flag every mutant with a witness") {
  for (const auto& [kind, file] :
       std::vector<std::pair<std::string, std::string>>{
           {"clone", "mutant-01-clone.json"},
           {"clone", "mutant-02-clone.json"},
           {"multicat", "mutant-03-multicat.json"},
           {"multicat", "mutant-04-multicat.json"},
           {"premulticat", "mutant-05-premulticat.json"},
           {"premulticat", "mutant-06-premulticat.json"},
           {"effectful", "mutant-07-effectful.json"},
           {"effectful", "mutant-08-effectful.json"},
           {"enriched", "mutant-09-enriched.json"},
           {"enriched", "mutant-10-enriched.json"}}) {
    auto r = run("check " + kind + " " + fixture(file));
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"status\": \"fail\"") != std::string::npos);
    CHECK(r.out.find(" != ") != std::string::npos);  // two quoted sides
  }
}

TEST_CASE("round trips succeed on the fixture structures") {
  CHECK(run("roundtrip enriched " +
            fixture("enriched-g-of-stateful3.json")).exit_code == 0);
  CHECK(run("roundtrip effectful " +
            fixture("effectful-stateful3.json")).exit_code == 0);
  CHECK(run("roundtrip enriched " + fixture("enriched-trivial.json"))
            .exit_code == 0);
}

TEST_CASE("centrality query produces a commutation witness") {
  // The state-writing term: constant action 0 on both states.
  auto r = run("central 'X1->X1#0.0.' " +
               fixture("premulticat-stateful2.json"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("centrality") != std::string::npos);
  CHECK(r.out.find(" != ") == std::string::npos);  // witness quotes both runs
  CHECK(r.out.find(" but ") != std::string::npos);

  // The identity action is central.
  CHECK(run("central 'X1->X1#0.1.' " +
            fixture("premulticat-stateful2.json")).exit_code == 0);
}

TEST_CASE("constructions emit re-checkable structures") {
  std::string tmp = std::string(std::tmpnam(nullptr)) + ".json";
  auto r = run("free-clone " + fixture("cat-chain3.json"));
  CHECK(r.exit_code == 0);
  std::ofstream(tmp) << r.out;
  CHECK(run("check clone " + tmp).exit_code == 0);

  auto c = run("centre " + fixture("premulticat-stateful3.json"));
  CHECK(c.exit_code == 0);
  std::ofstream(tmp) << c.out;
  CHECK(run("check premulticat " + tmp).exit_code == 0);

  auto g = run("to-enriched " + fixture("effectful-stateful3.json"));
  CHECK(g.exit_code == 0);
  std::ofstream(tmp) << g.out;
  CHECK(run("check enriched " + tmp).exit_code == 0);
  CHECK(run("roundtrip enriched " + tmp).exit_code == 0);
  std::remove(tmp.c_str());
}

TEST_CASE("free category and tensor commands run clean") {
  CHECK(run("free-cart " + fixture("clone-projections.json")).exit_code == 0);
  CHECK(run("free-monoidal " + fixture("multicat-fragment.json")).exit_code ==
        0);
  CHECK(run("free-cat " + fixture("graph-chain.json")).exit_code == 0);
  CHECK(run("free-enriched-cat " + fixture("arrowgraph-chain.json"))
            .exit_code == 0);
  auto f = run("funny " + fixture("arrowobj-2to1.json") + " " +
               fixture("arrowobj-3to2.json"));
  CHECK(f.exit_code == 0);
  CHECK(f.out.find("level0") != std::string::npos);
}

TEST_CASE("algebra enumeration reports a count") {
  auto r = run("algebras " + fixture("enriched-trivial.json") + " " +
               fixture("enriched-trivial.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("algebra-count") != std::string::npos);
}

TEST_CASE("errors map to distinct exit codes") {
  CHECK(run("check clone /nonexistent.json").exit_code == 2);
  std::string tmp = std::string(std::tmpnam(nullptr)) + ".json";
  std::ofstream(tmp) << "{not json";
  CHECK(run("check clone " + tmp).exit_code == 2);
  std::remove(tmp.c_str());
}

TEST_CASE("reports are byte-for-byte deterministic") {
  std::string cmd = "check premulticat " + fixture("premulticat-stateful2.json");
  auto a = run(cmd);
  auto b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}
