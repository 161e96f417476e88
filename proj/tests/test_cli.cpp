#include <stdexcept>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "queenlab/cli.hpp"
#include "queenlab/io.hpp"
#include "worked_examples.hpp"

using namespace queenlab;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return (fs::path(QUEENLAB_FIXTURE_DIR) / name).string();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "queenlab_cli_tests";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("solve") {
  CHECK(run({"solve", "--n", "6", "--modular", "--count"}).out == "0\n");
  CHECK(run({"solve", "--n", "8", "--count"}).out == "92\n");
  const Result four = run({"solve", "--n", "4"});
  CHECK(four.code == 0);
  CHECK(four.out == "2 4 1 3\n3 1 4 2\n");
  CHECK(run({"solve", "--n", "8", "--limit", "3"}).out.size() == 3 * 16);

  const auto doc = io::Json::parse(run({"--json", "solve", "--n", "5", "--modular", "--count"}).out);
  CHECK(doc["count"] == 10);
  const auto doc2 = io::Json::parse(run({"solve", "--n", "4", "--json"}).out);
  CHECK(doc2["solutions"].size() == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"solve"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--n", "0"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--n", "5", "--count", "--limit", "2"}).code == cli::kExitUsage);
  CHECK(run({"construct", "--method", "nope"}).code == cli::kExitUsage);
  CHECK(run({"construct", "--method", "jacobsthal"}).code == cli::kExitUsage);
  CHECK(run({"construct", "--method", "jacobsthal", "--n", "4"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--input", fixture("does_not_exist.json")}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("malformed files report their location") {
  const Result r = run({"verify", "--input", fixture("malformed.json")});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("line 4") != std::string::npos);
  const Result s = run({"verify", "--input", fixture("out_of_range.json")});
  CHECK(s.code == cli::kExitUsage);
  CHECK(s.err.find("/arcs/0/1") != std::string::npos);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--input", fixture("example1_d.json")}).code == 0);
  CHECK(run({"verify", "--input", fixture("example1_d.json"), "--modular"}).code == 0);
  CHECK(run({"verify", "--input", fixture("example2_f1.json"), "--modular"}).code == 1);
  const Result cycle = run({"verify", "--input", fixture("cycle5.json")});
  CHECK(cycle.code == 1);
  CHECK(cycle.out.find("diff (1,2) (2,3)") != std::string::npos);
  CHECK(run({"verify", "--input", fixture("queens4.json")}).code == 0);
  CHECK(run({"verify", "--input", fixture("queens5_modular.json")}).code == 0);
  CHECK(run({"verify", "--input", fixture("queens4_attacking.json")}).code == 1);
  // A lone queen is a queen labeling but not a placement of n queens.
  CHECK(run({"verify", "--input", fixture("queens3_partial.json")}).code == 1);

  const auto doc = io::Json::parse(run({"--json", "verify", "--input", fixture("cycle5.json")}).out);
  CHECK(doc["valid"] == false);
  CHECK(doc["failures"][0]["condition"] == "diff");
}

TEST_CASE("construct") {
  const Result j = run({"construct", "--method", "jacobsthal", "--n", "5"});
  CHECK(j.code == 0);
  CHECK(io::digraph_from_json(io::parse(j.out)) == examples::example1_base());
  CHECK(io::parse(j.out) == io::read_file(fixture("example1_d.json")));

  const Result d = run({"construct", "--method", "doubling", "--p", "7"});
  CHECK(cycle_type(io::digraph_from_json(io::parse(d.out))) == CycleType{3, 3, 1});

  const Result c = run({"construct", "--method", "strong-cycle", "--k", "4"});
  CHECK(cycle_type(io::digraph_from_json(io::parse(c.out))) == CycleType{4});

  const Result t = run({"construct", "--method", "three-cycles", "--m", "4"});
  CHECK(io::placement_from_json(io::parse(t.out)).placement.size() == 12);

  const Result p = run({"construct", "--method", "polya-composite", "--m", "4", "--n", "5", "--pi",
                        "1,2,1,2,1"});
  CHECK(p.code == 0);
  CHECK(io::placement_from_json(io::parse(p.out)).placement.size() == 20);
  CHECK(run({"construct", "--method", "polya-composite", "--m", "4", "--n", "5", "--pi", "1,3,1,1,1"})
            .code == cli::kExitUsage);
}

TEST_CASE("emitted documents re-verify with the same verdict") {
  const fs::path dir = scratch_dir();
  struct Case {
    std::vector<std::string> args;
    int verdict;
  };
  const std::vector<Case> cases{
      {{"construct", "--method", "jacobsthal", "--n", "7"}, 0},
      {{"construct", "--method", "jacobsthal", "--n", "9"}, 1},
      {{"construct", "--method", "doubling", "--p", "11"}, 0},
      {{"construct", "--method", "strong-cycle", "--k", "5"}, 1},
      {{"construct", "--method", "three-cycles", "--m", "6"}, 0},
      {{"construct", "--method", "polya-composite", "--m", "5", "--n", "7"}, 0},
  };
  int k = 0;
  for (const Case& c : cases) {
    const std::string path = (dir / ("emitted" + std::to_string(k++) + ".json")).string();
    std::vector<std::string> args = c.args;
    args.insert(args.end(), {"--output", path});
    REQUIRE(run(args).code == 0);
    CHECK_MESSAGE(run({"verify", "--input", path}).code == c.verdict, path);
  }
}

TEST_CASE("product") {
  const fs::path dir = scratch_dir();
  const std::string sol25 = (dir / "sol25.json").string();
  const Result r = run({"product", "--d", fixture("example1_d.json"), "--family",
                        fixture("example1_d.json"), fixture("example1_f2.json"), "--assign",
                        fixture("example1_assign.json"), "--check-conditions", "--output", sol25});
  CHECK(r.code == 0);
  CHECK(r.err.find("sum condition: valid") != std::string::npos);
  CHECK(r.err.find("diff condition: valid") != std::string::npos);
  const LabeledDigraph p = io::digraph_from_json(io::read_file(sol25));
  CHECK(p == oh_product(examples::example1_base(), examples::example1_assignment()));
  CHECK(run({"verify", "--input", sol25}).code == 0);
  // The mixed-family product is not toroidal.
  CHECK(run({"verify", "--input", sol25, "--modular"}).code == 1);
  CHECK(run({"product", "--d", fixture("example1_d.json"), "--family", fixture("example1_d.json"),
             fixture("example1_f2.json"), "--assign", fixture("example1_assign.json"), "--modular"})
            .code == 1);

  const Result r32 =
      run({"--json", "product", "--d", fixture("example2_d.json"), "--family",
           fixture("example2_f1.json"), fixture("example2_f2.json"), fixture("example2_f3.json"),
           fixture("example2_f4.json"), "--assign", fixture("example2_assign.json"),
           "--check-conditions"});
  CHECK(r32.code == 0);
  const auto doc = io::Json::parse(r32.out);
  CHECK(doc["product"]["n"] == 32);
  CHECK(doc["verification"]["valid"] == true);
  CHECK(doc["hypotheses_hold"] == true);

  // Assignment pointing past the family.
  CHECK(run({"product", "--d", fixture("example1_d.json"), "--family", fixture("example1_d.json"),
             "--assign", fixture("example1_assign.json")})
            .code == cli::kExitUsage);
}

TEST_CASE("analyze, types, render, bound") {
  const Result a = run({"analyze", "--input", fixture("example1_d.json")});
  CHECK(a.code == 0);
  CHECK(a.out.find("cycle_type: {4,1}") != std::string::npos);
  CHECK(a.out.find("sum_total: 30 (n(n+1) = 30)") != std::string::npos);
  CHECK(a.out.find("diff_total: 0") != std::string::npos);
  const auto doc = io::Json::parse(run({"--json", "analyze", "--input", fixture("queens4.json")}).out);
  CHECK(doc["sum_total"] == 20);
  CHECK(doc["sigma_identities"] == true);

  CHECK(run({"types", "--n", "7"}).out == "{3,3,1}\n{6,1}\n{7}\n");
  CHECK(run({"render", "--input", fixture("queens4.json")}).out == ".Q..\n...Q\nQ...\n..Q.\n");

  const fs::path dir = scratch_dir();
  REQUIRE(run({"construct", "--method", "doubling", "--p", "5", "--output", (dir / "g5.json").string()})
              .code == 0);
  const Result b = run({"bound", "--m", "5", "--n", "5", "--family", (dir / "g5.json").string()});
  CHECK(b.code == 0);
  CHECK(b.out.find("generated: 10") != std::string::npos);
  const Result s1 = run({"--json", "bound", "--m", "5", "--n", "5", "--samples", "50", "--seed", "9"});
  const Result s2 = run({"--json", "bound", "--m", "5", "--n", "5", "--samples", "50", "--seed", "9"});
  CHECK(s1.out == s2.out);
  CHECK(run({"bound", "--m", "5", "--n", "5"}).code == cli::kExitUsage);
}
