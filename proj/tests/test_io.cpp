#include <stdexcept>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "queenlab/io.hpp"
#include "worked_examples.hpp"

using namespace queenlab;
using queenlab::io::Json;

namespace {

std::string error_location(const std::function<void()>& f) {
  try {
    f();
  } catch (const io::DocumentError& e) {
    return e.where();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("digraph documents") {
  const Json doc = Json::parse(R"({"n":5,"arcs":[[1,5],[2,3],[3,1],[4,4],[5,2]]})");
  CHECK(io::digraph_from_json(doc) == examples::example1_base());
  CHECK(io::digraph_to_json(examples::example1_base()) == doc);

  CHECK(error_location([] { io::digraph_from_json(Json::parse(R"({"n":2,"arcs":[[1,3]]})")); }) ==
        "/arcs/0/1");
  CHECK(error_location([] { io::digraph_from_json(Json::parse(R"({"arcs":[]})")); }) == "/n");
  CHECK(error_location([] { io::digraph_from_json(Json::parse(R"({"n":2})")); }) == "/arcs");
  CHECK(error_location([] { io::digraph_from_json(Json::parse(R"({"n":2,"arcs":[[1]]})")); }) ==
        "/arcs/0");
  CHECK(error_location([] { io::digraph_from_json(Json::parse(R"({"n":"2","arcs":[]})")); }) ==
        "/n");
  CHECK(error_location([] {
          io::digraph_from_json(Json::parse(R"({"n":2,"arcs":[[1,2],[1,2]]})"));
        }) == "/arcs");
}

TEST_CASE("placement documents") {
  const io::PlacementDocument one = io::placement_from_json(Json::parse(R"({"n":1,"queens":[[1,1]]})"));
  CHECK(one.placement == Placement(1, {{1, 1}}));
  CHECK_FALSE(one.modular.has_value());

  const io::PlacementDocument flagged =
      io::placement_from_json(Json::parse(R"({"n":2,"queens":[],"modular":true})"));
  CHECK(flagged.modular == std::optional<bool>(true));
  CHECK(io::placement_to_json(flagged).dump() == R"({"n":2,"queens":[],"modular":true})");

  CHECK(error_location([] {
          io::placement_from_json(Json::parse(R"({"n":2,"queens":[[1,1]],"modular":1})"));
        }) == "/modular");
  CHECK(error_location([] {
          io::placement_from_json(Json::parse(R"({"n":2,"queens":[[1,1],[1,1]]})"));
        }) == "/queens");
}

TEST_CASE("assignment documents") {
  const Json doc = Json::parse(R"({"arcs":[{"arc":[1,5],"index":0},{"arc":[3,1],"index":1}]})");
  const auto h = io::assignment_from_json(doc);
  CHECK(h.size() == 2);
  CHECK(h.at({3, 1}) == 1);
  CHECK(io::assignment_to_json(h) == doc);
  CHECK(error_location([] {
          io::assignment_from_json(Json::parse(R"({"arcs":[{"arc":[1,5]}]})"));
        }) == "/arcs/0/index");
  CHECK(error_location([] {
          io::assignment_from_json(Json::parse(R"({"arcs":[{"arc":[1,5],"index":-1}]})"));
        }) == "/arcs/0/index");
}

TEST_CASE("syntax errors carry a line number") {
  const std::string text = "{\n  \"n\": 5,\n  \"arcs\": [[1,5],[2,3]\n}\n";
  const std::string where = error_location([&] { io::parse(text); });
  CHECK(where.rfind("line 4", 0) == 0);
}

TEST_CASE("any_from_json dispatches on the document kind") {
  CHECK(std::holds_alternative<LabeledDigraph>(io::any_from_json(Json::parse(R"({"n":1,"arcs":[]})"))));
  CHECK(std::holds_alternative<io::PlacementDocument>(
      io::any_from_json(Json::parse(R"({"n":1,"queens":[]})"))));
  CHECK_THROWS_AS(io::any_from_json(Json::parse(R"({"n":1})")), io::DocumentError);
}

TEST_CASE("render_ascii") {
  CHECK(io::render_ascii(Placement(1, {{1, 1}})) == "Q\n");
  CHECK(io::render_ascii(placement_from_permutation({2, 4, 1, 3})) == ".Q..\n...Q\nQ...\n..Q.\n");
  CHECK(io::render_ascii(Placement(2, {})) == "..\n..\n");
}

TEST_CASE("documents survive dump and parse") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto perm = oracle::random_permutation(n, rng);
    if (trial % 2 == 0) {
      const LabeledDigraph d = from_permutation(perm);
      const Json saved = io::digraph_to_json(d);
      CHECK(io::digraph_from_json(io::parse(io::dump(saved))) == d);
      CHECK(io::digraph_to_json(io::digraph_from_json(saved)) == saved);
    } else {
      io::PlacementDocument doc{placement_from_permutation(perm), std::nullopt};
      if (trial % 3 == 0) doc.modular = trial % 2 == 1;
      const Json saved = io::placement_to_json(doc);
      CHECK(io::placement_from_json(io::parse(io::dump(saved))) == doc);
    }
  }
}
