#include <doctest.h>

#include "helpers.hpp"
#include "pombox/poset_io.hpp"
#include "pombox/testkit.hpp"

using namespace test;

TEST_CASE("json ingestion") {
  const Poset p = poset_from_json_text(
      R"({"events":[{"id":10,"label":"a"},{"id":3,"label":"b"},{"id":7,"label":"c"}],
          "order":[[3,7],[7,10]],"boxes":[[3,7]]})");
  // Ids are renumbered in ascending order: 3 -> 0, 7 -> 1, 10 -> 2.
  CHECK(p.labels() == std::vector<Label>{"b", "c", "a"});
  CHECK(p.less(0, 2));
  CHECK(p.boxes() == std::vector<EventSet>{ev({0, 1})});
  CHECK(brute_iso(p, sp("[b;c];a")));
}

TEST_CASE("json ingestion errors") {
  CHECK_THROWS_AS(poset_from_json_text(R"({"events":[{"id":0,"label":"a"},{"id":0,"label":"b"}]})"), PosetError);
  CHECK_THROWS_AS(poset_from_json_text(R"({"events":[{"id":0,"label":"a"}],"order":[[0,1]]})"), PosetError);
  CHECK_THROWS_AS(poset_from_json_text(R"({"events":[{"id":0,"label":"a"}],"boxes":[[]]})"), PosetError);
  CHECK_THROWS_AS(poset_from_json_text(R"({"events":[{"id":0,"label":"a"},{"id":1,"label":"b"}],
                                         "order":[[0,1],[1,0]]})"),
                  PosetError);
  CHECK_THROWS_AS(poset_from_json_text("{not json"), PosetError);
  CHECK_THROWS_AS(poset_from_json_text(R"({"events":[{"id":"x","label":"a"}]})"), PosetError);
  CHECK_THROWS_AS(poset_from_json_text(R"({"order":[]})"), PosetError);
}

TEST_CASE("json round trip") {
  GenConfig cfg;
  cfg.max_events = 6;
  Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    const Poset p = gen_poset(cfg, rng);
    const Poset q = poset_from_json(nlohmann::json::parse(poset_to_json(p).dump()));
    CHECK(q == p);
  }
}

TEST_CASE("dot export") {
  const std::string dot = poset_to_dot(sp("[a;[b]]|c"), "G");
  CHECK(dot.find("digraph \"G\"") == 0);
  CHECK(dot.find("e0 [label=\"0:a\"]") != std::string::npos);
  CHECK(dot.find("e0 -> e1;") != std::string::npos);
  // One cluster for the outer box and one nested inside it.
  const auto outer = dot.find("subgraph cluster_0");
  const auto inner = dot.find("subgraph cluster_1");
  REQUIRE(outer != std::string::npos);
  REQUIRE(inner != std::string::npos);
  CHECK(outer < inner);
  CHECK(dot.find("e2;") == std::string::npos);

  // Overlapping boxes cannot nest; the second is drawn as a dashed note.
  const std::string overlap = poset_to_dot(mk({"a", "b", "c"}, {}, {ev({0, 1}), ev({1, 2})}));
  CHECK(overlap.find("style=dashed") != std::string::npos);
}
