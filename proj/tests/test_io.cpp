#include <doctest.h>

#include "pgg/equilibria.hpp"
#include "pgg/graph.hpp"
#include "pgg/io_json.hpp"
#include "pgg/metrics.hpp"

using namespace pgg;

TEST_CASE("weight files map labels to exact rationals") {
  Graph g = parse_edge_list("b a\nc b\n");  // labels a, b, c
  RatVec w = weights_from_json(R"({"a": "1/2", "b": "3", "c": "0"})", g);
  REQUIRE(w.size() == 3);
  CHECK(w[0] == rat(1, 2));
  CHECK(w[1] == rat(3));
  CHECK(w[2] == rat(0));

  CHECK_THROWS_AS(weights_from_json(R"({"a": "1"})", g),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      weights_from_json(R"({"a": "1", "b": "1", "c": "1", "d": "1"})", g),
      std::invalid_argument);
  CHECK_THROWS_AS(
      weights_from_json(R"({"a": 1, "b": "1", "c": "1"})", g),
      std::invalid_argument);
  CHECK_THROWS_AS(
      weights_from_json(R"({"a": "x", "b": "1", "c": "1"})", g),
      std::invalid_argument);
  CHECK_THROWS_AS(weights_from_json("[1,2,3]", g), std::invalid_argument);
  CHECK_THROWS_AS(weights_from_json("{bad json", g), std::invalid_argument);
}

TEST_CASE("profile and classification serialization") {
  Graph p2 = make_path(2);
  EffortProfile p{RatVec{rat(2, 5), rat(3, 5)}, rat(1)};
  Json j = profile_to_json(p);
  CHECK(j["efforts"][0] == "2/5");
  CHECK(j["efforts"][1] == "3/5");
  CHECK(j["e_star"] == "1");

  Json c = classification_to_json(classify(p2, p));
  CHECK(c["kind"] == "distributed");
  CHECK(c["roles"][0] == "co_specialist");
  CHECK(c["co_specialist_links"][0][0] == 0);
  CHECK(c["co_specialist_links"][0][1] == 1);
}

TEST_CASE("equilibrium set serialization shape") {
  Graph p4 = make_path(4);
  auto es = enumerate_pieces(p4, rat(1));
  Json j = equilibrium_set_to_json(es);
  CHECK(j["n"] == 4);
  CHECK(j["e_star"] == "1");
  REQUIRE(j["pieces"].size() == 5);
  const Json& seg = j["pieces"][0];
  CHECK(seg["support"] == Json::array({0, 1, 3}));
  CHECK(seg["dim"] == 1);
  CHECK(seg["vertices"].size() == 2);
  CHECK(seg["vertices"][0] == Json::array({"0", "1", "0", "1"}));
  CHECK(seg["base"].size() == 4);
  CHECK(seg["directions"].size() == 1);
  CHECK(seg["constraints"].size() > 0);
  for (const Json& row : seg["constraints"]) {
    CHECK(row.contains("coeffs"));
    CHECK(row.contains("offset"));
  }
}

TEST_CASE("role and kind names") {
  CHECK(std::string(role_name(AgentRole::specialist)) == "specialist");
  CHECK(std::string(role_name(AgentRole::free_rider)) == "free_rider");
  CHECK(std::string(kind_name(ProfileKind::hybrid)) == "hybrid");
}
