#include <doctest.h>

#include "raag/errors.hpp"
#include "raag/embed.hpp"
#include "raag/serialize.hpp"

using namespace raag;

TEST_CASE("graph JSON round trip") {
  const Graph g = mycielskian(cycle_graph(5));
  CHECK(graph_from_json(to_json(g)) == g);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": ["a"]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(
      graph_from_json(Json::parse(R"({"vertices": ["a"], "edges": [["a", "b"]]})")),
      InvalidArgument);
}

TEST_CASE("certificate JSON round trip") {
  const auto v = decide(cycle_graph(8), cycle_graph(6));
  REQUIRE(v.yes());
  const Json j = to_json(v.certificate());
  CHECK(j.at("note") == "cycle_cellulation");
  CHECK(j.at("assignment").size() == 8);
  CHECK(j.at("assignment")[0].contains("lambda_vertex"));
  CHECK(j.at("assignment")[0].contains("rep_word"));
  const auto back = certificate_from_json(j);
  CHECK(verify_certificate(back));
  CHECK(to_json(back) == j);
  Json tampered = j;
  tampered["assignment"][0]["base"] = tampered["assignment"][1]["base"];
  tampered["assignment"][0]["rep_word"] = tampered["assignment"][1]["rep_word"];
  CHECK_FALSE(verify_certificate(certificate_from_json(tampered)));
}

TEST_CASE("approximation JSON round trip") {
  const GraphPtr g = share(path_graph(4));
  const auto a = grow(g, GrowStrategy::by_radius(2));
  const Json j = to_json(a);
  CHECK(j.at("provenance").at("strategy") == "radius");
  const auto back = approximation_from_json(j);
  CHECK(back.graph() == a.graph());
  CHECK(to_json(back) == j);
  const auto d = grow(g, GrowStrategy::by_doubling({"v1"}));
  CHECK(to_json(approximation_from_json(to_json(d))) == to_json(d));
}

TEST_CASE("verdict JSON") {
  auto j = to_json(decide(cycle_graph(7), cycle_graph(6)));
  CHECK(j.at("verdict") == "no");
  CHECK(j.at("obstruction").at("kind") == "CycleArithmetic");
  j = to_json(decide(complete_graph(3), cycle_graph(5)));
  CHECK(j.at("obstruction").at("witness").size() == 3);
  Budget tiny;
  tiny.search.max_radius = 0;
  j = to_json(decide(cycle_graph(5), complement(cycle_graph(6)), tiny));
  CHECK(j.at("verdict") == "unknown");
  CHECK_FALSE(j.at("report").at("strategies").empty());
}
