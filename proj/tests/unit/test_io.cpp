#include <doctest.h>

#include "grundy/errors.hpp"
#include "grundy/io.hpp"
#include "support/brute.hpp"

using namespace grundy;

TEST_CASE("parse and format round trip") {
  const Graph g = parse_graph("c a path\np 4 3\ne 1 2\n\ne 2 3\ne 3 4\n");
  CHECK(g == path_power(4, 1));
  CHECK(format_graph(g) == "p 4 3\ne 1 2\ne 2 3\ne 3 4\n");

  std::mt19937 rng(109);
  for (int t = 0; t < 30; ++t) {
    const Graph h = brute::random_graph(1 + t % 10, 0.4, rng);
    CHECK(parse_graph(format_graph(h)) == h);
  }
  CHECK(parse_graph("p 3 0\n") == edgeless_graph(3));
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("e 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 3 2\ne 1 2\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 3 2\ne 1 2\ne 2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 3 1\ne 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 3 1\ne 1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 3 1\ne 1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 3 2\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 3 0\np 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 3 1\nx 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 3 1\ne one 2\n"), ParseError);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.gr"), ParseError);
}

TEST_CASE("tree serialization") {
  const auto json = tree_to_json(decompose(cycle_power(4, 1)));
  CHECK(json["kind"] == "series");
  REQUIRE(json["children"].size() == 2);
  CHECK(json["children"][0]["kind"] == "parallel");
  CHECK(json["children"][0]["children"][0]["vertex"] == 1);
  CHECK(json["children"][0]["children"][1]["vertex"] == 3);

  const auto prime = tree_to_json(decompose(path_power(4, 1)));
  CHECK(prime["kind"] == "prime");
  CHECK(prime["quotient_edges"] == nlohmann::json::parse("[[1,2],[2,3],[3,4]]"));
  CHECK(nlohmann::json::parse(prime.dump()) == prime);
}
