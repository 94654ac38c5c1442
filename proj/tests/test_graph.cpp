#include "doctest.h"

#include "gogkit/error.hpp"
#include "gogkit/graph.hpp"
#include "gogkit/io.hpp"

using namespace gogkit;

TEST_CASE("spanning trees") {
  FiniteGraph single({"v"}, {});
  CHECK(spanning_tree(single).edges().empty());

  FiniteGraph loop({"v"}, {{"t", 0, 0}});
  CHECK(spanning_tree(loop).edges().empty());

  FiniteGraph path({"left", "mid", "right"}, {{"e1", 0, 1}, {"e2", 1, 2}});
  CHECK(spanning_tree(path).edges() == std::vector<edge_t>{0, 1});

  FiniteGraph split({"a", "b"}, {});
  CHECK_THROWS_AS(spanning_tree(split), Error);
  CHECK(check_spanning_tree(path, {0}) != "");
}

TEST_CASE("tree paths") {
  FiniteGraph  path({"left", "mid", "right"}, {{"e1", 0, 1}, {"e2", 1, 2}});
  SpanningTree t = spanning_tree(path);
  CHECK(t.path_edges(1, 1).empty());
  CHECK(t.path_edges(0, 2) == std::vector<edge_t>{0, 1});
  CHECK(t.path(2, 0) == std::vector<Step>{{1, -1}, {0, -1}});

  auto a = load_gog("FIX-A");
  CHECK(a.tree().path_edges(0, 1) == std::vector<edge_t>{0});
}

TEST_CASE("sign classification") {
  auto a = load_gog("FIX-A");
  auto c = classify(a.graph(), a.tree(), 0, 1);
  CHECK(c.base_edge == 0);
  CHECK(c.vertex_signs[1] == Sign::positive);
  CHECK(c.edge_signs[0] == Sign::neutral);

  auto fc = load_gog("FIX-C");
  auto& g = fc.graph();
  auto  k = classify(g, fc.tree(), g.vertex_index("mid"), g.vertex_index("right"));
  CHECK(k.base_edge == g.edge_index("e2"));
  CHECK(k.vertex_signs[g.vertex_index("right")] == Sign::positive);
  CHECK(k.vertex_signs[g.vertex_index("left")] == Sign::negative);
  CHECK(k.edge_signs[g.edge_index("e2")] == Sign::neutral);
  CHECK(k.edge_signs[g.edge_index("e1")] == Sign::negative);

  auto fb = load_gog("FIX-B");
  CHECK_THROWS_AS(classify(fb.graph(), fb.tree(), 0, 0), Error);
}
