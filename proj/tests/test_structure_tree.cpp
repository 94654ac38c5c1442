#include <random>

#include "doctest.h"

#include "gogkit/error.hpp"
#include "gogkit/io.hpp"
#include "gogkit/structure_tree.hpp"

using namespace gogkit;

namespace {
  struct Fixture {
    GraphOfGroups                      g;
    std::map<std::string, std::string> aliases;
    explicit Fixture(std::string const& name)
        : g(load_gog(name)), aliases(aliases_from_json(load_json(name))) {}
    NormalForm operator()(std::string const& text) const {
      return g.reduce(read_word(g, text, aliases));
    }
  };
}  // namespace

TEST_CASE("balls in the tree") {
  Fixture a("FIX-A");
  auto    center = base_vertex(a.g);
  CHECK(tree_ball(center, 0).vertices.size() == 1);
  auto ball = tree_ball(center, 1);
  // [C4 : <a^2>] = 2 neighbours, the cosets 1.C6 and a.C6.
  REQUIRE(ball.vertices.size() == 3);
  CHECK(ball.vertices[1] == tree_vertex(a.g.identity(), 1));
  CHECK(ball.vertices[2] == tree_vertex(a("a"), 1));

  // The line of the infinite dihedral group.
  Fixture d("FIX-D");
  auto    line = tree_ball(base_vertex(d.g), 2);
  CHECK(line.vertices.size() == 5);
  std::vector<int> degree(line.vertices.size());
  for (auto [i, j] : line.ends) {
    ++degree[i];
    ++degree[j];
  }
  for (int k : degree) {
    CHECK(k <= 2);
  }

  // Every vertex of G(v)-orbit has [G(v) : image] neighbours per edge end.
  auto big = tree_ball(center, 4);
  CHECK(big.edges.size() + 1 == big.vertices.size());
  for (std::size_t i = 0; i < big.vertices.size(); ++i) {
    if (big.distance[i] < 4) {
      CHECK(incident_edges(big.vertices[i]).size() == (big.vertices[i].orbit == 0 ? 2 : 3));
    }
  }
}

TEST_CASE("the action") {
  Fixture a("FIX-A");
  auto    c6 = tree_vertex(a.g.identity(), 1);
  CHECK(act(a.g.identity(), c6) == c6);
  CHECK(act(a("a"), c6) == tree_vertex(a("a"), 1));
  CHECK(act(a("a^2"), c6) == c6);
  // Action respects multiplication and incidence.
  std::mt19937_64 rng(3);
  auto            elems = a.g.ball(3);
  auto            ball  = tree_ball(base_vertex(a.g), 2);
  for (int i = 0; i < 100; ++i) {
    auto const& x = elems[rng() % elems.size()];
    auto const& y = elems[rng() % elems.size()];
    auto const& n = ball.vertices[rng() % ball.vertices.size()];
    CHECK(act(multiply(x, y), n) == act(x, act(y, n)));
    auto const& e = ball.edges[rng() % ball.edges.size()];
    CHECK(origin(act(x, e)) == act(x, origin(e)));
    CHECK(terminus(act(x, e)) == act(x, terminus(e)));
  }
}

TEST_CASE("fixed vertices") {
  Fixture a("FIX-A");
  CHECK(fixed_vertex(a.g, {a.g.identity()}) == base_vertex(a.g));
  CHECK(fixed_vertex(a.g, {a("b^2")}) == tree_vertex(a.g.identity(), 1));
  CHECK(fixed_vertex(a.g, {a("a * b^2 * a^-1")}) == tree_vertex(a("a"), 1));

  auto c = conjugate_finite_into_vertex(a.g, {a("b^3")});
  CHECK(c.h.is_identity());
  auto k  = a("a * b^3 * a^-1");
  auto c2 = conjugate_finite_into_vertex(a.g, {k});
  CHECK(vertex_preimage(multiply(invert(c2.h), multiply(k, c2.h)), c2.v).has_value());

  Fixture b("FIX-B");
  CHECK_THROWS_AS(fixed_vertex(b.g, {b("t")}), Error);
  try {
    fixed_vertex(b.g, {b("t")});
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotFinite);
  }
  // A finite subgroup outside the ball radius.
  auto far = b("t^3 * b * t^-3");
  CHECK_THROWS_AS(fixed_vertex(b.g, {far}, 2), Error);
  CHECK_NOTHROW(fixed_vertex(b.g, {far}, 8));
}

TEST_CASE("dot export") {
  Fixture a("FIX-A");
  auto    dot = to_dot(tree_ball(base_vertex(a.g), 1));
  CHECK(dot.find("graph tree") == 0);
  CHECK(dot.find("n0 -- n1") != std::string::npos);
}
