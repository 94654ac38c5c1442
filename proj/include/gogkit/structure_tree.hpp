#pragma once

// The Bass-Serre tree of a graph of groups, explored one ball at a time.
// Vertices are cosets g*G(v) and edges are cosets g*G(e), where G(e) sits
// inside G(d0 e) through the d0 inclusion.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gogkit/gog.hpp"

namespace gogkit {

  struct TreeVertex {
    vertex_t   orbit;
    NormalForm rep;  // least element of the coset

    bool operator==(TreeVertex const& that) const {
      return orbit == that.orbit && rep == that.rep;
    }
  };

  struct TreeEdge {
    edge_t     orbit;
    NormalForm rep;

    bool operator==(TreeEdge const& that) const {
      return orbit == that.orbit && rep == that.rep;
    }
  };

  // Canonical vertex x*G(v) and edge x*G(e).
  TreeVertex tree_vertex(NormalForm const& x, vertex_t v);
  TreeEdge   tree_edge(NormalForm const& x, edge_t e);

  // d0(gG(e)) = gG(d0 e) and d1(gG(e)) = g*t_e*G(d1 e).
  TreeVertex origin(TreeEdge const& edge);
  TreeVertex terminus(TreeEdge const& edge);

  // Edges with the given vertex as an endpoint, in a fixed order.
  std::vector<TreeEdge> incident_edges(TreeVertex const& node);

  TreeVertex act(NormalForm const& x, TreeVertex const& node);
  TreeEdge   act(NormalForm const& x, TreeEdge const& edge);

  bool fixes(NormalForm const& x, TreeVertex const& node);

  struct TreeBall {
    std::vector<TreeVertex>                       vertices;  // breadth-first order
    std::vector<std::size_t>                      distance;
    std::vector<TreeEdge>                         edges;
    std::vector<std::pair<std::size_t, std::size_t>> ends;  // vertex indices of d0, d1
  };

  // Throws Error{BallTooLarge} past `cap` vertices. The result is checked
  // to be a tree (|E| = |V| - 1, connected, no repeated edge).
  TreeBall tree_ball(TreeVertex const& center, std::size_t radius, std::size_t cap = 100'000);

  // Vertex 1*G(basepoint).
  TreeVertex base_vertex(GraphOfGroups const& g);

  // All products of the generators. Throws Error{NotFinite} once more than
  // `cap` elements appear.
  std::vector<NormalForm> finite_closure(GraphOfGroups const&           g,
                                         std::vector<NormalForm> const& gens,
                                         std::size_t                    cap = 4096);

  // First vertex, breadth-first from base_vertex, fixed by every generator.
  // Throws Error{NotFinite} or Error{NotFoundWithinRadius}.
  TreeVertex fixed_vertex(GraphOfGroups const&           g,
                          std::vector<NormalForm> const& gens,
                          std::size_t                    radius = 8);

  struct VertexConjugator {
    NormalForm h;  // h^-1 K h lies in G(v)
    vertex_t   v;
  };

  // Checks h^-1 k h against G(v) for every k in the closure before returning.
  VertexConjugator conjugate_finite_into_vertex(GraphOfGroups const&           g,
                                                std::vector<NormalForm> const& gens,
                                                std::size_t                    radius = 8);

  std::string to_dot(TreeBall const& ball);

}  // namespace gogkit
