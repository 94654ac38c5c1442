#pragma once

// Finite directed graphs with two incidence maps (loops and multi-edges
// allowed), spanning trees, tree paths and the vertex/edge sign
// classification relative to a base vertex and a target vertex.

#include <cstddef>
#include <string>
#include <vector>

namespace gogkit {

  using vertex_t = std::size_t;
  using edge_t   = std::size_t;

  struct Edge {
    std::string id;
    vertex_t    d0;  // initial vertex
    vertex_t    d1;  // terminal vertex
  };

  class FiniteGraph {
   public:
    FiniteGraph() = default;
    FiniteGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges);

    [[nodiscard]] std::size_t num_vertices() const noexcept {
      return _vertex_ids.size();
    }
    [[nodiscard]] std::size_t num_edges() const noexcept {
      return _edges.size();
    }
    [[nodiscard]] std::string const& vertex_id(vertex_t v) const {
      return _vertex_ids.at(v);
    }
    [[nodiscard]] Edge const& edge(edge_t e) const {
      return _edges.at(e);
    }
    [[nodiscard]] std::vector<std::string> const& vertex_ids() const noexcept {
      return _vertex_ids;
    }
    [[nodiscard]] std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }

    // Throws Error{UnknownId}.
    [[nodiscard]] vertex_t vertex_index(std::string const& id) const;
    [[nodiscard]] edge_t   edge_index(std::string const& id) const;
    [[nodiscard]] bool     has_vertex(std::string const& id) const;
    [[nodiscard]] bool     has_edge(std::string const& id) const;

    // Connected components of the underlying undirected graph, each sorted,
    // listed in order of their least vertex.
    [[nodiscard]] std::vector<std::vector<vertex_t>> components() const;
    [[nodiscard]] bool                               is_connected() const;

    // Edges with d0 == v or d1 == v (loops listed once), ascending.
    [[nodiscard]] std::vector<edge_t> incident_edges(vertex_t v) const;

   private:
    std::vector<std::string> _vertex_ids;
    std::vector<Edge>        _edges;
  };

  // One step of a path: an edge traversed forwards (d0 -> d1, sign +1) or
  // backwards (sign -1).
  struct Step {
    edge_t edge;
    int    sign;
    bool   operator==(Step const&) const = default;
  };

  class SpanningTree {
   public:
    SpanningTree() = default;
    // Throws Error{InvalidGraphOfGroups} unless the edges form a spanning tree.
    SpanningTree(FiniteGraph const& g, std::vector<edge_t> edges);

    [[nodiscard]] std::vector<edge_t> const& edges() const noexcept {
      return _edges;
    }
    [[nodiscard]] bool contains(edge_t e) const {
      return _in_tree.at(e);
    }

    // Unique simple path from v to w using tree edges only.
    [[nodiscard]] std::vector<Step> path(vertex_t v, vertex_t w) const;
    [[nodiscard]] std::vector<edge_t> path_edges(vertex_t v, vertex_t w) const;

   private:
    std::vector<edge_t>                _edges;
    std::vector<bool>                  _in_tree;
    // Rooted at vertex 0: parent step towards the root, and depth.
    std::vector<Step>                  _up;
    std::vector<std::size_t>           _depth;
    std::vector<vertex_t>              _parent;
  };

  // Breadth first from the least vertex (index 0), neighbours scanned by edge
  // index. Throws Error{Disconnected} listing the components.
  SpanningTree spanning_tree(FiniteGraph const& g);

  // Checks whether the edge list is a spanning tree; returns the problem or "".
  std::string check_spanning_tree(FiniteGraph const& g, std::vector<edge_t> const& edges);

  enum class Sign { negative = -1, neutral = 0, positive = 1 };

  struct SignClassification {
    vertex_t          base;
    edge_t            base_edge;
    std::vector<Sign> vertex_signs;
    std::vector<Sign> edge_signs;
  };

  // base_edge is the edge of the tree path [v, w] incident at v. A vertex t is
  // positive iff the tree path [v, t] contains base_edge, neutral iff t == v.
  // An edge is positive iff both ends are positive, neutral iff exactly one is.
  // Throws Error{SameVertex} when v == w.
  SignClassification classify(FiniteGraph const& g,
                              SpanningTree const& tree,
                              vertex_t            v,
                              vertex_t            w);

}  // namespace gogkit
