#include "gogkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "gogkit/error.hpp"

namespace gogkit {

  FiniteGraph::FiniteGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges)
      : _vertex_ids(std::move(vertex_ids)), _edges(std::move(edges)) {
    for (auto const& e : _edges) {
      if (e.d0 >= _vertex_ids.size() || e.d1 >= _vertex_ids.size()) {
        throw Error(ErrorCode::UnknownId, "edge " + e.id + " has an endpoint out of range");
      }
    }
  }

  vertex_t FiniteGraph::vertex_index(std::string const& id) const {
    auto it = std::find(_vertex_ids.begin(), _vertex_ids.end(), id);
    if (it == _vertex_ids.end()) {
      throw Error(ErrorCode::UnknownId, "no vertex '" + id + "'");
    }
    return static_cast<vertex_t>(it - _vertex_ids.begin());
  }

  edge_t FiniteGraph::edge_index(std::string const& id) const {
    auto it = std::find_if(
        _edges.begin(), _edges.end(), [&](Edge const& e) { return e.id == id; });
    if (it == _edges.end()) {
      throw Error(ErrorCode::UnknownId, "no edge '" + id + "'");
    }
    return static_cast<edge_t>(it - _edges.begin());
  }

  bool FiniteGraph::has_vertex(std::string const& id) const {
    return std::find(_vertex_ids.begin(), _vertex_ids.end(), id) != _vertex_ids.end();
  }

  bool FiniteGraph::has_edge(std::string const& id) const {
    return std::any_of(
        _edges.begin(), _edges.end(), [&](Edge const& e) { return e.id == id; });
  }

  std::vector<std::vector<vertex_t>> FiniteGraph::components() const {
    std::vector<vertex_t> parent(num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](vertex_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (auto const& e : _edges) {
      vertex_t a = find(e.d0), b = find(e.d1);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<std::vector<vertex_t>> out;
    std::vector<std::size_t>           slot(num_vertices(), static_cast<std::size_t>(-1));
    for (vertex_t v = 0; v < num_vertices(); ++v) {
      vertex_t r = find(v);
      if (slot[r] == static_cast<std::size_t>(-1)) {
        slot[r] = out.size();
        out.emplace_back();
      }
      out[slot[r]].push_back(v);
    }
    return out;
  }

  bool FiniteGraph::is_connected() const {
    return num_vertices() > 0 && components().size() == 1;
  }

  std::vector<edge_t> FiniteGraph::incident_edges(vertex_t v) const {
    std::vector<edge_t> out;
    for (edge_t e = 0; e < _edges.size(); ++e) {
      if (_edges[e].d0 == v || _edges[e].d1 == v) {
        out.push_back(e);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Spanning trees
  ////////////////////////////////////////////////////////////////////////

  std::string check_spanning_tree(FiniteGraph const& g, std::vector<edge_t> const& edges) {
    std::size_t const n = g.num_vertices();
    if (n == 0) {
      return "graph has no vertices";
    }
    if (edges.size() + 1 != n) {
      return "tree has " + std::to_string(edges.size()) + " edges, expected "
             + std::to_string(n - 1);
    }
    std::vector<vertex_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](vertex_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (edge_t e : edges) {
      if (e >= g.num_edges()) {
        return "tree edge index out of range";
      }
      vertex_t a = find(g.edge(e).d0), b = find(g.edge(e).d1);
      if (a == b) {
        return "tree edge " + g.edge(e).id + " closes a cycle";
      }
      parent[a] = b;
    }
    return "";
  }

  SpanningTree::SpanningTree(FiniteGraph const& g, std::vector<edge_t> edges)
      : _edges(std::move(edges)), _in_tree(g.num_edges(), false) {
    std::sort(_edges.begin(), _edges.end());
    if (auto problem = check_spanning_tree(g, _edges); !problem.empty()) {
      throw Error(ErrorCode::InvalidGraphOfGroups, problem);
    }
    for (edge_t e : _edges) {
      _in_tree[e] = true;
    }
    std::size_t const n = g.num_vertices();
    _up.assign(n, Step{0, 0});
    _depth.assign(n, 0);
    _parent.assign(n, 0);
    std::vector<bool>    seen(n, false);
    std::deque<vertex_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      vertex_t x = queue.front();
      queue.pop_front();
      for (edge_t e : _edges) {
        auto const& ed = g.edge(e);
        if (ed.d0 == x && !seen[ed.d1]) {
          // From d1 upwards to x we traverse e backwards.
          seen[ed.d1]    = true;
          _up[ed.d1]     = Step{e, -1};
          _parent[ed.d1] = x;
          _depth[ed.d1]  = _depth[x] + 1;
          queue.push_back(ed.d1);
        } else if (ed.d1 == x && !seen[ed.d0]) {
          seen[ed.d0]    = true;
          _up[ed.d0]     = Step{e, +1};
          _parent[ed.d0] = x;
          _depth[ed.d0]  = _depth[x] + 1;
          queue.push_back(ed.d0);
        }
      }
    }
  }

  std::vector<Step> SpanningTree::path(vertex_t v, vertex_t w) const {
    std::vector<Step> head, tail;
    while (_depth[v] > _depth[w]) {
      head.push_back(_up[v]);
      v = _parent[v];
    }
    while (_depth[w] > _depth[v]) {
      tail.push_back(Step{_up[w].edge, -_up[w].sign});
      w = _parent[w];
    }
    while (v != w) {
      head.push_back(_up[v]);
      v = _parent[v];
      tail.push_back(Step{_up[w].edge, -_up[w].sign});
      w = _parent[w];
    }
    head.insert(head.end(), tail.rbegin(), tail.rend());
    return head;
  }

  std::vector<edge_t> SpanningTree::path_edges(vertex_t v, vertex_t w) const {
    std::vector<edge_t> out;
    for (auto const& s : path(v, w)) {
      out.push_back(s.edge);
    }
    return out;
  }

  SpanningTree spanning_tree(FiniteGraph const& g) {
    auto comps = g.components();
    if (comps.size() != 1) {
      std::string msg = "graph has " + std::to_string(comps.size()) + " components:";
      for (auto const& c : comps) {
        msg += " {";
        for (std::size_t i = 0; i < c.size(); ++i) {
          msg += (i ? "," : "") + g.vertex_id(c[i]);
        }
        msg += "}";
      }
      throw Error(ErrorCode::Disconnected, msg);
    }
    std::vector<bool>    seen(g.num_vertices(), false);
    std::vector<edge_t>  chosen;
    std::deque<vertex_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      vertex_t x = queue.front();
      queue.pop_front();
      for (edge_t e = 0; e < g.num_edges(); ++e) {
        auto const& ed = g.edge(e);
        vertex_t    other;
        if (ed.d0 == x) {
          other = ed.d1;
        } else if (ed.d1 == x) {
          other = ed.d0;
        } else {
          continue;
        }
        if (!seen[other]) {
          seen[other] = true;
          chosen.push_back(e);
          queue.push_back(other);
        }
      }
    }
    return SpanningTree(g, std::move(chosen));
  }

  SignClassification classify(FiniteGraph const& g,
                              SpanningTree const& tree,
                              vertex_t            v,
                              vertex_t            w) {
    if (v == w) {
      throw Error(ErrorCode::SameVertex,
                  "classification needs two distinct vertices, got " + g.vertex_id(v)
                      + " twice");
    }
    SignClassification out;
    out.base      = v;
    out.base_edge = tree.path(v, w).front().edge;
    out.vertex_signs.assign(g.num_vertices(), Sign::negative);
    for (vertex_t t = 0; t < g.num_vertices(); ++t) {
      if (t == v) {
        out.vertex_signs[t] = Sign::neutral;
        continue;
      }
      auto p = tree.path_edges(v, t);
      if (std::find(p.begin(), p.end(), out.base_edge) != p.end()) {
        out.vertex_signs[t] = Sign::positive;
      }
    }
    out.edge_signs.assign(g.num_edges(), Sign::negative);
    for (edge_t e = 0; e < g.num_edges(); ++e) {
      int positives = (out.vertex_signs[g.edge(e).d0] == Sign::positive)
                      + (out.vertex_signs[g.edge(e).d1] == Sign::positive);
      out.edge_signs[e] = positives == 2   ? Sign::positive
                          : positives == 1 ? Sign::neutral
                                           : Sign::negative;
    }
    return out;
  }

}  // namespace gogkit
