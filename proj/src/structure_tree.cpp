#include "gogkit/structure_tree.hpp"

#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gogkit/error.hpp"

namespace gogkit {

  namespace {
    NormalForm least_in_coset(NormalForm const&          x,
                              vertex_t                   v,
                              std::vector<elem_t> const& subgroup) {
      auto const& g    = x.owner();
      NormalForm  best = x;
      std::size_t best_len  = x.syllable_count();
      std::string best_text = x.text();
      for (elem_t s : subgroup) {
        NormalForm  y   = multiply(x, g.element(Syllable::vertex(v, s)));
        std::size_t len = y.syllable_count();
        if (len > best_len) {
          continue;
        }
        std::string text = y.text();
        if (len < best_len || text < best_text) {
          best      = std::move(y);
          best_len  = len;
          best_text = std::move(text);
        }
      }
      return best;
    }

    std::vector<elem_t> all_elements(FiniteGroup const& group) {
      std::vector<elem_t> out(group.order());
      for (elem_t x = 0; x < group.order(); ++x) {
        out[x] = x;
      }
      return out;
    }

    using Key = std::pair<std::size_t, std::vector<std::int32_t>>;

    Key key(TreeVertex const& node) {
      return {node.orbit, node.rep.code()};
    }

    Key key(TreeEdge const& edge) {
      return {edge.orbit, edge.rep.code()};
    }

    // Breadth-first exploration; `visit` returns true to stop.
    void explore(TreeVertex const&                                  center,
                 std::size_t                                        radius,
                 std::size_t                                        cap,
                 TreeBall&                                          ball,
                 std::function<bool(std::size_t)> const&            visit) {
      std::map<Key, std::size_t> vertex_index;
      std::map<Key, std::size_t> edge_index;
      ball.vertices.push_back(center);
      ball.distance.push_back(0);
      vertex_index[key(center)] = 0;
      if (visit(0)) {
        return;
      }
      for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
        if (ball.distance[i] >= radius) {
          continue;
        }
        TreeVertex const node = ball.vertices[i];
        for (auto& edge : incident_edges(node)) {
          auto k = key(edge);
          if (edge_index.count(k) != 0) {
            continue;
          }
          TreeVertex a = origin(edge);
          TreeVertex b = terminus(edge);
          bool       from_origin = a == node;
          if (from_origin == (b == node)) {
            throw std::logic_error("structure tree: edge is not incident or is a loop");
          }
          TreeVertex other = from_origin ? std::move(b) : std::move(a);
          if (vertex_index.count(key(other)) != 0) {
            throw std::logic_error("structure tree: ball contains a cycle");
          }
          if (ball.vertices.size() >= cap) {
            throw Error(ErrorCode::BallTooLarge,
                        "tree ball exceeds " + std::to_string(cap) + " vertices");
          }
          std::size_t j = ball.vertices.size();
          vertex_index[key(other)] = j;
          edge_index[k]            = ball.edges.size();
          ball.vertices.push_back(std::move(other));
          ball.distance.push_back(ball.distance[i] + 1);
          ball.edges.push_back(std::move(edge));
          ball.ends.push_back(from_origin ? std::pair{i, j} : std::pair{j, i});
          if (visit(j)) {
            return;
          }
        }
      }
    }
  }  // namespace

  TreeVertex tree_vertex(NormalForm const& x, vertex_t v) {
    return {v, least_in_coset(x, v, all_elements(x.owner().vertex_group(v)))};
  }

  TreeEdge tree_edge(NormalForm const& x, edge_t e) {
    auto const& g = x.owner();
    auto const& K = g.edge_group(e);
    std::vector<elem_t> image;
    for (elem_t k = 0; k < K.order(); ++k) {
      image.push_back(g.inclusion(e, 0)(k));
    }
    return {e, least_in_coset(x, g.graph().edge(e).d0, image)};
  }

  TreeVertex origin(TreeEdge const& edge) {
    auto const& g = edge.rep.owner();
    return tree_vertex(edge.rep, g.graph().edge(edge.orbit).d0);
  }

  TreeVertex terminus(TreeEdge const& edge) {
    auto const& g = edge.rep.owner();
    return tree_vertex(multiply(edge.rep, g.element(Syllable::letter(edge.orbit, 1))),
                       g.graph().edge(edge.orbit).d1);
  }

  std::vector<TreeEdge> incident_edges(TreeVertex const& node) {
    auto const&           g = node.rep.owner();
    std::vector<TreeEdge> out;
    for (edge_t e = 0; e < g.graph().num_edges(); ++e) {
      auto const& ends = g.graph().edge(e);
      if (ends.d0 == node.orbit) {
        for (elem_t s : g.coset_reps(e, 0)) {
          out.push_back(tree_edge(multiply(node.rep, g.element(Syllable::vertex(node.orbit, s))), e));
        }
      }
      if (ends.d1 == node.orbit) {
        for (elem_t s : g.coset_reps(e, 1)) {
          auto h = multiply(multiply(node.rep, g.element(Syllable::vertex(node.orbit, s))),
                            g.element(Syllable::letter(e, -1)));
          out.push_back(tree_edge(h, e));
        }
      }
    }
    return out;
  }

  TreeVertex act(NormalForm const& x, TreeVertex const& node) {
    return tree_vertex(multiply(x, node.rep), node.orbit);
  }

  TreeEdge act(NormalForm const& x, TreeEdge const& edge) {
    return tree_edge(multiply(x, edge.rep), edge.orbit);
  }

  bool fixes(NormalForm const& x, TreeVertex const& node) {
    return vertex_preimage(multiply(invert(node.rep), multiply(x, node.rep)), node.orbit)
        .has_value();
  }

  TreeBall tree_ball(TreeVertex const& center, std::size_t radius, std::size_t cap) {
    TreeBall ball;
    explore(center, radius, cap, ball, [](std::size_t) { return false; });
    if (ball.edges.size() + 1 != ball.vertices.size()) {
      throw std::logic_error("structure tree: ball is not a tree");
    }
    return ball;
  }

  TreeVertex base_vertex(GraphOfGroups const& g) {
    return tree_vertex(g.identity(), g.basepoint());
  }

  std::vector<NormalForm> finite_closure(GraphOfGroups const&           g,
                                         std::vector<NormalForm> const& gens,
                                         std::size_t                    cap) {
    std::vector<NormalForm>                      out{g.identity()};
    std::map<std::vector<std::int32_t>, bool>    seen{{out[0].code(), true}};
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (auto const& s : gens) {
        auto y = multiply(out[i], s);
        if (seen.emplace(y.code(), true).second) {
          if (out.size() >= cap) {
            throw Error(ErrorCode::NotFinite,
                        "subgroup closure exceeds " + std::to_string(cap) + " elements");
          }
          out.push_back(std::move(y));
        }
      }
    }
    return out;
  }

  TreeVertex fixed_vertex(GraphOfGroups const&           g,
                          std::vector<NormalForm> const& gens,
                          std::size_t                    radius) {
    finite_closure(g, gens);
    TreeBall                  ball;
    std::optional<std::size_t> found;
    explore(base_vertex(g), radius, 10'000'000, ball, [&](std::size_t i) {
      for (auto const& s : gens) {
        if (!fixes(s, ball.vertices[i])) {
          return false;
        }
      }
      found = i;
      return true;
    });
    if (!found) {
      throw Error(ErrorCode::NotFoundWithinRadius,
                  "no fixed vertex within radius " + std::to_string(radius));
    }
    return ball.vertices[*found];
  }

  VertexConjugator conjugate_finite_into_vertex(GraphOfGroups const&           g,
                                                std::vector<NormalForm> const& gens,
                                                std::size_t                    radius) {
    auto node = fixed_vertex(g, gens, radius);
    for (auto const& k : finite_closure(g, gens)) {
      if (!vertex_preimage(multiply(invert(node.rep), multiply(k, node.rep)), node.orbit)) {
        throw std::logic_error("structure tree: conjugator check failed at " + k.text());
      }
    }
    return {node.rep, node.orbit};
  }

  std::string to_dot(TreeBall const& ball) {
    std::ostringstream out;
    out << "graph tree {\n";
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
      auto const& node = ball.vertices[i];
      auto const& g    = node.rep.owner();
      out << "  n" << i << " [label=\"" << node.rep.text() << " G(" << g.graph().vertex_id(node.orbit)
          << ")\"];\n";
    }
    for (std::size_t j = 0; j < ball.edges.size(); ++j) {
      auto const& g = ball.edges[j].rep.owner();
      out << "  n" << ball.ends[j].first << " -- n" << ball.ends[j].second << " [label=\""
          << g.graph().edge(ball.edges[j].orbit).id << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace gogkit
