#pragma once

// Rewriting a graph of groups into another one with the same fundamental
// group. Every operation returns the new graph together with generator
// maps in both directions, which validate_witness checks by reducing words.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gogkit/gog.hpp"
#include "gogkit/structure_tree.hpp"

namespace gogkit {

  // A word over named generators.
  struct Letter {
    std::string gen;
    int         exp;  // +1 or -1
    bool        operator==(Letter const&) const = default;
  };
  using TextWord = std::vector<Letter>;

  // "a * b^-1"; "" and "1" are the empty word.
  std::string format_text_word(TextWord const& w);
  TextWord    parse_text_word(std::string const& text);
  TextWord    inverse(TextWord const& w);
  TextWord    concat(std::initializer_list<TextWord> parts);

  // Vertex groups may themselves be fundamental groups of graphs of finite
  // groups ("nested" vertices). A plain vertex holds a one-vertex graph with
  // the same id. Generators are named as in word text; the generators of a
  // nested vertex w are those of its graph with every id prefixed by "w/".
  struct CompositeVertex {
    std::string   id;
    GraphOfGroups group;
    bool          nested = false;

    static CompositeVertex plain(std::string const& id, FiniteGroup const& group);
    static CompositeVertex nest(std::string const& id, GraphOfGroups const& group);
  };

  struct CompositeEdge {
    std::string             id;
    vertex_t                d0;
    vertex_t                d1;
    FiniteGroup             group;
    std::vector<NormalForm> d0_images;  // indexed by edge group element
    std::vector<NormalForm> d1_images;

    [[nodiscard]] std::vector<NormalForm> const& images(int side) const {
      return side == 0 ? d0_images : d1_images;
    }
  };

  class CompositeGog {
   public:
    // Throws Error{InvalidGraphOfGroups} listing every violation.
    CompositeGog(std::vector<CompositeVertex> vertices,
                 std::vector<CompositeEdge>   edges,
                 std::vector<edge_t>          tree,
                 vertex_t                     basepoint);

    static CompositeGog from_gog(GraphOfGroups const& g);

    [[nodiscard]] FiniteGraph const&  graph() const noexcept {
      return _d->graph;
    }
    [[nodiscard]] SpanningTree const& tree() const noexcept {
      return _d->tree;
    }
    [[nodiscard]] vertex_t basepoint() const noexcept {
      return _d->base;
    }
    [[nodiscard]] std::vector<CompositeVertex> const& vertices() const noexcept {
      return _d->vertices;
    }
    [[nodiscard]] std::vector<CompositeEdge> const& edges() const noexcept {
      return _d->edges;
    }
    [[nodiscard]] std::vector<edge_t> const& tree_edges() const noexcept {
      return _d->tree.edges();
    }

    // True when no vertex is nested.
    [[nodiscard]] bool          is_flat() const;
    // Throws Error{PreconditionFailed} unless flat.
    [[nodiscard]] GraphOfGroups flatten() const;

    // Generator name of a syllable of vertex u's group.
    [[nodiscard]] std::string name(vertex_t u, Syllable const& s) const;
    // x, an element of vertex u's group, as a generator word.
    [[nodiscard]] TextWord    word(vertex_t u, NormalForm const& x) const;

    // Generators of vertex u's group, by name.
    [[nodiscard]] std::vector<std::string> vertex_generators(vertex_t u) const;
    [[nodiscard]] std::vector<std::string> generators() const;
    // Tree letters, multiplication tables of the finite groups, nested
    // relators, and t^-1 d0(k) t = d1(k) for every edge.
    [[nodiscard]] std::vector<TextWord>    relators() const;
    // Throws Error{MalformedWord} on unknown generators.
    [[nodiscard]] bool                     is_trivial(TextWord const& w) const;

   private:
    struct Gen {
      bool       letter;
      std::size_t index;  // vertex or edge
      std::optional<NormalForm> element;
    };
    struct Data {
      std::vector<CompositeVertex> vertices;
      std::vector<CompositeEdge>   edges;
      FiniteGraph                  graph;
      SpanningTree                 tree;
      vertex_t                     base;
      std::map<std::string, Gen>   gens;
      std::vector<std::string>     gen_order;
    };
    std::shared_ptr<Data const> _d;
  };

  // psi: source generators to target words; phi the other way.
  struct GogIsoWitness {
    std::shared_ptr<CompositeGog const> source;
    std::shared_ptr<CompositeGog const> target;
    std::map<std::string, TextWord>     psi;
    std::map<std::string, TextWord>     phi;
  };

  struct WitnessReport {
    bool                     ok = true;
    std::size_t              checks = 0;
    std::vector<std::string> failures;
  };

  TextWord substitute(TextWord const& w, std::map<std::string, TextWord> const& map);

  // Relators go to trivial words both ways; phi(psi(s)) = s and
  // psi(phi(s)) = s on generators.
  WitnessReport validate_witness(GogIsoWitness const& w);
  // first: A -> B, second: B -> C.
  GogIsoWitness compose(GogIsoWitness const& first, GogIsoWitness const& second);

  struct SurgeryResult {
    CompositeGog  output;
    GogIsoWitness witness;
  };

  // Swaps the ends and inclusions of e; t_e goes to t_e^-1.
  SurgeryResult reverse_edge(CompositeGog const& g, edge_t e);

  // Merges an endpoint of the tree edge e into the other one when e's
  // inclusion onto it is surjective; the d1 end is tried first. Throws
  // Error{NotCollapsible}.
  SurgeryResult collapse_tree_edge(CompositeGog const& g, edge_t e);

  // Where an edge at the nested vertex w lands after expansion: l^-1 d(K) l
  // lies in the vertex group of `vertex` in w's graph.
  struct Attachment {
    vertex_t   vertex;
    NormalForm conjugator;
  };

  // Replaces the nested vertex w by its graph. Missing attachments are
  // found with conjugate_finite_into_vertex inside w's graph. Throws
  // Error{PreconditionFailed} (w plain, or a loop at w) or
  // Error{BadAttachment}.
  SurgeryResult expand_vertex(CompositeGog const&                  g,
                              vertex_t                             w,
                              std::map<edge_t, Attachment> const&  attach = {});

  // For each edge end at v, an element delta of G(v) with
  // delta^-1 d(K) delta inside chi.
  struct ConjugatorTable {
    vertex_t                 v;
    Subgroup                 chi;
    std::map<edge_t, elem_t> delta;
  };

  // Least delta per edge among elements of G(v) within the syllable radius.
  // Throws Error{NotFoundWithinRadius}.
  ConjugatorTable find_delta_conjugators(CompositeGog const& g,
                                         vertex_t            v,
                                         Subgroup const&     chi,
                                         std::size_t         radius = 1);

  // New vertex "<v>.delta" carrying G(v) joined to v by the tree edge
  // "<v>.chi" with group chi; v's group becomes chi and each edge at v is
  // conjugated into it by the table. Every edge at v must start at v and no
  // tree edge at v may be collapsible (Error{PreconditionFailed}). Throws
  // Error{TableInvalid}.
  SurgeryResult attach_amalgam_vertex(CompositeGog const&    g,
                                      vertex_t               v,
                                      ConjugatorTable const& table);

  // The fundamental group as Delta *_chi Lambda, where Lambda is the group
  // of the given connected subgraph, Delta that of its complement, and
  // exactly one tree edge joins them.
  struct AmalgamSplit {
    Subgraph      delta_side;
    Subgraph      lambda_side;
    edge_t        edge;
    GraphOfGroups delta;
    GraphOfGroups lambda;
    // chi as elements of the whole group (the edge group image).
    std::vector<NormalForm> chi;
    Predicate               in_delta;
    Predicate               in_lambda;
  };

  // Throws Error{WrongShape}.
  AmalgamSplit collapse_to_amalgam(GraphOfGroups const& g, Subgraph const& lambda);

}  // namespace gogkit
