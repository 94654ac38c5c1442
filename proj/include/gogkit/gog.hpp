#pragma once

// Graphs of finite groups, the presentation of their fundamental group and
// a solved word problem.
//
// Elements are stored as reduced loops at the basepoint (Serre's path
// form): g0, step1, g1, ..., stepn, gn with every g_i for i < n a fixed
// left coset representative of the edge group image at the end it leaves
// through, and no backtracking step whose middle element lies in the edge
// group. Tree steps are kept in the path but never printed, so the printed
// word (vertex syllables and stable letters only) is itself canonical.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gogkit/finite_group.hpp"
#include "gogkit/graph.hpp"

namespace gogkit {

  // Raw data before validation.
  struct GogSpec {
    FiniteGraph                        graph;
    std::vector<FiniteGroup>           vertex_groups;
    std::vector<FiniteGroup>           edge_groups;
    std::vector<GroupHom>              d0;  // edge group -> G(d0 e)
    std::vector<GroupHom>              d1;  // edge group -> G(d1 e)
    std::optional<std::vector<edge_t>> tree;
    std::optional<vertex_t>            basepoint;
  };

  struct ValidationReport {
    std::vector<std::string> violations;
    [[nodiscard]] bool       ok() const noexcept {
      return violations.empty();
    }
  };

  ValidationReport validate(GogSpec const& spec);

  struct Syllable {
    enum class Kind : std::uint8_t { vertex, letter };
    Kind         kind;
    std::size_t  index;  // vertex or edge index
    std::int32_t value;  // element for vertex syllables, exponent +-1 for letters

    static Syllable vertex(vertex_t v, elem_t g) {
      return {Kind::vertex, v, static_cast<std::int32_t>(g)};
    }
    static Syllable letter(edge_t e, int exponent) {
      return {Kind::letter, e, exponent};
    }
    bool operator==(Syllable const&) const = default;
  };

  using Word = std::vector<Syllable>;

  struct Presentation {
    std::vector<Syllable> generators;
    std::vector<Word>     relators;
  };

  class NormalForm;

  class GraphOfGroups {
   public:
    // Throws Error{InvalidGraphOfGroups} listing every violation.
    explicit GraphOfGroups(GogSpec spec);

    [[nodiscard]] GogSpec const& spec() const noexcept {
      return _d->spec;
    }
    [[nodiscard]] FiniteGraph const& graph() const noexcept {
      return _d->spec.graph;
    }
    [[nodiscard]] SpanningTree const& tree() const noexcept {
      return _d->tree;
    }
    [[nodiscard]] vertex_t basepoint() const noexcept {
      return _d->base;
    }
    [[nodiscard]] FiniteGroup const& vertex_group(vertex_t v) const {
      return _d->spec.vertex_groups.at(v);
    }
    [[nodiscard]] FiniteGroup const& edge_group(edge_t e) const {
      return _d->spec.edge_groups.at(e);
    }
    // side 0 is the inclusion into G(d0 e), side 1 into G(d1 e).
    [[nodiscard]] GroupHom const& inclusion(edge_t e, int side) const {
      return side == 0 ? _d->spec.d0.at(e) : _d->spec.d1.at(e);
    }
    [[nodiscard]] vertex_t end(edge_t e, int side) const {
      return side == 0 ? graph().edge(e).d0 : graph().edge(e).d1;
    }
    [[nodiscard]] bool is_tree_edge(edge_t e) const {
      return _d->tree.contains(e);
    }

    // Same presentation, different basepoint.
    [[nodiscard]] GraphOfGroups with_basepoint(vertex_t v) const;

    // Left transversal of the edge group image at one end: the identity
    // represents the image itself, other cosets their least index.
    [[nodiscard]] elem_t coset_rep(edge_t e, int side, elem_t g) const {
      return _d->ends[2 * e + side].rep[g];
    }
    // k with g = coset_rep(g) * inclusion(k).
    [[nodiscard]] elem_t coset_part(edge_t e, int side, elem_t g) const {
      return _d->ends[2 * e + side].part[g];
    }
    [[nodiscard]] std::optional<elem_t> preimage(edge_t e, int side, elem_t g) const;
    [[nodiscard]] std::vector<elem_t> const& coset_reps(edge_t e, int side) const {
      return _d->ends[2 * e + side].reps;
    }

    [[nodiscard]] Word        parse_word(std::string_view text) const;
    [[nodiscard]] std::string format_word(Word const& w) const;
    [[nodiscard]] std::string format(Syllable const& s) const;
    [[nodiscard]] Word        inverse_word(Word const& w) const;

    [[nodiscard]] NormalForm reduce(Word const& w) const;
    [[nodiscard]] NormalForm parse(std::string_view text) const;
    [[nodiscard]] NormalForm identity() const;
    [[nodiscard]] NormalForm element(Syllable const& s) const;

    [[nodiscard]] Presentation presentation() const;

    // All normal forms with at most `radius` syllables, ordered by
    // (syllable count, word text). Throws Error{BallTooLarge}.
    [[nodiscard]] std::vector<NormalForm> ball(std::size_t radius,
                                               std::size_t cap = 1'000'000) const;

    bool operator==(GraphOfGroups const& that) const noexcept {
      return _d == that._d;
    }

   private:
    friend class NormalForm;
    friend NormalForm multiply(NormalForm const&, NormalForm const&);
    friend NormalForm invert(NormalForm const&);

    struct EndTable {
      std::vector<elem_t>       rep;
      std::vector<elem_t>       part;
      std::vector<std::int32_t> pre;  // -1 outside the image
      std::vector<elem_t>       reps;
    };

    struct Data {
      GogSpec                            spec;
      SpanningTree                       tree;
      vertex_t                           base;
      std::vector<EndTable>              ends;
      std::vector<std::vector<Step>>     to_vertex;    // tree path base -> v
      std::vector<std::vector<Step>>     from_vertex;  // tree path v -> base
    };

    class Reducer;

    std::shared_ptr<Data const> _d;
  };

  class NormalForm {
   public:
    NormalForm(GraphOfGroups owner, std::vector<std::int32_t> code)
        : _owner(std::move(owner)), _code(std::move(code)) {}

    [[nodiscard]] GraphOfGroups const& owner() const noexcept {
      return _owner;
    }
    // g0, step1, g1, ..., stepn, gn where a step is 2*edge (+1 if backwards).
    [[nodiscard]] std::vector<std::int32_t> const& code() const noexcept {
      return _code;
    }
    [[nodiscard]] bool is_identity() const noexcept {
      return _code.size() == 1 && static_cast<elem_t>(_code[0])
                                      == _owner.vertex_group(_owner.basepoint()).identity();
    }
    // Nontrivial vertex syllables plus stable letters of edges outside the tree.
    [[nodiscard]] std::size_t syllable_count() const;
    [[nodiscard]] Word        word() const;
    [[nodiscard]] std::string text() const;

    bool operator==(NormalForm const& that) const noexcept {
      return _owner == that._owner && _code == that._code;
    }

   private:
    GraphOfGroups             _owner;
    std::vector<std::int32_t> _code;
  };

  // Throws Error{MixedOwners} when the owners differ.
  NormalForm multiply(NormalForm const& x, NormalForm const& y);
  NormalForm invert(NormalForm const& x);
  NormalForm power(NormalForm const& x, long long k);
  bool       equal(NormalForm const& x, NormalForm const& y);
  // (syllable count, word text)
  bool shortlex_less(NormalForm const& x, NormalForm const& y);

  // A set of vertices and edges of the underlying graph.
  struct Subgraph {
    std::vector<bool> vertices;
    std::vector<bool> edges;
  };

  // Checks the subgraph is connected, its edges have both ends inside it and
  // its tree edges span it. Throws Error{BadSubgraph | UnknownId}.
  Subgraph make_subgraph(GraphOfGroups const&            g,
                         std::vector<std::string> const& vertex_ids,
                         std::vector<std::string> const& edge_ids);
  // The full subgraph spanned by some vertices (all edges between them).
  Subgraph induced_subgraph(GraphOfGroups const& g, std::vector<vertex_t> const& vertices);

  // Membership in the subgroup generated by the vertex groups and stable
  // letters of a subgraph. When the basepoint lies outside the subgraph the
  // element is re-reduced with the basepoint moved inside it.
  bool subgraph_group_membership(GraphOfGroups const& g,
                                 Subgraph const&      sub,
                                 NormalForm const&    x);

  // The element of G(v) equal to x, if any.
  std::optional<elem_t> vertex_preimage(NormalForm const& x, vertex_t v);

  // A membership test usable on elements of one owner.
  using Predicate = std::function<bool(NormalForm const&)>;
  Predicate vertex_group_predicate(GraphOfGroups const& g, vertex_t v);
  Predicate subgraph_predicate(GraphOfGroups const& g, Subgraph const& sub);

  struct MalnormalityReport {
    bool                       holds = true;
    std::size_t                checked = 0;  // ball elements outside the factor
    std::optional<std::string> counterexample;
  };

  // For every s in the ball outside the vertex group H = G(v), the
  // intersection H with s^-1 H s must lie in some h^-1 chi h with h in H.
  MalnormalityReport verify_relative_malnormality(GraphOfGroups const& g,
                                                  vertex_t             v,
                                                  Subgroup const&      chi,
                                                  std::size_t          radius);

}  // namespace gogkit
