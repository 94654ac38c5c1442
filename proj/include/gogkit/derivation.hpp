#pragma once

// Right derivations f(gh) = f(g).h + f(h) of the fundamental group into
// (Z/m)[G]^n, given by their values on the presentation generators.
//
// Each component has its own action: the standard one (right
// multiplication) or the twisted one, where h acts through the map that
// kills every vertex group and sends stable letters to the free group on
// the letters outside the spanning tree, included back into G.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gogkit/group_ring.hpp"

namespace gogkit {

  enum class Action { standard, twisted };

  // How the accessibility derivation treats stable letters off the tree.
  //  standard: f(t_e) = -(sum of the edge group image at d1 e), standard action.
  //  twisted:  f(t_e) = t_e - 1 acting through the free quotient.
  enum class FreeLetterMode { standard, twisted };

  class Derivation {
   public:
    // The zero derivation.
    Derivation(GraphOfGroups owner, coeff_t modulus, std::vector<Action> actions);

    [[nodiscard]] GraphOfGroups const& owner() const noexcept {
      return _owner;
    }
    [[nodiscard]] coeff_t modulus() const noexcept {
      return _mod;
    }
    [[nodiscard]] std::size_t rank() const noexcept {
      return _actions.size();
    }
    [[nodiscard]] std::vector<Action> const& actions() const noexcept {
      return _actions;
    }

    [[nodiscard]] RingVector const& vertex_value(vertex_t v, elem_t g) const {
      return _vertex_values.at(v).at(g);
    }
    [[nodiscard]] RingVector const& letter_value(edge_t e) const {
      return _letter_values.at(e);
    }
    void set_vertex_value(vertex_t v, elem_t g, RingVector value);
    void set_letter_value(edge_t e, RingVector value);

    // Value on a single syllable; f(t^-1) = -f(t).alpha(t^-1).
    [[nodiscard]] RingVector value(Syllable const& s) const;

    // alpha_i(x) for component i.
    [[nodiscard]] NormalForm act(std::size_t component, NormalForm const& x) const;

   private:
    void check_shape(RingVector const& value) const;

    GraphOfGroups                        _owner;
    coeff_t                              _mod;
    std::vector<Action>                  _actions;
    std::vector<std::vector<RingVector>> _vertex_values;
    std::vector<RingVector>              _letter_values;
  };

  // The image of x in the free group on the letters outside the tree,
  // freely reduced and read back as an element of G.
  NormalForm free_part(NormalForm const& x);

  // Throws Error{MixedOwners}.
  RingVector eval(Derivation const& f, Word const& w);
  RingVector eval(Derivation const& f, NormalForm const& x);

  struct WellDefinedReport {
    bool                     ok = true;
    std::size_t              relators_checked = 0;
    std::size_t              pairs_checked = 0;
    std::vector<std::string> failures;
  };

  // Evaluates f on every relator and compares values on `samples` pairs of
  // different words for the same element.
  WellDefinedReport check_well_defined(Derivation const& f,
                                       std::size_t       samples = 500,
                                       std::uint64_t     seed = 1);

  // Vertex tables plus stable letter values.
  struct GluingData {
    Derivation tables;
  };

  struct GluingResidue {
    edge_t                edge;
    std::optional<elem_t> element;  // empty for the tree letter relator t_e
    RingVector            residue;
  };

  // Residue of the gluing condition for every edge and edge group element:
  // the value of the relator d1(k)^-1 t_e^-1 d0(k) t_e, plus f(t_e) for tree
  // edges. All are zero exactly when the tables define a derivation.
  std::vector<GluingResidue> gluing_residues(Derivation const& tables);

  // Checks the vertex tables satisfy the derivation law on their finite
  // groups and every gluing residue vanishes. Throws
  // Error{GluingConditionFailed} naming the first offending pair.
  Derivation glue(GluingData data);

  // Throws Error{SameVertex}.
  Derivation dunwoody_derivation(GraphOfGroups const& g,
                                 vertex_t             v,
                                 vertex_t             w,
                                 coeff_t              modulus);

  // One component per vertex w != v (the vertex derivation with base v and
  // target w) and one per edge outside the tree. Throws Error{BadModulus}
  // when some edge group order is divisible by the modulus.
  Derivation accessibility_derivation(GraphOfGroups const& g,
                                      vertex_t             v,
                                      coeff_t              modulus,
                                      FreeLetterMode       mode = FreeLetterMode::standard);

  // One vertex derivation per tree edge leaving the subgraph, based at its
  // inside end, and one free-letter component per non-tree edge outside the
  // subgraph. Its kernel is the subgraph group.
  Derivation subgraph_derivation(GraphOfGroups const& g,
                                 Subgraph const&      sub,
                                 coeff_t              modulus,
                                 FreeLetterMode       mode = FreeLetterMode::standard);

  struct KernelScanReport {
    std::size_t              elements = 0;
    std::size_t              zeros = 0;
    std::size_t              members = 0;
    std::size_t              mismatches = 0;
    std::vector<std::string> examples;  // first few mismatches
  };

  KernelScanReport kernel_scan(Derivation const& f, Predicate const& in_h, std::size_t radius);

}  // namespace gogkit
