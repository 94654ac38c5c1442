#pragma once

// Homomorphisms from the fundamental group onto finite groups, found by
// backtracking over vertex group homomorphisms and stable letter images.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gogkit/derivation.hpp"
#include "gogkit/group_ring.hpp"

namespace gogkit {

  struct FiniteQuotient {
    GraphOfGroups         owner;
    FiniteGroup           target;
    std::vector<GroupHom> vertex_maps;    // G(v) -> target
    std::vector<elem_t>   letter_images;  // identity on tree edges

    [[nodiscard]] elem_t apply(Syllable const& s) const;
    [[nodiscard]] elem_t apply(Word const& w) const;
    [[nodiscard]] elem_t apply(NormalForm const& x) const;
    // Subgroup generated by all generator images.
    [[nodiscard]] Subgroup image() const;
  };

  // Every relator maps to the identity and every vertex map is a
  // homomorphism; returns the first problem or "".
  std::string check_quotient(FiniteQuotient const& q);

  // Element of (Z/m)[target].
  struct QuotientRingElem {
    coeff_t                   modulus;
    std::map<elem_t, coeff_t> terms;  // no zero coefficients

    [[nodiscard]] bool is_zero() const noexcept {
      return terms.empty();
    }
    bool operator==(QuotientRingElem const&) const = default;
  };

  QuotientRingElem push_to_quotient(RingElem const& x, FiniteQuotient const& q);
  QuotientRingElem act_right(QuotientRingElem const& x, FiniteQuotient const& q, elem_t g);

  // Coefficient mass outside the subgroup D of the target, mod m.
  coeff_t coset_complement_functional(FiniteQuotient const&   q,
                                      Subgroup const&         d,
                                      QuotientRingElem const& x);

  struct SearchOptions {
    // Candidate targets in search order; empty means default_targets().
    std::vector<FiniteGroup> targets;
    // Only consider homomorphisms injective on every vertex group. When
    // unset, separate/embed try faithful maps first and then all maps;
    // the other searches use all maps.
    std::optional<bool> faithful_vertices;
    // Cap on complete assignments examined before giving up.
    std::size_t max_candidates = 5'000'000;
  };

  // Cyclic groups of order 2..24, then symmetric groups of degree 3..6,
  // sorted by order (stable).
  std::vector<FiniteGroup> default_targets();
  // Every group of order <= max_order among cyclic, dihedral, dicyclic,
  // symmetric, SL(2,3) and products of two small cyclic or dihedral
  // groups, sorted by order (stable).
  std::vector<FiniteGroup> small_targets(std::size_t max_order = 24);

  using QuotientGoal = std::function<bool(FiniteQuotient const&)>;

  // First quotient, in target order and then lexicographic vertex map and
  // letter images, accepted by the goal. Throws Error{Exhausted}.
  FiniteQuotient search_quotient(GraphOfGroups const& g,
                                 QuotientGoal const&  goal,
                                 SearchOptions const& options = {});

  // Every element maps to a nontrivial element. Throws Error{BadGoal} if
  // some element is the identity. The element list may be empty.
  FiniteQuotient separate(GraphOfGroups const&           g,
                          std::vector<NormalForm> const& elements,
                          SearchOptions                  options = {});

  // Every element maps outside the image of G(v).
  FiniteQuotient separate_from_vertex_group(GraphOfGroups const&           g,
                                            vertex_t                       v,
                                            std::vector<NormalForm> const& elements,
                                            SearchOptions                  options = {});

  // Injective on the given subgroup of G(v).
  FiniteQuotient embed(GraphOfGroups const& g,
                       vertex_t             v,
                       Subgroup const&      sub,
                       SearchOptions        options = {});

  // A quotient whose restriction to the subgraph group maps onto a group
  // that still determines `given`, a quotient of the extracted subgraph.
  FiniteQuotient refine(GraphOfGroups const&  g,
                        Subgraph const&       sub,
                        FiniteQuotient const& given,
                        SearchOptions         options = {});

  // The subgraph as a graph of groups in its own right (same ids).
  GraphOfGroups extract_subgraph(GraphOfGroups const& g, Subgraph const& sub);

  struct NonkernelCertificate {
    FiniteQuotient   quotient;
    std::size_t      component;
    QuotientRingElem pushed;
  };

  // A quotient in which some component of f(x) pushes to a nonzero element.
  // Throws Error{Exhausted}.
  NonkernelCertificate certify_nonkernel(Derivation const& f,
                                         NormalForm const& x,
                                         SearchOptions     options = {});
  // Re-evaluates f(x) and pushes it through the certificate's quotient.
  bool check_certificate(Derivation const& f, NormalForm const& x, NonkernelCertificate const& c);

}  // namespace gogkit
