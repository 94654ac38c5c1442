#pragma once

// Finite groups given by their multiplication tables, together with the
// subgroup, homomorphism and conjugacy helpers the rest of the library uses.
// Elements are plain indices into the table; all enumeration happens in
// ascending index order, which makes every result reproducible.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gogkit {

  using elem_t = std::uint32_t;

  inline constexpr std::size_t default_max_order = 256;

  class FiniteGroup {
   public:
    FiniteGroup() : FiniteGroup(cyclic(1)) {}

    // Validates the table exhaustively: every row and column is a permutation,
    // a two-sided identity exists and the product is associative. Throws
    // Error{NotPermutationRow | NoIdentity | NonAssociative | OrderTooLarge}.
    static FiniteGroup from_table(std::vector<std::vector<elem_t>> const& table,
                                  std::vector<std::string> labels = {},
                                  std::size_t max_order = default_max_order);

    static FiniteGroup cyclic(std::size_t n);
    // Order 2n; index i is r^i and index n + i is s r^i.
    static FiniteGroup dihedral(std::size_t n);
    // Permutations of {0,...,n-1} in lexicographic order; a*b applies a first.
    static FiniteGroup symmetric(std::size_t n);
    // Order 4n; index j*2n + i is a^i x^j with x^2 = a^n and x^-1 a x = a^-1.
    static FiniteGroup dicyclic(std::size_t n);
    // SL(2, p) for a prime p, identity first, other matrices lexicographic.
    static FiniteGroup special_linear_2(std::size_t p);
    // Index i*|b| + j is the pair (i, j).
    static FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b);

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }
    [[nodiscard]] elem_t identity() const noexcept {
      return _id;
    }
    [[nodiscard]] elem_t mul(elem_t x, elem_t y) const noexcept {
      return _table[x * _order + y];
    }
    [[nodiscard]] elem_t inverse(elem_t x) const noexcept {
      return _inv[x];
    }
    [[nodiscard]] elem_t power(elem_t x, long long k) const;
    [[nodiscard]] std::size_t element_order(elem_t x) const;
    [[nodiscard]] elem_t conjugate(elem_t x, elem_t by) const noexcept {
      // x^by = by^-1 x by
      return mul(mul(_inv[by], x), by);
    }

    [[nodiscard]] std::string label(elem_t x) const;
    [[nodiscard]] std::vector<std::vector<elem_t>> table() const;
    // A short human readable description, e.g. "cyclic 4".
    [[nodiscard]] std::string const& description() const noexcept {
      return _description;
    }

    // Greedy generating set: the least element not yet in the closure of the
    // previously chosen ones, repeated until the whole group is covered.
    [[nodiscard]] std::vector<elem_t> const& generators() const noexcept {
      return _generators;
    }

    bool operator==(FiniteGroup const& that) const noexcept {
      return _order == that._order && _id == that._id && _table == that._table;
    }

   private:
    FiniteGroup(std::size_t order,
                std::vector<elem_t> table,
                std::vector<std::string> labels,
                std::string description);

    std::size_t              _order;
    std::vector<elem_t>      _table;
    elem_t                   _id;
    std::vector<elem_t>      _inv;
    std::vector<std::string> _labels;
    std::string              _description;
    std::vector<elem_t>      _generators;
  };

  // A subgroup is its sorted element list; the parent group is always passed
  // alongside, never stored.
  struct Subgroup {
    std::vector<elem_t> elements;

    [[nodiscard]] bool contains(elem_t x) const;
    [[nodiscard]] std::size_t size() const noexcept {
      return elements.size();
    }
    bool operator==(Subgroup const&) const = default;
  };

  Subgroup subgroup_closure(FiniteGroup const& g, std::span<elem_t const> seeds);
  bool     is_subgroup(FiniteGroup const& g, Subgroup const& s);
  bool     is_subset(Subgroup const& s, Subgroup const& t);

  // S^h = h^-1 S h.
  Subgroup conjugate_subgroup(FiniteGroup const& g, Subgroup const& s, elem_t h);
  // Least h (in index order) with S^h contained in T.
  std::optional<elem_t> is_conjugate_into(FiniteGroup const& g,
                                          Subgroup const&    s,
                                          Subgroup const&    t);

  // A homomorphism is its image array, indexed by source element.
  struct GroupHom {
    std::vector<elem_t> images;

    [[nodiscard]] elem_t operator()(elem_t x) const {
      return images[x];
    }
    bool operator==(GroupHom const&) const = default;
  };

  bool is_homomorphism(FiniteGroup const& source,
                       FiniteGroup const& target,
                       GroupHom const&    hom);
  bool is_injective(GroupHom const& hom, std::size_t target_order);
  bool is_surjective(GroupHom const& hom, std::size_t target_order);
  Subgroup image(GroupHom const& hom);

  // Extends an assignment of the source's generators() to a homomorphism, or
  // returns nullopt when the assignment does not extend.
  std::optional<GroupHom> extend_to_hom(FiniteGroup const&      source,
                                        FiniteGroup const&      target,
                                        std::span<elem_t const> generator_images);

  // All homomorphisms, ordered lexicographically by the images of
  // source.generators().
  std::vector<GroupHom> enumerate_homs(FiniteGroup const& source,
                                       FiniteGroup const& target);
  std::vector<GroupHom> enumerate_embeddings(FiniteGroup const& source,
                                             FiniteGroup const& target);

}  // namespace gogkit
