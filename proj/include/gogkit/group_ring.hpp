#pragma once

// Sparse elements of the group ring (Z/m)[G] for G the fundamental group of
// a graph of groups. Basis elements are normal forms; the right action
// multiplies every basis element on the right and re-reduces.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gogkit/gog.hpp"

namespace gogkit {

  using coeff_t = std::uint32_t;

  class RingElem {
   public:
    // Throws Error{BadModulus} for m < 2.
    RingElem(GraphOfGroups owner, coeff_t modulus);

    static RingElem basis(NormalForm const& x, coeff_t modulus, coeff_t coeff = 1);
    // Sum of the given elements, each with coefficient 1.
    static RingElem sum(GraphOfGroups const& owner,
                        coeff_t              modulus,
                        std::vector<NormalForm> const& xs);

    [[nodiscard]] GraphOfGroups const& owner() const noexcept {
      return _owner;
    }
    [[nodiscard]] coeff_t modulus() const noexcept {
      return _mod;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _terms.empty();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _terms.size();
    }
    [[nodiscard]] coeff_t coefficient(NormalForm const& x) const;

    // Terms sorted by word text.
    [[nodiscard]] std::vector<std::pair<NormalForm, coeff_t>> terms() const;
    // e.g. "1*b + 4*1"; "0" for zero.
    [[nodiscard]] std::string text() const;

    RingElem& operator+=(RingElem const& y);
    RingElem& operator-=(RingElem const& y);
    void      add_term(NormalForm const& x, coeff_t c);

    friend RingElem operator+(RingElem x, RingElem const& y) {
      return x += y;
    }
    friend RingElem operator-(RingElem x, RingElem const& y) {
      return x -= y;
    }
    friend RingElem operator-(RingElem const& x);
    // Ring product.
    friend RingElem operator*(RingElem const& x, RingElem const& y);

    bool operator==(RingElem const& that) const noexcept {
      return _owner == that._owner && _mod == that._mod && _terms == that._terms;
    }

    [[nodiscard]] std::map<std::vector<std::int32_t>, coeff_t> const& raw() const noexcept {
      return _terms;
    }

   private:
    void check_compatible(RingElem const& y) const;

    GraphOfGroups                              _owner;
    coeff_t                                    _mod;
    std::map<std::vector<std::int32_t>, coeff_t> _terms;
  };

  // Throws Error{RingMismatch}.
  RingElem add(RingElem const& x, RingElem const& y);
  RingElem scale(coeff_t c, RingElem const& x);
  // x * g for a group element g. Throws Error{MixedOwners}.
  RingElem act_right(RingElem const& x, NormalForm const& g);
  // g * x.
  RingElem act_left(NormalForm const& g, RingElem const& x);

  using RingVector = std::vector<RingElem>;

  RingVector zero_vector(GraphOfGroups const& owner, coeff_t modulus, std::size_t rank);
  bool       is_zero(RingVector const& v);

}  // namespace gogkit
