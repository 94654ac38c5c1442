#include "gogkit/group_ring.hpp"

#include <algorithm>

#include "gogkit/error.hpp"

namespace gogkit {

  RingElem::RingElem(GraphOfGroups owner, coeff_t modulus)
      : _owner(std::move(owner)), _mod(modulus) {
    if (modulus < 2) {
      throw Error(ErrorCode::BadModulus, "modulus must be at least 2");
    }
  }

  RingElem RingElem::basis(NormalForm const& x, coeff_t modulus, coeff_t coeff) {
    RingElem r(x.owner(), modulus);
    r.add_term(x, coeff);
    return r;
  }

  RingElem RingElem::sum(GraphOfGroups const&           owner,
                         coeff_t                        modulus,
                         std::vector<NormalForm> const& xs) {
    RingElem r(owner, modulus);
    for (auto const& x : xs) {
      r.add_term(x, 1);
    }
    return r;
  }

  void RingElem::check_compatible(RingElem const& y) const {
    if (_mod != y._mod) {
      throw Error(ErrorCode::RingMismatch,
                  "moduli " + std::to_string(_mod) + " and " + std::to_string(y._mod));
    }
    if (!(_owner == y._owner)) {
      throw Error(ErrorCode::MixedOwners, "ring elements over different groups");
    }
  }

  void RingElem::add_term(NormalForm const& x, coeff_t c) {
    if (!(x.owner() == _owner)) {
      throw Error(ErrorCode::MixedOwners, "basis element from another graph of groups");
    }
    c %= _mod;
    if (c == 0) {
      return;
    }
    auto [it, fresh] = _terms.try_emplace(x.code(), c);
    if (!fresh) {
      it->second = (it->second + c) % _mod;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  coeff_t RingElem::coefficient(NormalForm const& x) const {
    auto it = _terms.find(x.code());
    return it == _terms.end() ? 0 : it->second;
  }

  std::vector<std::pair<NormalForm, coeff_t>> RingElem::terms() const {
    std::vector<std::pair<std::string, std::pair<NormalForm, coeff_t>>> keyed;
    for (auto const& [code, c] : _terms) {
      NormalForm x(_owner, code);
      keyed.push_back({x.text(), {x, c}});
    }
    std::sort(keyed.begin(), keyed.end(), [](auto const& a, auto const& b) {
      return a.first < b.first;
    });
    std::vector<std::pair<NormalForm, coeff_t>> out;
    for (auto& k : keyed) {
      out.push_back(std::move(k.second));
    }
    return out;
  }

  std::string RingElem::text() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [x, c] : terms()) {
      if (!out.empty()) {
        out += " + ";
      }
      out += std::to_string(c) + "*(" + x.text() + ")";
    }
    return out;
  }

  RingElem& RingElem::operator+=(RingElem const& y) {
    check_compatible(y);
    for (auto const& [code, c] : y._terms) {
      auto [it, fresh] = _terms.try_emplace(code, c);
      if (!fresh) {
        it->second = (it->second + c) % _mod;
        if (it->second == 0) {
          _terms.erase(it);
        }
      }
    }
    return *this;
  }

  RingElem& RingElem::operator-=(RingElem const& y) {
    return *this += -y;
  }

  RingElem operator-(RingElem const& x) {
    RingElem out = x;
    for (auto& [code, c] : out._terms) {
      c = x._mod - c;
    }
    return out;
  }

  RingElem operator*(RingElem const& x, RingElem const& y) {
    x.check_compatible(y);
    RingElem out(x._owner, x._mod);
    for (auto const& [cx, ax] : x._terms) {
      NormalForm gx(x._owner, cx);
      for (auto const& [cy, ay] : y._terms) {
        auto c = static_cast<coeff_t>((std::uint64_t{ax} * ay) % x._mod);
        out.add_term(multiply(gx, NormalForm(x._owner, cy)), c);
      }
    }
    return out;
  }

  RingElem add(RingElem const& x, RingElem const& y) {
    return x + y;
  }

  RingElem scale(coeff_t c, RingElem const& x) {
    RingElem out(x.owner(), x.modulus());
    for (auto const& [code, a] : x.raw()) {
      out.add_term(NormalForm(x.owner(), code),
                   static_cast<coeff_t>((std::uint64_t{a} * c) % x.modulus()));
    }
    return out;
  }

  RingElem act_right(RingElem const& x, NormalForm const& g) {
    if (!(x.owner() == g.owner())) {
      throw Error(ErrorCode::MixedOwners, "act_right: element from another graph of groups");
    }
    RingElem out(x.owner(), x.modulus());
    for (auto const& [code, a] : x.raw()) {
      out.add_term(multiply(NormalForm(x.owner(), code), g), a);
    }
    return out;
  }

  RingElem act_left(NormalForm const& g, RingElem const& x) {
    if (!(x.owner() == g.owner())) {
      throw Error(ErrorCode::MixedOwners, "act_left: element from another graph of groups");
    }
    RingElem out(x.owner(), x.modulus());
    for (auto const& [code, a] : x.raw()) {
      out.add_term(multiply(g, NormalForm(x.owner(), code)), a);
    }
    return out;
  }

  RingVector zero_vector(GraphOfGroups const& owner, coeff_t modulus, std::size_t rank) {
    return RingVector(rank, RingElem(owner, modulus));
  }

  bool is_zero(RingVector const& v) {
    return std::all_of(v.begin(), v.end(), [](RingElem const& x) { return x.is_zero(); });
  }

}  // namespace gogkit
