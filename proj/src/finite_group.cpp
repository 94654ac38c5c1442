#include "gogkit/finite_group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

#include "gogkit/error.hpp"

namespace gogkit {

  namespace {
    constexpr elem_t unset = static_cast<elem_t>(-1);

    std::vector<elem_t> greedy_generators(std::size_t                order,
                                          std::vector<elem_t> const& table,
                                          elem_t                     id) {
      std::vector<elem_t> gens;
      std::vector<bool>   in(order, false);
      in[id]             = true;
      std::size_t covered = 1;
      std::vector<elem_t> members{id};
      for (elem_t x = 0; x < order && covered < order; ++x) {
        if (in[x]) {
          continue;
        }
        gens.push_back(x);
        // Re-close: multiply everything we have by all generators.
        std::deque<elem_t> queue(members.begin(), members.end());
        while (!queue.empty()) {
          elem_t y = queue.front();
          queue.pop_front();
          for (elem_t g : gens) {
            elem_t z = table[y * order + g];
            if (!in[z]) {
              in[z] = true;
              ++covered;
              members.push_back(z);
              queue.push_back(z);
            }
          }
        }
      }
      return gens;
    }
  }  // namespace

  FiniteGroup::FiniteGroup(std::size_t              order,
                           std::vector<elem_t>      table,
                           std::vector<std::string> labels,
                           std::string              description)
      : _order(order),
        _table(std::move(table)),
        _id(0),
        _inv(order, 0),
        _labels(std::move(labels)),
        _description(std::move(description)) {
    for (elem_t e = 0; e < order; ++e) {
      bool ok = true;
      for (elem_t x = 0; x < order && ok; ++x) {
        ok = _table[e * order + x] == x && _table[x * order + e] == x;
      }
      if (ok) {
        _id = e;
        break;
      }
    }
    for (elem_t x = 0; x < order; ++x) {
      for (elem_t y = 0; y < order; ++y) {
        if (_table[x * order + y] == _id) {
          _inv[x] = y;
          break;
        }
      }
    }
    _generators = greedy_generators(_order, _table, _id);
  }

  FiniteGroup FiniteGroup::from_table(std::vector<std::vector<elem_t>> const& table,
                                      std::vector<std::string>                labels,
                                      std::size_t max_order) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw Error(ErrorCode::BadGroupSpec, "empty multiplication table");
    }
    if (n > max_order) {
      throw Error(ErrorCode::OrderTooLarge,
                  "order " + std::to_string(n) + " exceeds the cap "
                      + std::to_string(max_order));
    }
    if (!labels.empty() && labels.size() != n) {
      throw Error(ErrorCode::BadGroupSpec, "label count does not match the order");
    }
    std::vector<elem_t> flat(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw Error(ErrorCode::NotPermutationRow,
                    "row " + std::to_string(i) + " has length "
                        + std::to_string(table[i].size()));
      }
      std::vector<bool> seen(n, false);
      for (std::size_t j = 0; j < n; ++j) {
        elem_t v = table[i][j];
        if (v >= n || seen[v]) {
          throw Error(ErrorCode::NotPermutationRow,
                      "row " + std::to_string(i) + " is not a permutation (column "
                          + std::to_string(j) + ")");
        }
        seen[v]          = true;
        flat[i * n + j] = v;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<bool> seen(n, false);
      for (std::size_t i = 0; i < n; ++i) {
        elem_t v = flat[i * n + j];
        if (seen[v]) {
          throw Error(ErrorCode::NotPermutationRow,
                      "column " + std::to_string(j) + " is not a permutation (row "
                          + std::to_string(i) + ")");
        }
        seen[v] = true;
      }
    }
    std::optional<elem_t> id;
    for (elem_t e = 0; e < n && !id; ++e) {
      bool ok = true;
      for (elem_t x = 0; x < n && ok; ++x) {
        ok = flat[e * n + x] == x && flat[x * n + e] == x;
      }
      if (ok) {
        id = e;
      }
    }
    if (!id) {
      throw Error(ErrorCode::NoIdentity, "no two-sided identity in the table");
    }
    for (elem_t x = 0; x < n; ++x) {
      for (elem_t y = 0; y < n; ++y) {
        elem_t xy = flat[x * n + y];
        for (elem_t z = 0; z < n; ++z) {
          if (flat[xy * n + z] != flat[x * n + flat[y * n + z]]) {
            throw Error(ErrorCode::NonAssociative,
                        "(" + std::to_string(x) + "*" + std::to_string(y) + ")*"
                            + std::to_string(z) + " != " + std::to_string(x) + "*("
                            + std::to_string(y) + "*" + std::to_string(z) + ")");
          }
        }
      }
    }
    return FiniteGroup(n, std::move(flat), std::move(labels), "table");
  }

  FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorCode::BadGroupSpec, "cyclic group of order 0");
    }
    std::vector<elem_t> t(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i * n + j] = static_cast<elem_t>((i + j) % n);
      }
    }
    return FiniteGroup(n, std::move(t), {}, "cyclic " + std::to_string(n));
  }

  FiniteGroup FiniteGroup::dihedral(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorCode::BadGroupSpec, "dihedral group of degree 0");
    }
    std::size_t const   order = 2 * n;
    std::vector<elem_t> t(order * order);
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t y = 0; y < order; ++y) {
        std::size_t f1 = x / n, i1 = x % n, f2 = y / n, i2 = y % n;
        // s^f1 r^i1 s^f2 r^i2 = s^(f1+f2) r^((-1)^f2 i1 + i2)
        std::size_t r = f2 == 0 ? (i1 + i2) % n : (n - i1 + i2) % n;
        t[x * order + y] = static_cast<elem_t>(((f1 + f2) % 2) * n + r);
      }
    }
    return FiniteGroup(order, std::move(t), {}, "dihedral " + std::to_string(n));
  }

  FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    if (n == 0 || n > 7) {
      throw Error(ErrorCode::BadGroupSpec,
                  "symmetric degree must be in [1, 7], got " + std::to_string(n));
    }
    std::vector<std::vector<std::uint8_t>> perms;
    std::vector<std::uint8_t>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::size_t const order = perms.size();
    auto              rank  = [&](std::vector<std::uint8_t> const& q) {
      return static_cast<elem_t>(
          std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<elem_t>       t(order * order);
    std::vector<std::uint8_t> c(n);
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t y = 0; y < order; ++y) {
        for (std::size_t i = 0; i < n; ++i) {
          c[i] = perms[y][perms[x][i]];
        }
        t[x * order + y] = rank(c);
      }
    }
    return FiniteGroup(order, std::move(t), {}, "symmetric " + std::to_string(n));
  }

  FiniteGroup FiniteGroup::dicyclic(std::size_t n) {
    if (n < 1) {
      throw Error(ErrorCode::BadGroupSpec, "dicyclic parameter must be positive");
    }
    std::size_t const   m = 2 * n, order = 4 * n;
    std::vector<elem_t> t(order * order);
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t y = 0; y < order; ++y) {
        std::size_t j = x / m, i = x % m, l = y / m, k = y % m;
        std::size_t a, xs;
        if (j == 0) {
          a  = (i + k) % m;
          xs = l;
        } else if (l == 0) {
          a  = (i + m - k) % m;
          xs = 1;
        } else {
          a  = (i + m - k + n) % m;
          xs = 0;
        }
        t[x * order + y] = static_cast<elem_t>(xs * m + a);
      }
    }
    return FiniteGroup(order, std::move(t), {}, "dicyclic " + std::to_string(n));
  }

  FiniteGroup FiniteGroup::special_linear_2(std::size_t p) {
    if (p < 2 || p > 7) {
      throw Error(ErrorCode::BadGroupSpec,
                  "special_linear_2 supports primes 2, 3, 5, 7");
    }
    for (std::size_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        throw Error(ErrorCode::BadGroupSpec, std::to_string(p) + " is not prime");
      }
    }
    using Mat = std::array<std::size_t, 4>;
    std::vector<Mat> mats{{1, 0, 0, 1}};
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = 0; b < p; ++b) {
        for (std::size_t c = 0; c < p; ++c) {
          for (std::size_t d = 0; d < p; ++d) {
            Mat m{a, b, c, d};
            if ((a * d + p * p - b * c) % p == 1 && m != mats[0]) {
              mats.push_back(m);
            }
          }
        }
      }
    }
    std::size_t const   order = mats.size();
    std::vector<elem_t> t(order * order);
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t y = 0; y < order; ++y) {
        Mat const& u = mats[x];
        Mat const& v = mats[y];
        Mat        w{(u[0] * v[0] + u[1] * v[2]) % p,
                     (u[0] * v[1] + u[1] * v[3]) % p,
                     (u[2] * v[0] + u[3] * v[2]) % p,
                     (u[2] * v[1] + u[3] * v[3]) % p};
        t[x * order + y]
            = static_cast<elem_t>(std::find(mats.begin(), mats.end(), w) - mats.begin());
      }
    }
    return FiniteGroup(
        order, std::move(t), {}, "special_linear_2 " + std::to_string(p));
  }

  FiniteGroup FiniteGroup::direct_product(FiniteGroup const& a, FiniteGroup const& b) {
    std::size_t const   na = a.order(), nb = b.order(), order = na * nb;
    std::vector<elem_t> t(order * order);
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t y = 0; y < order; ++y) {
        elem_t u = a.mul(static_cast<elem_t>(x / nb), static_cast<elem_t>(y / nb));
        elem_t v = b.mul(static_cast<elem_t>(x % nb), static_cast<elem_t>(y % nb));
        t[x * order + y] = static_cast<elem_t>(u * nb + v);
      }
    }
    return FiniteGroup(order,
                       std::move(t),
                       {},
                       "product(" + a.description() + ", " + b.description() + ")");
  }

  elem_t FiniteGroup::power(elem_t x, long long k) const {
    if (k < 0) {
      x = inverse(x);
      k = -k;
    }
    elem_t r = _id;
    for (long long i = 0; i < k; ++i) {
      r = mul(r, x);
    }
    return r;
  }

  std::size_t FiniteGroup::element_order(elem_t x) const {
    std::size_t n = 1;
    for (elem_t y = x; y != _id; y = mul(y, x)) {
      ++n;
    }
    return n;
  }

  std::string FiniteGroup::label(elem_t x) const {
    if (!_labels.empty()) {
      return _labels[x];
    }
    return "g" + std::to_string(x);
  }

  std::vector<std::vector<elem_t>> FiniteGroup::table() const {
    std::vector<std::vector<elem_t>> out(_order, std::vector<elem_t>(_order));
    for (std::size_t i = 0; i < _order; ++i) {
      for (std::size_t j = 0; j < _order; ++j) {
        out[i][j] = _table[i * _order + j];
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  bool Subgroup::contains(elem_t x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }

  Subgroup subgroup_closure(FiniteGroup const& g, std::span<elem_t const> seeds) {
    std::vector<bool>   in(g.order(), false);
    std::vector<elem_t> members{g.identity()};
    in[g.identity()] = true;
    std::deque<elem_t> queue{g.identity()};
    while (!queue.empty()) {
      elem_t x = queue.front();
      queue.pop_front();
      for (elem_t s : seeds) {
        elem_t y = g.mul(x, s);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
          queue.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return Subgroup{std::move(members)};
  }

  bool is_subgroup(FiniteGroup const& g, Subgroup const& s) {
    if (!s.contains(g.identity())) {
      return false;
    }
    for (elem_t x : s.elements) {
      if (x >= g.order() || !s.contains(g.inverse(x))) {
        return false;
      }
      for (elem_t y : s.elements) {
        if (!s.contains(g.mul(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_subset(Subgroup const& s, Subgroup const& t) {
    return std::includes(
        t.elements.begin(), t.elements.end(), s.elements.begin(), s.elements.end());
  }

  Subgroup conjugate_subgroup(FiniteGroup const& g, Subgroup const& s, elem_t h) {
    Subgroup out;
    out.elements.reserve(s.size());
    for (elem_t x : s.elements) {
      out.elements.push_back(g.conjugate(x, h));
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
  }

  std::optional<elem_t> is_conjugate_into(FiniteGroup const& g,
                                          Subgroup const&    s,
                                          Subgroup const&    t) {
    if (s.size() > t.size() || t.size() % s.size() != 0) {
      return std::nullopt;
    }
    for (elem_t h = 0; h < g.order(); ++h) {
      bool ok = std::all_of(s.elements.begin(), s.elements.end(), [&](elem_t x) {
        return t.contains(g.conjugate(x, h));
      });
      if (ok) {
        return h;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  bool is_homomorphism(FiniteGroup const& source,
                       FiniteGroup const& target,
                       GroupHom const&    hom) {
    if (hom.images.size() != source.order()) {
      return false;
    }
    for (elem_t img : hom.images) {
      if (img >= target.order()) {
        return false;
      }
    }
    for (elem_t x = 0; x < source.order(); ++x) {
      for (elem_t y = 0; y < source.order(); ++y) {
        if (hom(source.mul(x, y)) != target.mul(hom(x), hom(y))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_injective(GroupHom const& hom, std::size_t target_order) {
    std::vector<bool> seen(target_order, false);
    for (elem_t img : hom.images) {
      if (img >= target_order || seen[img]) {
        return false;
      }
      seen[img] = true;
    }
    return true;
  }

  bool is_surjective(GroupHom const& hom, std::size_t target_order) {
    std::vector<bool> seen(target_order, false);
    std::size_t       n = 0;
    for (elem_t img : hom.images) {
      if (img < target_order && !seen[img]) {
        seen[img] = true;
        ++n;
      }
    }
    return n == target_order;
  }

  Subgroup image(GroupHom const& hom) {
    Subgroup out{hom.images};
    std::sort(out.elements.begin(), out.elements.end());
    out.elements.erase(std::unique(out.elements.begin(), out.elements.end()),
                       out.elements.end());
    return out;
  }

  std::optional<GroupHom> extend_to_hom(FiniteGroup const&      source,
                                        FiniteGroup const&      target,
                                        std::span<elem_t const> generator_images) {
    auto const& gens = source.generators();
    std::vector<elem_t> map(source.order(), unset);
    map[source.identity()] = target.identity();
    std::deque<elem_t> queue{source.identity()};
    while (!queue.empty()) {
      elem_t x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        elem_t y   = source.mul(x, gens[i]);
        elem_t img = target.mul(map[x], generator_images[i]);
        if (map[y] == unset) {
          map[y] = img;
          queue.push_back(y);
        } else if (map[y] != img) {
          return std::nullopt;
        }
      }
    }
    return GroupHom{std::move(map)};
  }

  std::vector<GroupHom> enumerate_homs(FiniteGroup const& source,
                                       FiniteGroup const& target) {
    auto const& gens = source.generators();
    // Candidate images for each generator: elements whose order divides.
    std::vector<std::vector<elem_t>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::size_t n = source.element_order(gens[i]);
      for (elem_t y = 0; y < target.order(); ++y) {
        if (n % target.element_order(y) == 0) {
          candidates[i].push_back(y);
        }
      }
    }
    std::vector<GroupHom> out;
    std::vector<elem_t>   choice(gens.size());
    std::vector<std::size_t> pos(gens.size(), 0);
    if (gens.empty()) {
      out.push_back(GroupHom{std::vector<elem_t>(source.order(), target.identity())});
      return out;
    }
    // Odometer over candidate tuples, lexicographic in generator order.
    while (true) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        choice[i] = candidates[i][pos[i]];
      }
      if (auto h = extend_to_hom(source, target, choice)) {
        out.push_back(std::move(*h));
      }
      std::size_t i = gens.size();
      while (i > 0) {
        --i;
        if (++pos[i] < candidates[i].size()) {
          break;
        }
        pos[i] = 0;
        if (i == 0) {
          return out;
        }
      }
    }
  }

  std::vector<GroupHom> enumerate_embeddings(FiniteGroup const& source,
                                             FiniteGroup const& target) {
    std::vector<GroupHom> out;
    if (source.order() > target.order() || target.order() % source.order() != 0) {
      return out;
    }
    for (auto& h : enumerate_homs(source, target)) {
      if (is_injective(h, target.order())) {
        out.push_back(std::move(h));
      }
    }
    return out;
  }

}  // namespace gogkit
