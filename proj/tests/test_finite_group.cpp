#include <algorithm>
#include <set>

#include "doctest.h"

#include "gogkit/error.hpp"
#include "gogkit/finite_group.hpp"

using namespace gogkit;

namespace {
  // Closure by repeated multiplication until nothing new appears.
  std::set<elem_t> naive_closure(FiniteGroup const& g, std::vector<elem_t> seeds) {
    std::set<elem_t> s{g.identity()};
    s.insert(seeds.begin(), seeds.end());
    bool grew = true;
    while (grew) {
      grew = false;
      for (elem_t x : std::vector<elem_t>(s.begin(), s.end())) {
        for (elem_t y : std::vector<elem_t>(s.begin(), s.end())) {
          grew |= s.insert(g.mul(x, y)).second;
        }
      }
    }
    return s;
  }

  // Every map of the whole source set, checked pointwise.
  std::size_t naive_embedding_count(FiniteGroup const& a, FiniteGroup const& b) {
    std::size_t         count = 0;
    std::vector<elem_t> images(a.order(), 0);
    while (true) {
      bool hom = true;
      for (elem_t x = 0; x < a.order() && hom; ++x) {
        for (elem_t y = 0; y < a.order() && hom; ++y) {
          hom = images[a.mul(x, y)] == b.mul(images[x], images[y]);
        }
      }
      std::set<elem_t> distinct(images.begin(), images.end());
      count += hom && distinct.size() == a.order();
      std::size_t i = 0;
      while (i < images.size() && ++images[i] == b.order()) {
        images[i++] = 0;
      }
      if (i == images.size()) {
        return count;
      }
    }
  }
}  // namespace

TEST_CASE("shorthand groups") {
  CHECK(FiniteGroup::cyclic(1).order() == 1);
  auto c4 = FiniteGroup::cyclic(4);
  CHECK(c4.order() == 4);
  CHECK(c4.element_order(1) == 4);
  CHECK(c4.mul(1, c4.power(1, 3)) == c4.identity());
  auto c2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
  CHECK(c2 == FiniteGroup::cyclic(2));
  CHECK(FiniteGroup::dihedral(4).order() == 8);
  CHECK(FiniteGroup::symmetric(4).order() == 24);
  CHECK(FiniteGroup::direct_product(c4, c2).order() == 8);
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 0}}), Error);
  // Latin square without associativity: a loop of order 5.
  std::vector<std::vector<elem_t>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(loop), Error);
}

TEST_CASE("subgroup closure agrees with naive closure") {
  auto c4 = FiniteGroup::cyclic(4);
  auto c6 = FiniteGroup::cyclic(6);
  std::vector<elem_t> a2{2}, b2{2}, none;
  CHECK(subgroup_closure(c4, a2).elements == std::vector<elem_t>{0, 2});
  CHECK(subgroup_closure(c6, b2).elements == std::vector<elem_t>{0, 2, 4});
  CHECK(subgroup_closure(c6, none).elements == std::vector<elem_t>{0});
  auto s4 = FiniteGroup::symmetric(4);
  for (elem_t x = 0; x < s4.order(); x += 5) {
    for (elem_t y = 1; y < s4.order(); y += 7) {
      std::vector<elem_t> seeds{x, y};
      auto                want = naive_closure(s4, seeds);
      auto                got  = subgroup_closure(s4, seeds).elements;
      CHECK(std::vector<elem_t>(want.begin(), want.end()) == got);
    }
  }
}

TEST_CASE("embeddings agree with brute force") {
  auto c2 = FiniteGroup::cyclic(2);
  auto c3 = FiniteGroup::cyclic(3);
  auto c4 = FiniteGroup::cyclic(4);
  auto c6 = FiniteGroup::cyclic(6);
  auto e24 = enumerate_embeddings(c2, c4);
  REQUIRE(e24.size() == 1);
  CHECK(e24[0](1) == 2);
  auto e26 = enumerate_embeddings(c2, c6);
  REQUIRE(e26.size() == 1);
  CHECK(e26[0](1) == 3);
  CHECK(enumerate_embeddings(c3, c4).empty());
  auto d3 = FiniteGroup::dihedral(3);
  auto d4 = FiniteGroup::dihedral(4);
  CHECK(enumerate_embeddings(c2, d4).size() == naive_embedding_count(c2, d4));
  CHECK(enumerate_embeddings(c4, d4).size() == naive_embedding_count(c4, d4));
  CHECK(enumerate_embeddings(d3, FiniteGroup::symmetric(3)).size()
        == naive_embedding_count(d3, FiniteGroup::symmetric(3)));
  for (auto const& h : enumerate_homs(c6, d3)) {
    CHECK(is_homomorphism(c6, d3, h));
  }
}

TEST_CASE("conjugating subgroups") {
  auto c4 = FiniteGroup::cyclic(4);
  CHECK(is_conjugate_into(c4, Subgroup{{0, 2}}, Subgroup{{0, 2}}) == c4.identity());

  auto d4 = FiniteGroup::dihedral(4);
  // Two reflections in distinct classes are not conjugate; one in the same
  // class is, by some element.
  std::vector<elem_t> reflections;
  for (elem_t x = 0; x < d4.order(); ++x) {
    if (d4.element_order(x) == 2) {
      bool central = true;
      for (elem_t y = 0; y < d4.order(); ++y) {
        central = central && d4.mul(x, y) == d4.mul(y, x);
      }
      if (!central) {
        reflections.push_back(x);
      }
    }
  }
  REQUIRE(reflections.size() == 4);
  for (elem_t r : reflections) {
    for (elem_t s : reflections) {
      Subgroup S{{0, r}}, T{{0, s}};
      std::sort(S.elements.begin(), S.elements.end());
      std::sort(T.elements.begin(), T.elements.end());
      bool brute = false;
      for (elem_t h = 0; h < d4.order(); ++h) {
        brute = brute || d4.conjugate(r, h) == s;
      }
      auto h = is_conjugate_into(d4, S, T);
      CHECK(h.has_value() == brute);
      if (h) {
        CHECK(d4.conjugate(r, *h) == s);
      }
    }
  }

  auto c6 = FiniteGroup::cyclic(6);
  CHECK_FALSE(is_conjugate_into(c6, Subgroup{{0, 2, 4}}, Subgroup{{0, 3}}).has_value());
}
