#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "gogkit/error.hpp"
#include "gogkit/io.hpp"

using namespace gogkit;

namespace {
  struct Fixture {
    GraphOfGroups                      g;
    std::map<std::string, std::string> aliases;
    explicit Fixture(std::string const& name)
        : g(load_gog(name)), aliases(aliases_from_json(load_json(name))) {}
    Word       w(std::string const& text) const {
      return read_word(g, text, aliases);
    }
    NormalForm operator()(std::string const& text) const {
      return g.reduce(w(text));
    }
    RingElem e(std::string const& text, coeff_t c = 1) const {
      return RingElem::basis((*this)(text), 5, c);
    }
  };

  Word concat(Word x, Word const& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  }
}  // namespace

TEST_CASE("vertex derivation on the amalgam") {
  Fixture a("FIX-A");
  auto    f = dunwoody_derivation(a.g, 0, 1, 5);
  REQUIRE(f.rank() == 1);
  CHECK(is_zero(eval(f, a.g.identity())));
  CHECK(is_zero(eval(f, a("a"))));
  // (1 + c)(b - 1) with c = a^2 = b^3.
  CHECK(eval(f, a("b"))[0] == a.e("b") + a.e("b^4") - a.e("1") - a.e("b^3"));
  CHECK(eval(f, a("b"))[0].text() == "4*(1) + 4*(v:g2) + 1*(w:g1) + 1*(w:g1 * v:g2)");
  CHECK(is_zero(eval(f, a("b^3"))));
  CHECK(eval(f, a("b^2"))[0] == a.e("b^2") + a.e("b^5") - a.e("1") - a.e("b^3"));
  CHECK_THROWS_AS(dunwoody_derivation(a.g, 0, 0, 5), Error);
}

TEST_CASE("vertex derivation on the path") {
  Fixture c("FIX-C");
  auto&   graph = c.g.graph();
  auto    mid   = graph.vertex_index("mid");
  auto    right = graph.vertex_index("right");
  auto    left  = graph.vertex_index("left");
  auto    f     = dunwoody_derivation(c.g, mid, right, 5);
  for (elem_t x = 0; x < 4; ++x) {
    CHECK(is_zero(eval(f, c.g.element(Syllable::vertex(left, x)))));
  }
  CHECK(is_zero(eval(f, c.g.element(Syllable::vertex(mid, 1)))));
  // Sum over the right edge group {1, right:g2} of k (x - 1).
  for (elem_t x = 0; x < 4; ++x) {
    auto     gx = c.g.element(Syllable::vertex(right, x));
    RingElem want(c.g, 5);
    for (elem_t k : {0u, 2u}) {
      auto gk = c.g.element(Syllable::vertex(right, k));
      want += RingElem::basis(multiply(gk, gx), 5) - RingElem::basis(gk, 5);
    }
    CHECK(eval(f, gx)[0] == want);
  }
}

TEST_CASE("derivation law on random words") {
  std::mt19937_64 rng(11);
  for (auto name : {"FIX-A", "FIX-B", "FIX-C", "FIX-D"}) {
    Fixture fx(name);
    for (vertex_t v = 0; v < fx.g.graph().num_vertices(); ++v) {
      for (auto mode : {FreeLetterMode::standard, FreeLetterMode::twisted}) {
        auto f = accessibility_derivation(fx.g, v, 5, mode);
        for (int i = 0; i < 60; ++i) {
          auto x  = oracle::random_word(fx.g, rng, 6);
          auto y  = oracle::random_word(fx.g, rng, 6);
          auto fx_ = eval(f, x);
          auto fy  = eval(f, y);
          auto fxy = eval(f, concat(x, y));
          auto yv  = fx.g.reduce(y);
          for (std::size_t k = 0; k < f.rank(); ++k) {
            CHECK(fxy[k] == act_right(fx_[k], f.act(k, yv)) + fy[k]);
          }
          // Same value on the word and on its normal form.
          CHECK(fxy == eval(f, fx.g.reduce(concat(x, y))));
        }
      }
    }
  }
}

TEST_CASE("well-definedness") {
  Fixture a("FIX-A");
  CHECK(check_well_defined(Derivation(a.g, 5, {Action::standard})).ok);
  CHECK(check_well_defined(dunwoody_derivation(a.g, 0, 1, 5)).ok);

  // Naive HNN values: f(b) = 0 and f(t) = t - 1 under the standard action.
  Fixture    b("FIX-B");
  Derivation naive(b.g, 5, {Action::standard});
  naive.set_letter_value(0, {b.e("t") - b.e("1")});
  CHECK_FALSE(check_well_defined(naive).ok);
  auto residue = eval(naive, b.w("b^-3 * t^-1 * b^3 * t"))[0];
  CHECK(residue == b.e("b^3") - b.e("b^3 * t") + b.e("t") - b.e("1"));
}

TEST_CASE("gluing") {
  Fixture a("FIX-A");
  auto    f = dunwoody_derivation(a.g, 0, 1, 5);
  CHECK(glue(GluingData{f}).letter_value(0) == f.letter_value(0));
  for (vertex_t v = 0; v < 2; ++v) {
    for (elem_t x = 0; x < a.g.vertex_group(v).order(); ++x) {
      CHECK(glue(GluingData{f}).vertex_value(v, x) == f.vertex_value(v, x));
    }
  }
  for (auto const& r : gluing_residues(f)) {
    CHECK(is_zero(r.residue));
  }
  Derivation zero(a.g, 5, {Action::standard});
  CHECK(check_well_defined(glue(GluingData{zero})).ok);
  auto perturbed = f;
  perturbed.set_letter_value(0, {a.e("b")});
  CHECK_THROWS_AS(glue(GluingData{perturbed}), Error);
}

TEST_CASE("accessibility derivation") {
  Fixture a("FIX-A");
  auto    f = accessibility_derivation(a.g, 0, 5);
  REQUIRE(f.rank() == 1);
  auto d = dunwoody_derivation(a.g, 0, 1, 5);
  for (auto const& x : a.g.ball(3)) {
    CHECK(eval(f, x) == eval(d, x));
  }
  CHECK_THROWS_AS(accessibility_derivation(a.g, 0, 2), Error);

  Fixture b("FIX-B");
  auto    tw = accessibility_derivation(b.g, 0, 5, FreeLetterMode::twisted);
  REQUIRE(tw.rank() == 1);
  CHECK(is_zero(eval(tw, b("b"))));
  CHECK(eval(tw, b("t"))[0] == b.e("t") - b.e("1"));
  CHECK(is_zero(eval(tw, b.w("t^-1 * b^3 * t"))));
  // The twisted component kills every vertex group, so its kernel contains
  // commutators such as b t b^-1 t^-1 that lie outside G(v).
  CHECK(is_zero(eval(tw, b.w("b * t * b^-1 * t^-1"))));
  auto in_v = vertex_group_predicate(b.g, 0);
  CHECK(kernel_scan(tw, in_v, 4).mismatches > 0);

  auto st = accessibility_derivation(b.g, 0, 5);
  CHECK(eval(st, b("t"))[0] == -(b.e("1") + b.e("b^3")));
  CHECK_FALSE(is_zero(eval(st, b.w("b * t * b^-1 * t^-1"))));
  CHECK(kernel_scan(st, in_v, 5).mismatches == 0);
}

TEST_CASE("kernel scans") {
  Fixture a("FIX-A");
  auto    f = accessibility_derivation(a.g, 0, 5);
  auto    r = kernel_scan(f, vertex_group_predicate(a.g, 0), 0);
  CHECK(r.elements == 1);
  CHECK(r.mismatches == 0);
  CHECK(kernel_scan(f, vertex_group_predicate(a.g, 0), 6).mismatches == 0);
  CHECK(kernel_scan(f, vertex_group_predicate(a.g, 1), 3).mismatches > 0);

  Fixture c("FIX-C");
  for (auto ids : {std::vector<std::string>{"left", "mid"}, {"mid", "right"}}) {
    std::vector<std::string> edges{ids[0] == "left" ? "e1" : "e2"};
    auto sub = make_subgraph(c.g, ids, edges);
    auto h   = subgraph_derivation(c.g, sub, 5);
    CHECK(kernel_scan(h, subgraph_predicate(c.g, sub), 5).mismatches == 0);
  }
  Fixture b("FIX-B");
  auto    with_loop = make_subgraph(b.g, {"v"}, {"t"});
  auto    whole     = subgraph_derivation(b.g, with_loop, 5);
  CHECK(whole.rank() == 0);
  auto bare = subgraph_derivation(b.g, make_subgraph(b.g, {"v"}, {}), 5);
  CHECK(kernel_scan(bare, vertex_group_predicate(b.g, 0), 4).mismatches == 0);
}
