#include "doctest.h"

#include "gogkit/error.hpp"
#include "gogkit/io.hpp"
#include "gogkit/quotients.hpp"

using namespace gogkit;

namespace {
  struct Fixture {
    GraphOfGroups                      g;
    std::map<std::string, std::string> aliases;
    explicit Fixture(std::string const& name)
        : g(load_gog(name)), aliases(aliases_from_json(load_json(name))) {}
    NormalForm operator()(std::string const& text) const {
      return g.reduce(read_word(g, text, aliases));
    }
    RingElem e(std::string const& text) const {
      return RingElem::basis((*this)(text), 5);
    }
  };

  ErrorCode code_of(std::function<void()> const& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error");
    return ErrorCode::BadDocument;
  }
}  // namespace

TEST_CASE("separating quotients") {
  Fixture a("FIX-A");
  CHECK(code_of([&] { separate(a.g, {a.g.identity()}); }) == ErrorCode::BadGoal);
  auto q = separate(a.g, {a("a")});
  CHECK(q.target.order() == 12);
  CHECK(q.apply(a("a")) == 3);
  CHECK(q.apply(a("b")) == 2);
  CHECK(check_quotient(q) == "");
  // Independent check: a^2 and b^3 agree in the target.
  CHECK(q.target.power(3, 2) == q.target.power(2, 3));

  auto b  = Fixture("FIX-B");
  auto qb = separate(b.g, {b("t * b * t^-1 * b^-1")});
  CHECK(check_quotient(qb) == "");
  CHECK(qb.apply(b("t * b * t^-1 * b^-1")) != qb.target.identity());

  auto v = separate_from_vertex_group(a.g, 0, {a("b")});
  auto image_of_v = image(v.vertex_maps[0]);
  CHECK_FALSE(image_of_v.contains(v.apply(a("b"))));

  SearchOptions tiny;
  tiny.targets = {FiniteGroup::cyclic(2)};
  CHECK(code_of([&] { separate(a.g, {a("b^2")}, tiny); }) == ErrorCode::Exhausted);
}

TEST_CASE("embedding and refining") {
  Fixture a("FIX-A");
  auto    q = embed(a.g, 0, Subgroup{{0, 1, 2, 3}});
  CHECK(is_injective(q.vertex_maps[0], q.target.order()));
  CHECK(check_quotient(q) == "");

  Fixture c("FIX-C");
  auto    sub   = make_subgraph(c.g, {"left", "mid"}, {"e1"});
  auto    piece = extract_subgraph(c.g, sub);
  CHECK(piece.graph().num_vertices() == 2);
  auto given = embed(piece, 0, Subgroup{{0, 1, 2, 3}});
  auto r     = refine(c.g, sub, given);
  CHECK(check_quotient(r) == "");
  CHECK(is_injective(r.vertex_maps[c.g.graph().vertex_index("left")], r.target.order()));
}

TEST_CASE("pushing ring elements") {
  Fixture a("FIX-A");
  auto    q = separate(a.g, {a("a")});
  CHECK(push_to_quotient(RingElem(a.g, 5), q).is_zero());
  auto pushed = push_to_quotient(a.e("b") - a.e("1"), q);
  CHECK(pushed.terms == std::map<elem_t, coeff_t>{{0, 4}, {2, 1}});
  CHECK(push_to_quotient(a.e("b") - a.e("b"), q).is_zero());
  CHECK(act_right(pushed, q, 2).terms == std::map<elem_t, coeff_t>{{2, 4}, {4, 1}});
}

TEST_CASE("coset complement functional") {
  Fixture a("FIX-A");
  auto    q = separate(a.g, {a("a")});
  auto    d = image(q.vertex_maps[0]);
  CHECK(coset_complement_functional(q, d, QuotientRingElem{5, {}}) == 0);
  CHECK(coset_complement_functional(q, d, push_to_quotient(a.e("a") + a.e("a^2"), q)) == 0);
  CHECK(coset_complement_functional(q, d, push_to_quotient(a.e("b"), q)) == 1);
}

TEST_CASE("nonkernel certificates") {
  Fixture a("FIX-A");
  auto    f = dunwoody_derivation(a.g, 0, 1, 5);
  CHECK(code_of([&] { certify_nonkernel(f, a("b^3")); }) == ErrorCode::Exhausted);
  auto cert = certify_nonkernel(f, a("b"));
  CHECK(check_certificate(f, a("b"), cert));
  CHECK_FALSE(cert.pushed.is_zero());

  Fixture b("FIX-B");
  auto    tw = accessibility_derivation(b.g, 0, 5, FreeLetterMode::twisted);
  auto    ct = certify_nonkernel(tw, b("t"));
  CHECK(check_certificate(tw, b("t"), ct));
  CHECK(ct.quotient.apply(b("t")) != ct.quotient.target.identity());
}
