#include "doctest.h"

#include "gogkit/error.hpp"
#include "gogkit/io.hpp"

using namespace gogkit;

TEST_CASE("group specs") {
  CHECK(group_from_json(json{{"cyclic", 6}}).order() == 6);
  CHECK(group_from_json(json{{"product", {json{{"cyclic", 2}}, json{{"dihedral", 3}}}}}).order() == 12);
  CHECK(group_from_json(json::parse(R"({"table": [[0, 1], [1, 0]]})")) == FiniteGroup::cyclic(2));
  CHECK_THROWS_AS(group_from_json(json{{"cyclic", "six"}}), Error);
  for (auto const& g : {FiniteGroup::cyclic(5), FiniteGroup::dihedral(4), FiniteGroup::symmetric(3)}) {
    CHECK(group_from_json(group_to_json(g)) == g);
  }
}

TEST_CASE("graph documents round trip") {
  for (auto name : {"FIX-A", "FIX-B", "FIX-C", "FIX-D"}) {
    auto g    = load_gog(name);
    auto back = gog_from_json(gog_to_json(g, name));
    CHECK(back.graph().vertex_ids() == g.graph().vertex_ids());
    CHECK(back.tree().edges() == g.tree().edges());
    CHECK(back.basepoint() == g.basepoint());
    for (auto const& x : g.ball(2)) {
      CHECK(back.parse(x.text()).text() == x.text());
    }
  }
  CHECK_THROWS_AS(gog_from_json(json::parse(R"({"graph": {"vertices": [{"id": "v", "group": "nope"}], "edges": []}})")),
                  Error);
  CHECK_THROWS_AS(resolve_document("FIX-Z"), Error);
}

TEST_CASE("word text with aliases") {
  auto g       = load_gog("FIX-A");
  auto aliases = aliases_from_json(load_json("FIX-A"));
  CHECK(g.reduce(read_word(g, "a^2 * b^-3", aliases)).is_identity());
  CHECK(g.reduce(read_word(g, "a * v:g3", aliases)).is_identity());
  CHECK(g.format_word(read_word(g, "b^2", aliases)) == "w:g1 * w:g1");
  CHECK_THROWS_AS(read_word(g, "c", aliases), Error);
}

TEST_CASE("derivations and quotients round trip") {
  auto g = load_gog("FIX-A");
  auto f = accessibility_derivation(g, 0, 5);
  auto h = derivation_from_json(g, derivation_to_json(f));
  for (auto const& x : g.ball(3)) {
    CHECK(eval(h, x) == eval(f, x));
  }
  auto r = RingElem::basis(g.parse("w:g1"), 5, 3) - RingElem::basis(g.identity(), 5);
  CHECK(ring_elem_from_json(g, ring_elem_to_json(r)) == r);

  auto q    = separate(g, {g.parse("v:g1")});
  auto back = quotient_from_json(g, quotient_to_json(q));
  for (auto const& x : g.ball(3)) {
    CHECK(back.apply(x) == q.apply(x));
  }
  auto broken = quotient_to_json(q);
  broken["letter_images"]["e"] = 1;
  CHECK_THROWS_AS(quotient_from_json(g, broken), Error);
}

TEST_CASE("composite documents and transcripts") {
  auto doc = load_json("nested-demo");
  REQUIRE(is_composite_document(doc));
  CHECK_FALSE(is_composite_document(load_json("FIX-A")));
  auto g    = composite_from_json(doc);
  auto back = composite_from_json(composite_to_json(g, "demo"));
  CHECK(back.generators() == g.generators());

  auto r     = expand_vertex(g, g.graph().vertex_index("w"));
  auto trans = transcript_to_json("expand", doc, r);
  CHECK(trans["operation"] == "expand");
  auto w = witness_from_transcript(doc, trans);
  CHECK(validate_witness(w).ok);
  CHECK_THROWS_AS(witness_from_transcript(load_json("FIX-A"), trans), Error);
  auto tampered = trans;
  tampered["psi"][tampered["psi"].begin().key()] = "a:g1 * a:g1";
  CHECK_FALSE(validate_witness(witness_from_transcript(doc, tampered)).ok);
}
