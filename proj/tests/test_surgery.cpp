#include "doctest.h"

#include "gogkit/error.hpp"
#include "gogkit/io.hpp"
#include "gogkit/surgery.hpp"

using namespace gogkit;

namespace {
  CompositeGog composite(std::string const& name) {
    auto doc = load_json(name);
    return is_composite_document(doc) ? composite_from_json(doc)
                                      : CompositeGog::from_gog(gog_from_json(doc));
  }

  ErrorCode code_of(std::function<void()> const& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error");
    return ErrorCode::BadDocument;
  }

  // Path of three C2 vertices joined by isomorphisms.
  CompositeGog chain() {
    return CompositeGog::from_gog(gog_from_json(json::parse(R"({
      "groups": {"C2": {"cyclic": 2}},
      "graph": {
        "vertices": [{"id": "p", "group": "C2"}, {"id": "q", "group": "C2"}, {"id": "r", "group": "C2"}],
        "edges": [
          {"id": "pq", "from": "p", "to": "q", "group": "C2", "d0_images": [0, 1], "d1_images": [0, 1]},
          {"id": "qr", "from": "q", "to": "r", "group": "C2", "d0_images": [0, 1], "d1_images": [0, 1]}
        ]
      }})")));
  }
}  // namespace

TEST_CASE("text words") {
  auto w = parse_text_word("a * t(e)^-1 * b");
  CHECK(w == TextWord{{"a", 1}, {"t(e)", -1}, {"b", 1}});
  CHECK(format_text_word(inverse(w)) == "b^-1 * t(e) * a^-1");
  CHECK(parse_text_word("1").empty());
}

TEST_CASE("composite word problem matches the native one") {
  auto a  = load_gog("FIX-A");
  auto ca = CompositeGog::from_gog(a);
  for (auto const& r : ca.relators()) {
    CHECK(ca.is_trivial(r));
  }
  CHECK(ca.is_trivial(parse_text_word("v:g2 * w:g3")));
  CHECK_FALSE(ca.is_trivial(parse_text_word("v:g1 * w:g1")));
  for (auto const& x : a.ball(3)) {
    auto w = parse_text_word(x.text());
    CHECK(ca.is_trivial(w) == x.is_identity());
  }
  CHECK_THROWS_AS((void)ca.is_trivial(parse_text_word("zz")), Error);
}

TEST_CASE("reversing edges") {
  for (auto name : {"FIX-A", "FIX-B", "FIX-C", "FIX-D"}) {
    auto g     = composite(name);
    auto once  = reverse_edge(g, 0);
    CHECK(validate_witness(once.witness).ok);
    auto twice = reverse_edge(once.output, 0);
    auto both  = compose(once.witness, twice.witness);
    CHECK(validate_witness(both).ok);
    for (auto const& gen : g.generators()) {
      CHECK(both.psi.at(gen) == TextWord{{gen, 1}});
    }
    auto const& e0 = g.edges()[0];
    auto const& r0 = once.output.edges()[0];
    CHECK(r0.d0 == e0.d1);
    CHECK(r0.d1 == e0.d0);
  }
}

TEST_CASE("collapsing tree edges") {
  auto c = composite("FIX-C");
  auto r = collapse_tree_edge(c, c.graph().edge_index("e1"));
  CHECK(r.output.graph().num_vertices() == 2);
  CHECK(validate_witness(r.witness).ok);

  CHECK(code_of([] { collapse_tree_edge(composite("FIX-A"), 0); }) == ErrorCode::NotCollapsible);
  CHECK(code_of([] { collapse_tree_edge(composite("FIX-B"), 0); }) == ErrorCode::NotCollapsible);

  auto g      = chain();
  auto first  = collapse_tree_edge(g, 0);
  auto second = collapse_tree_edge(first.output, 0);
  CHECK(second.output.graph().num_vertices() == 1);
  CHECK(validate_witness(compose(first.witness, second.witness)).ok);
}

TEST_CASE("expanding a nested vertex") {
  auto demo = composite("nested-demo");
  auto w    = demo.graph().vertex_index("w");
  auto r    = expand_vertex(demo, w);
  CHECK(r.output.is_flat());
  CHECK(r.output.graph().num_vertices() == 4);
  CHECK(validate_witness(r.witness).ok);
  auto flat = r.output.flatten();
  for (edge_t e = 0; e < flat.graph().num_edges(); ++e) {
    if (flat.graph().edge(e).id == "w/e") {
      CHECK(flat.edge_group(e).order() == 1);
    }
  }

  auto const& nested = demo.vertices()[w].group;
  auto        f      = demo.graph().edge_index("f");
  std::map<edge_t, Attachment> wrong{{f, {nested.graph().vertex_index("y"), nested.identity()}}};
  CHECK(code_of([&] { expand_vertex(demo, w, wrong); }) == ErrorCode::BadAttachment);
  CHECK(code_of([&] { expand_vertex(demo, demo.graph().vertex_index("a")); })
        == ErrorCode::PreconditionFailed);

  // A one-vertex nested graph expands back to the plain graph.
  auto a    = load_gog("FIX-A");
  auto base = CompositeGog::from_gog(a);
  auto vs   = base.vertices();
  auto doc  = json::parse(R"({"groups": {"C4": {"cyclic": 4}},
      "graph": {"vertices": [{"id": "z", "group": "C4"}], "edges": []}})");
  vs[0]     = CompositeVertex::nest("v", gog_from_json(doc));
  auto e    = base.edges()[0];
  e.d0_images = {vs[0].group.identity(), vs[0].group.element(Syllable::vertex(0, 2))};
  CompositeGog wrapped(vs, {e}, {0}, 0);
  auto         back = expand_vertex(wrapped, 0);
  CHECK(back.output.graph().num_vertices() == 2);
  CHECK(validate_witness(back.witness).ok);
}

TEST_CASE("attaching an amalgam vertex") {
  auto a   = composite("FIX-A");
  auto chi = Subgroup{{0, 2}};
  auto t   = find_delta_conjugators(a, 0, chi);
  REQUIRE(t.delta.size() == 1);
  CHECK(t.delta.begin()->second == 0);
  CHECK(code_of([&] { find_delta_conjugators(a, 0, Subgroup{{0}}, 5); })
        == ErrorCode::NotFoundWithinRadius);

  auto r = attach_amalgam_vertex(a, 0, t);
  CHECK(r.output.graph().num_vertices() == 3);
  CHECK(validate_witness(r.witness).ok);
  for (auto const& gen : a.generators()) {
    auto back = substitute(r.witness.psi.at(gen), r.witness.phi);
    CHECK(a.is_trivial(concat({back, TextWord{{gen, -1}}})));
  }

  auto bad     = t;
  bad.delta[0] = 17;
  CHECK(code_of([&] { attach_amalgam_vertex(a, 0, bad); }) == ErrorCode::TableInvalid);
  auto missing = t;
  missing.delta.clear();
  CHECK(code_of([&] { attach_amalgam_vertex(a, 0, missing); }) == ErrorCode::TableInvalid);
  CHECK(code_of([&] { attach_amalgam_vertex(a, 1, find_delta_conjugators(a, 1, Subgroup{{0, 3}})); })
        == ErrorCode::PreconditionFailed);

  // Round trip: collapse the old edge into C6, then the split recovers FIX-A.
  auto out   = r.output;
  auto old_e = out.graph().edge_index("e");
  auto col   = collapse_tree_edge(out, old_e);
  CHECK(col.output.graph().num_vertices() == 2);
  CHECK(validate_witness(compose(r.witness, col.witness)).ok);
}

TEST_CASE("amalgam decomposition") {
  auto c     = load_gog("FIX-C");
  auto split = collapse_to_amalgam(c, make_subgraph(c, {"right"}, {}));
  CHECK(c.graph().edge(split.edge).id == "e2");
  CHECK(split.chi.size() == 2);
  for (auto const& x : c.ball(3)) {
    bool both = split.in_delta(x) && split.in_lambda(x);
    bool in_chi = false;
    for (auto const& k : split.chi) {
      in_chi = in_chi || equal(k, x);
    }
    CHECK(both == in_chi);
  }
  auto two = collapse_to_amalgam(c, make_subgraph(c, {"mid", "right"}, {"e2"}));
  CHECK(c.graph().edge(two.edge).id == "e1");

  auto b = load_gog("FIX-B");
  CHECK(code_of([&] { collapse_to_amalgam(b, make_subgraph(b, {"v"}, {})); }) == ErrorCode::WrongShape);
}
