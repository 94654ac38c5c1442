#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "gogkit/error.hpp"
#include "gogkit/io.hpp"

using namespace gogkit;

TEST_CASE("validation") {
  CHECK(validate(gog_spec_from_json(load_json("FIX-A"))).ok());
  CHECK(validate(gog_spec_from_json(load_json("FIX-D"))).ok());
  auto bad = load_json("FIX-A");
  // k -> b^2 is not a homomorphism from C2: b^2 has order 3.
  bad["graph"]["edges"][0]["d1_images"] = {0, 2};
  auto report = validate(gog_spec_from_json(bad));
  CHECK_FALSE(report.ok());
  CHECK_THROWS_AS(GraphOfGroups(gog_spec_from_json(bad)), Error);
  auto noninjective = load_json("FIX-A");
  noninjective["graph"]["edges"][0]["d0_images"] = {0, 0};
  CHECK_FALSE(validate(gog_spec_from_json(noninjective)).ok());
}

TEST_CASE("presentations") {
  auto a = load_gog("FIX-A");
  auto p = a.presentation();
  std::size_t letters = 0;
  for (auto const& s : p.generators) {
    letters += s.kind == Syllable::Kind::letter;
  }
  CHECK(letters == 1);
  for (auto const& r : p.relators) {
    CHECK(a.reduce(r).is_identity());
  }
  auto trivial = gog_from_json(json::parse(R"({"groups": {"C1": {"cyclic": 1}},
      "graph": {"vertices": [{"id": "v", "group": "C1"}], "edges": []}})"));
  CHECK(trivial.presentation().relators.empty());
}

TEST_CASE("reduction examples") {
  auto a = load_gog("FIX-A");
  CHECK(a.reduce(read_word(a, "v:g2 * w:g3")).is_identity());
  CHECK(a.reduce(Word{}).is_identity());
  auto x = a.parse("v:g1 * w:g1");
  CHECK(multiply(x, invert(x)).is_identity());
  CHECK(multiply(a.parse("v:g1"), a.parse("v:g3")).is_identity());

  auto b     = load_gog("FIX-B");
  auto alias = aliases_from_json(load_json("FIX-B"));
  CHECK(equal(b.reduce(read_word(b, "t^-1 * b^3 * t", alias)), b.parse("v:g3")));
  auto tb = b.reduce(read_word(b, "t * b", alias));
  auto bt = b.reduce(read_word(b, "b * t", alias));
  CHECK_FALSE(equal(tb, bt));
  CHECK_THROWS_AS((void)a.parse("v:g9"), Error);
  CHECK_THROWS_AS((void)a.parse("q:g1"), Error);
}

TEST_CASE("normal forms agree with faithful matrix models") {
  std::mt19937_64 rng(7);
  struct Case {
    std::string       name;
    oracle::MatrixRep rep;
  };
  for (auto const& c : {Case{"FIX-A", oracle::fix_a_rep()}, Case{"FIX-D", oracle::fix_d_rep()}}) {
    auto g = load_gog(c.name);
    for (elem_t x = 0; x < g.vertex_group(0).order(); ++x) {
      REQUIRE(g.vertex_group(0).label(x) == "g" + std::to_string(x));
    }
    std::vector<std::pair<Word, NormalForm>> samples;
    for (int i = 0; i < 400; ++i) {
      auto w = oracle::random_word(g, rng, 10);
      samples.emplace_back(w, g.reduce(w));
      // The normal form is a word for the same element.
      CHECK(c.rep(w) == c.rep(samples.back().second.word()));
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
      for (std::size_t j = i + 1; j < samples.size(); j += 7) {
        bool same_matrix = c.rep(samples[i].first) == c.rep(samples[j].first);
        CHECK(equal(samples[i].second, samples[j].second) == same_matrix);
      }
    }
  }
}

TEST_CASE("word balls") {
  auto a = load_gog("FIX-A");
  CHECK(a.ball(0).size() == 1);
  // One-syllable forms: 1, a, a^2 = b^3, a^3, b, b^2. b^4 and b^5 leave the
  // coset representatives {1, b, b^2} and print with two syllables.
  auto r1 = a.ball(1);
  CHECK(r1.size() == 6);
  for (auto const& x : r1) {
    CHECK(x.syllable_count() <= 1);
  }
  auto d = load_gog("FIX-D");
  CHECK(d.ball(2).size() == 5);
  // Ball elements are distinct.
  auto r3 = a.ball(3);
  std::set<std::vector<std::int32_t>> codes;
  for (auto const& x : r3) {
    codes.insert(x.code());
  }
  CHECK(codes.size() == r3.size());
}

TEST_CASE("subgraph membership") {
  auto a = load_gog("FIX-A");
  CHECK(subgraph_group_membership(a, make_subgraph(a, {"v"}, {}), a.identity()));
  CHECK(subgraph_group_membership(a, make_subgraph(a, {"v"}, {}), a.parse("v:g1")));
  CHECK_FALSE(subgraph_group_membership(a, make_subgraph(a, {"v"}, {}), a.parse("w:g1")));

  auto c   = load_gog("FIX-C");
  auto sub = make_subgraph(c, {"left", "mid"}, {"e1"});
  CHECK(subgraph_group_membership(c, sub, c.parse("left:g1 * mid:g1")));
  CHECK_FALSE(subgraph_group_membership(c, sub, c.parse("right:g1")));
  CHECK_THROWS_AS(make_subgraph(c, {"left", "right"}, {}), Error);
}

TEST_CASE("relative malnormality") {
  auto a = load_gog("FIX-A");
  auto r = verify_relative_malnormality(a, 0, Subgroup{{0, 2}}, 4);
  CHECK(r.holds);
  CHECK(r.checked > 0);
  auto d = load_gog("FIX-D");
  CHECK(verify_relative_malnormality(d, 0, Subgroup{{0}}, 4).holds);
  // Not malnormal relative to the trivial subgroup: a^2 is central.
  CHECK_FALSE(verify_relative_malnormality(a, 0, Subgroup{{0}}, 2).holds);
}
