#include "gogkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "gogkit/derivation.hpp"
#include "gogkit/error.hpp"
#include "gogkit/io.hpp"
#include "gogkit/quotients.hpp"
#include "gogkit/structure_tree.hpp"
#include "gogkit/surgery.hpp"

namespace gogkit {

  namespace {
    using Clock = std::chrono::steady_clock;

    // Time limits in seconds, by check.
    constexpr double limit_law        = 60;
    constexpr double limit_gluing     = 10;
    constexpr double limit_kernel     = 300;
    constexpr double limit_vertex     = 10;
    constexpr double limit_tree       = 60;
    constexpr double limit_fixed      = 60;
    constexpr double limit_malnormal  = 120;
    constexpr double limit_surgery    = 60;
    constexpr double limit_separation = 300;
    constexpr double limit_functional = 60;

    constexpr coeff_t     modulus          = 5;
    constexpr std::size_t law_pairs        = 1000;
    constexpr std::size_t law_radius       = 4;
    constexpr std::size_t tree_radius      = 4;
    constexpr std::size_t action_samples   = 500;
    constexpr std::size_t stabilizer_nodes = 50;
    constexpr std::size_t conjugate_count  = 20;
    constexpr std::size_t fixed_radius     = 8;
    constexpr std::size_t malnormal_radius = 4;
    constexpr std::size_t separation_radius = 3;
    constexpr std::size_t quotient_order    = 24;
    constexpr std::size_t functional_words  = 50;
    constexpr std::size_t max_word_length   = 8;

    std::string lower(std::string s) {
      std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
      return s;
    }

    std::vector<std::string> pick(VerifyOptions const& o, std::vector<std::string> names) {
      if (!o.fixture) {
        return names;
      }
      std::vector<std::string> out;
      for (auto const& n : names) {
        if (lower(n) == lower(*o.fixture)) {
          out.push_back(n);
        }
      }
      return out;
    }

    class Run {
     public:
      Run(int id, std::string name, double limit) : _start(Clock::now()) {
        r.id    = id;
        r.name  = std::move(name);
        r.limit = limit;
      }

      void record(bool ok, std::string const& what) {
        ++r.cases;
        if (!ok) {
          if (r.failures < 3) {
            r.detail += (r.detail.empty() ? "" : "; ") + what;
          }
          ++r.failures;
        }
      }

      void note(std::string const& text) {
        notes += (notes.empty() ? "" : ", ") + text;
      }

      CheckResult done(bool nothing_selected = false) {
        r.seconds = std::chrono::duration<double>(Clock::now() - _start).count();
        r.skipped = nothing_selected;
        r.pass    = r.failures == 0 && r.seconds <= r.limit;
        if (r.seconds > r.limit) {
          r.detail += (r.detail.empty() ? "" : "; ") + std::string("over the time limit");
        }
        if (nothing_selected) {
          r.detail = "no selected fixture";
        } else if (r.failures == 0 && r.seconds <= r.limit) {
          r.detail = notes;
        }
        return r;
      }

      CheckResult        r;
      std::string        notes;

     private:
      Clock::time_point _start;
    };

    NormalForm vertex_element(GraphOfGroups const& g, vertex_t v, elem_t x) {
      return g.element(Syllable::vertex(v, x));
    }

    std::vector<Derivation> constructed_derivations(GraphOfGroups const& g) {
      std::vector<Derivation> out;
      auto const              n = g.graph().num_vertices();
      for (vertex_t v = 0; v < n; ++v) {
        for (vertex_t w = 0; w < n; ++w) {
          if (v != w) {
            out.push_back(dunwoody_derivation(g, v, w, modulus));
          }
        }
      }
      for (vertex_t v = 0; v < n; ++v) {
        for (auto mode : {FreeLetterMode::standard, FreeLetterMode::twisted}) {
          try {
            out.push_back(accessibility_derivation(g, v, modulus, mode));
          } catch (Error const& e) {
            if (e.code() != ErrorCode::BadModulus) {
              throw;
            }
          }
        }
      }
      return out;
    }
  }  // namespace

  CheckResult check_derivation_law(VerifyOptions const& o) {
    Run  run(1, "derivation law", limit_law);
    auto names = pick(o, {"FIX-A", "FIX-B", "FIX-C"});
    std::mt19937_64 rng(o.seed);
    for (auto const& name : names) {
      auto g     = load_gog(name);
      auto fs    = constructed_derivations(g);
      auto ball  = g.ball(law_radius);
      std::uniform_int_distribution<std::size_t> any(0, ball.size() - 1);
      for (std::size_t i = 0; i < law_pairs; ++i) {
        auto const& u  = ball[any(rng)];
        auto const& v  = ball[any(rng)];
        auto        uv = multiply(u, v);
        bool        ok = true;
        for (auto const& f : fs) {
          auto fuv = eval(f, uv);
          auto fu  = eval(f, u);
          auto fv  = eval(f, v);
          for (std::size_t c = 0; c < f.rank() && ok; ++c) {
            ok = fuv[c] == act_right(fu[c], f.act(c, v)) + fv[c];
          }
        }
        run.record(ok, name + ": law fails at (" + u.text() + ", " + v.text() + ")");
      }
      run.note(name + ": " + std::to_string(fs.size()) + " derivations x " + std::to_string(law_pairs)
               + " pairs");
    }
    return run.done(names.empty());
  }

  CheckResult check_gluing(VerifyOptions const& o) {
    Run  run(2, "gluing condition", limit_gluing);
    auto names = pick(o, {"FIX-A", "FIX-B", "FIX-C", "FIX-D"});
    for (auto const& name : names) {
      auto        g = load_gog(name);
      std::size_t n = 0;
      for (auto const& f : constructed_derivations(g)) {
        for (auto const& r : gluing_residues(f)) {
          ++n;
          run.record(is_zero(r.residue),
                     name + ": nonzero residue at edge " + g.graph().edge(r.edge).id);
        }
        try {
          glue(GluingData{f});
        } catch (Error const& e) {
          run.record(false, name + ": " + e.what());
        }
      }
      run.note(name + ": " + std::to_string(n) + " residues");
    }
    return run.done(names.empty());
  }

  CheckResult check_kernel(VerifyOptions const& o) {
    Run run(3, "accessibility kernel", limit_kernel);
    struct Case {
      std::string name;
      std::string vertex;
      std::size_t radius;
    };
    std::vector<Case> cases{{"FIX-A", "v", 6}, {"FIX-B", "v", 5}, {"FIX-C", "mid", 5}};
    auto              names = pick(o, {"FIX-A", "FIX-B", "FIX-C"});
    for (auto const& c : cases) {
      if (std::find(names.begin(), names.end(), c.name) == names.end()) {
        continue;
      }
      auto g  = load_gog(c.name);
      auto v  = g.graph().vertex_index(c.vertex);
      auto f  = accessibility_derivation(g, v, modulus);
      auto rp = kernel_scan(f, vertex_group_predicate(g, v), c.radius);
      for (std::size_t i = 0; i < rp.elements; ++i) {
        bool bad = i < rp.mismatches;
        run.record(!bad, c.name + ": " + (i < rp.examples.size() ? rp.examples[i] : "mismatch"));
      }
      run.note(c.name + ": " + std::to_string(rp.mismatches) + " mismatches / "
               + std::to_string(rp.elements) + " elements");
    }
    return run.done(names.empty());
  }

  CheckResult check_vertex_derivation(VerifyOptions const& o) {
    Run  run(4, "vertex derivation kernel", limit_vertex);
    auto names = pick(o, {"FIX-A", "FIX-C"});
    for (auto const& name : names) {
      auto        g = load_gog(name);
      auto const& graph = g.graph();
      for (vertex_t v = 0; v < graph.num_vertices(); ++v) {
        for (vertex_t w = 0; w < graph.num_vertices(); ++w) {
          if (v == w) {
            continue;
          }
          auto   f    = dunwoody_derivation(g, v, w, modulus);
          edge_t base = classify(graph, g.tree(), v, w).base_edge;
          std::set<std::vector<std::int32_t>> image;
          for (elem_t k = 0; k < g.edge_group(base).order(); ++k) {
            image.insert(vertex_element(g, graph.edge(base).d0, g.inclusion(base, 0)(k)).code());
          }
          for (elem_t x = 0; x < g.vertex_group(w).order(); ++x) {
            auto gamma  = vertex_element(g, w, x);
            bool zero   = is_zero(eval(f, gamma));
            bool member = image.count(gamma.code()) != 0;
            run.record(zero == member, name + ": f(" + gamma.text() + ") disagrees with membership");
          }
        }
      }
      run.note(name + ": all ordered vertex pairs");
    }
    return run.done(names.empty());
  }

  CheckResult check_tree_axioms(VerifyOptions const& o) {
    Run             run(5, "structure tree axioms", limit_tree);
    auto            names = pick(o, {"FIX-A", "FIX-B", "FIX-C", "FIX-D"});
    std::mt19937_64 rng(o.seed + 5);
    for (auto const& name : names) {
      auto     g = load_gog(name);
      TreeBall ball;
      try {
        ball = tree_ball(base_vertex(g), tree_radius);
        run.record(ball.edges.size() + 1 == ball.vertices.size(), name + ": ball is not a tree");
      } catch (std::logic_error const& e) {
        run.record(false, name + ": " + e.what());
        continue;
      }
      for (std::size_t j = 0; j < ball.edges.size(); ++j) {
        auto const& E  = ball.edges[j];
        auto const& ed = g.graph().edge(E.orbit);
        auto        t  = g.element(Syllable::letter(E.orbit, 1));
        bool        ok = true;
        for (elem_t k = 0; k < g.edge_group(E.orbit).order() && ok; ++k) {
          auto rep = multiply(E.rep, vertex_element(g, ed.d0, g.inclusion(E.orbit, 0)(k)));
          ok = tree_vertex(rep, ed.d0) == ball.vertices[ball.ends[j].first]
               && tree_vertex(multiply(rep, t), ed.d1) == ball.vertices[ball.ends[j].second];
        }
        run.record(ok, name + ": incidence fails at edge " + E.rep.text());
      }
      auto elements = g.ball(3);
      std::uniform_int_distribution<std::size_t> pick_x(0, elements.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_e(0, ball.edges.size() - 1);
      for (std::size_t i = 0; i < action_samples; ++i) {
        auto const& x  = elements[pick_x(rng)];
        auto const& E  = ball.edges[pick_e(rng)];
        auto        xE = act(x, E);
        bool ok = act(x, origin(E)) == origin(xE) && act(x, terminus(E)) == terminus(xE);
        run.record(ok, name + ": action does not commute with incidence for " + x.text());
      }
      auto small = g.ball(2);
      std::uniform_int_distribution<std::size_t> pick_v(0, ball.vertices.size() - 1);
      for (std::size_t i = 0; i < stabilizer_nodes; ++i) {
        auto const& node = ball.vertices[pick_v(rng)];
        for (auto const& x : small) {
          run.record(fixes(x, node) == (act(x, node) == node),
                     name + ": stabilizer law fails for " + x.text());
        }
      }
      run.note(name + ": " + std::to_string(ball.vertices.size()) + " vertices");
    }
    return run.done(names.empty());
  }

  CheckResult check_fixed_points(VerifyOptions const& o) {
    Run             run(6, "fixed points", limit_fixed);
    auto            names = pick(o, {"FIX-A", "FIX-C"});
    std::mt19937_64 rng(o.seed + 6);
    for (auto const& name : names) {
      auto        g     = load_gog(name);
      auto const& graph = g.graph();
      auto        conj  = g.ball(3);
      std::uniform_int_distribution<std::size_t> pick_x(0, conj.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_s(0, graph.num_vertices() + graph.num_edges() - 1);
      for (std::size_t i = 0; i < conjugate_count; ++i) {
        auto const& x = conj[pick_x(rng)];
        std::size_t s = pick_s(rng);
        // A vertex group, or an edge group seen inside its d0 vertex group.
        std::vector<NormalForm> gens;
        std::string             what;
        if (s < graph.num_vertices()) {
          for (elem_t a = 0; a < g.vertex_group(s).order(); ++a) {
            gens.push_back(vertex_element(g, s, a));
          }
          what = "G(" + graph.vertex_id(s) + ")";
        } else {
          edge_t e = s - graph.num_vertices();
          for (elem_t k = 0; k < g.edge_group(e).order(); ++k) {
            gens.push_back(vertex_element(g, graph.edge(e).d0, g.inclusion(e, 0)(k)));
          }
          what = "G(" + graph.edge(e).id + ")";
        }
        for (auto& y : gens) {
          y = multiply(multiply(x, y), invert(x));
        }
        std::string label = name + ": " + x.text() + " " + what + " " + x.text() + "^-1";
        try {
          auto node = fixed_vertex(g, gens, fixed_radius);
          auto c    = conjugate_finite_into_vertex(g, gens, fixed_radius);
          bool ok   = true;
          for (auto const& k : finite_closure(g, gens)) {
            ok = ok && act(k, node) == node
                 && vertex_preimage(multiply(invert(c.h), multiply(k, c.h)), c.v).has_value();
          }
          run.record(ok, label + ": conjugator does not verify");
        } catch (Error const& e) {
          run.record(false, label + ": " + e.what());
        }
      }
      run.note(name + ": " + std::to_string(conjugate_count) + " conjugates");
    }
    return run.done(names.empty());
  }

  CheckResult check_malnormality(VerifyOptions const& o) {
    Run  run(7, "relative malnormality", limit_malnormal);
    auto names = pick(o, {"FIX-A", "FIX-D"});
    for (auto const& name : names) {
      auto        g     = load_gog(name);
      auto const& graph = g.graph();
      for (edge_t e = 0; e < graph.num_edges(); ++e) {
        for (int side = 0; side < 2; ++side) {
          vertex_t            v = g.end(e, side);
          std::vector<elem_t> seeds;
          for (elem_t k = 0; k < g.edge_group(e).order(); ++k) {
            seeds.push_back(g.inclusion(e, side)(k));
          }
          auto chi = subgroup_closure(g.vertex_group(v), seeds);
          auto rp  = verify_relative_malnormality(g, v, chi, malnormal_radius);
          run.record(rp.holds, name + ": counterexample " + rp.counterexample.value_or("?"));
          run.note(name + " at " + graph.vertex_id(v) + ": " + std::to_string(rp.checked) + " elements");
        }
      }
    }
    return run.done(names.empty());
  }

  CheckResult check_surgery(VerifyOptions const& o) {
    Run  run(8, "surgery witnesses", limit_surgery);
    auto names   = pick(o, {"FIX-A", "FIX-B", "FIX-C", "FIX-D", "nested-demo"});
    auto has     = [&](std::string const& n) { return std::find(names.begin(), names.end(), n) != names.end(); };
    auto witness = [&](std::string const& label, GogIsoWitness const& w) {
      auto rp = validate_witness(w);
      run.record(rp.ok, label + ": " + (rp.failures.empty() ? "" : rp.failures[0]));
    };
    for (auto const& name : {"FIX-A", "FIX-B", "FIX-C", "FIX-D"}) {
      if (!has(name)) {
        continue;
      }
      auto c = CompositeGog::from_gog(load_gog(name));
      for (edge_t e = 0; e < c.edges().size(); ++e) {
        auto once  = reverse_edge(c, e);
        auto twice = reverse_edge(once.output, e);
        witness(std::string(name) + " reverse " + c.edges()[e].id, once.witness);
        witness(std::string(name) + " reverse twice", compose(once.witness, twice.witness));
      }
    }
    try {
      if (has("FIX-C")) {
        auto c = CompositeGog::from_gog(load_gog("FIX-C"));
        auto r = collapse_tree_edge(c, c.graph().edge_index("e1"));
        run.record(r.output.vertices().size() == 2, "FIX-C collapse: wrong vertex count");
        witness("FIX-C collapse e1", r.witness);
      }
      if (has("nested-demo")) {
        auto demo = composite_from_json(load_json("nested-demo"));
        auto r    = expand_vertex(demo, demo.graph().vertex_index("w"));
        bool flat = r.output.is_flat() && r.output.vertices().size() == 4;
        run.record(flat, "nested-demo expand: output is not the flat 4-vertex graph");
        witness("nested-demo expand", r.witness);
      }
      if (has("FIX-A")) {
        auto a  = load_gog("FIX-A");
        auto c  = CompositeGog::from_gog(a);
        auto v  = a.graph().vertex_index("v");
        auto t1 = find_delta_conjugators(c, v, subgroup_closure(a.vertex_group(v), std::vector<elem_t>{2}));
        auto s1 = attach_amalgam_vertex(c, v, t1);
        witness("FIX-A attach", s1.witness);
        auto upsilon = s1.output.flatten();
        auto split   = collapse_to_amalgam(upsilon, induced_subgraph(upsilon, {v, upsilon.graph().vertex_index("w")}));
        run.record(split.delta.vertex_group(0).order() == 4 && split.chi.size() == 2,
                   "FIX-A amalgam: wrong factors");
        auto s2 = collapse_tree_edge(s1.output, s1.output.graph().edge_index("e"));
        witness("FIX-A collapse", s2.witness);
        auto s3 = reverse_edge(s2.output, s2.output.graph().edge_index("v.chi"));
        auto rt = compose(compose(s1.witness, s2.witness), s3.witness);
        witness("FIX-A round trip", rt);
        // Same graph of groups as FIX-A up to renaming.
        auto back = s3.output.flatten();
        bool same = back.graph().num_vertices() == 2 && back.graph().num_edges() == 1;
        if (same) {
          auto const& ed = back.graph().edge(0);
          same = back.vertex_group(ed.d0) == a.vertex_group(0) && back.vertex_group(ed.d1) == a.vertex_group(1)
                 && back.inclusion(0, 0) == a.inclusion(0, 0) && back.inclusion(0, 1) == a.inclusion(0, 1)
                 && back.edge_group(0) == a.edge_group(0);
        }
        run.record(same, "FIX-A round trip does not return FIX-A");
      }
    } catch (Error const& e) {
      run.record(false, e.what());
    }
    run.note(std::to_string(run.r.cases) + " witnesses and shape checks");
    return run.done(names.empty());
  }

  CheckResult check_separation(VerifyOptions const& o) {
    Run  run(9, "residual finiteness", limit_separation);
    auto names = pick(o, {"FIX-A", "FIX-D"});
    for (auto const& name : names) {
      auto          g    = load_gog(name);
      auto          ball = g.ball(separation_radius);
      SearchOptions opts;
      opts.targets           = small_targets(quotient_order);
      opts.faithful_vertices = false;
      std::vector<FiniteQuotient> family;
      std::size_t                 pairs = 0;
      for (std::size_t i = 0; i < ball.size(); ++i) {
        for (std::size_t j = i + 1; j < ball.size(); ++j) {
          ++pairs;
          auto split = [&](FiniteQuotient const& q) { return q.apply(ball[i]) != q.apply(ball[j]); };
          bool ok    = std::any_of(family.begin(), family.end(), split);
          if (!ok) {
            try {
              family.push_back(separate(g, {multiply(ball[i], invert(ball[j]))}, opts));
              ok = split(family.back()) && check_quotient(family.back()).empty()
                   && family.back().target.order() <= quotient_order;
            } catch (Error const& e) {
              ok = false;
            }
          }
          run.record(ok, name + ": " + ball[i].text() + " and " + ball[j].text() + " not separated");
        }
      }
      // No quotient separates an element from itself.
      for (auto const& q : family) {
        for (auto const& x : ball) {
          run.record(q.apply(x) == q.apply(multiply(x, g.identity())), name + ": quotient is not a function");
        }
      }
      run.note(name + ": " + std::to_string(pairs) + " pairs, " + std::to_string(family.size()) + " quotients");
    }
    if (std::find(names.begin(), names.end(), "FIX-A") != names.end()) {
      auto doc = load_json("FIX-A");
      auto g   = gog_from_json(doc);
      auto a   = g.reduce(read_word(g, "a", aliases_from_json(doc)));
      auto b   = g.reduce(read_word(g, "b", aliases_from_json(doc)));
      try {
        auto q  = separate(g, {a});
        bool ok = q.target.description() == "cyclic 12" && q.apply(a) == 3 && q.apply(b) == 2;
        run.record(ok, "FIX-A separate {a} gave " + q.target.description());
        run.note("FIX-A separate {a}: C12, a->3, b->2");
      } catch (Error const& e) {
        run.record(false, std::string("FIX-A separate {a}: ") + e.what());
      }
    }
    return run.done(names.empty());
  }

  CheckResult check_complement_functional(VerifyOptions const& o) {
    Run  run(10, "coset complement functional", limit_functional);
    auto names = pick(o, {"FIX-A"});
    if (names.empty()) {
      return run.done(true);
    }
    auto           g      = load_gog("FIX-A");
    vertex_t const h_side = g.graph().vertex_index("v");
    vertex_t const l_side = g.graph().vertex_index("w");
    auto           f      = dunwoody_derivation(g, h_side, l_side, modulus);
    auto const&    K      = g.edge_group(0);
    coeff_t const  expect = static_cast<coeff_t>(K.order() % modulus);
    // Syllables outside the edge group image on each side.
    std::vector<elem_t> h_elems, l_elems;
    for (elem_t x = 0; x < g.vertex_group(h_side).order(); ++x) {
      if (!g.preimage(0, 0, x)) {
        h_elems.push_back(x);
      }
    }
    for (elem_t x = 0; x < g.vertex_group(l_side).order(); ++x) {
      if (!g.preimage(0, 1, x)) {
        l_elems.push_back(x);
      }
    }
    std::mt19937_64                        rng(o.seed + 10);
    std::uniform_int_distribution<std::size_t> len(1, max_word_length);
    SearchOptions                          opts;
    opts.targets = small_targets(quotient_order);
    std::vector<FiniteQuotient> family;
    for (std::size_t i = 0; i < functional_words; ++i) {
      std::size_t n    = len(rng);
      bool        on_l = n == 1 || rng() % 2 == 0;
      Word        w;
      for (std::size_t j = 0; j < n; ++j, on_l = !on_l) {
        auto const& pool = on_l ? l_elems : h_elems;
        w.push_back(Syllable::vertex(on_l ? l_side : h_side, pool[rng() % pool.size()]));
      }
      auto        gamma = g.reduce(w);
      std::string label = "word " + g.format_word(w);
      auto        outside = [&](FiniteQuotient const& q) {
        return !image(q.vertex_maps[h_side]).contains(q.apply(gamma));
      };
      auto it = std::find_if(family.begin(), family.end(), outside);
      if (it == family.end()) {
        try {
          family.push_back(separate_from_vertex_group(g, h_side, {gamma}, opts));
          it = family.end() - 1;
        } catch (Error const& e) {
          run.record(false, label + ": " + e.what());
          continue;
        }
      }
      auto const& q     = *it;
      auto        delta = image(q.vertex_maps[h_side]);
      auto        pushed = push_to_quotient(eval(f, gamma)[0], q);
      // The same value from the syllables: each syllable l of the second
      // factor contributes sum over kappa in K of kappa*l*s - kappa*s,
      // where s is the rest of the word.
      QuotientRingElem direct{modulus, {}};
      auto             bump = [&](elem_t y, coeff_t c) {
        auto& a = direct.terms[y];
        a       = (a + c) % modulus;
        if (a == 0) {
          direct.terms.erase(y);
        }
      };
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j].index != l_side) {
          continue;
        }
        elem_t s = q.apply(Word(w.begin() + static_cast<std::ptrdiff_t>(j) + 1, w.end()));
        elem_t l = q.apply(w[j]);
        for (elem_t k = 0; k < K.order(); ++k) {
          elem_t kappa = q.apply(Syllable::vertex(h_side, g.inclusion(0, 0)(k)));
          bump(q.target.mul(q.target.mul(kappa, l), s), 1);
          bump(q.target.mul(kappa, s), modulus - 1);
        }
      }
      coeff_t eps = coset_complement_functional(q, delta, pushed);
      run.record(pushed == direct && eps == expect && coset_complement_functional(q, delta, direct) == expect,
                 label + ": functional " + std::to_string(eps) + ", expected " + std::to_string(expect));
    }
    run.note(std::to_string(functional_words) + " words, " + std::to_string(family.size())
             + " quotients, value " + std::to_string(expect));
    return run.done();
  }

  std::vector<CheckResult> verify_all(VerifyOptions const& o) {
    return {check_derivation_law(o), check_gluing(o),       check_kernel(o),
            check_vertex_derivation(o), check_tree_axioms(o), check_fixed_points(o),
            check_malnormality(o),   check_surgery(o),       check_separation(o),
            check_complement_functional(o)};
  }

  std::string format_result(CheckResult const& r) {
    char buf[96];
    std::snprintf(buf, sizeof buf, " (%zu cases, %zu failures, %.2f s / %.0f s)", r.cases, r.failures,
                  r.seconds, r.limit);
    std::string status = r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL";
    return status + " [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail + buf;
  }

}  // namespace gogkit
