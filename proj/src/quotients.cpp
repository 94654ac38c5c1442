#include "gogkit/quotients.hpp"

#include <algorithm>

#include "gogkit/error.hpp"

namespace gogkit {

  elem_t FiniteQuotient::apply(Syllable const& s) const {
    if (s.kind == Syllable::Kind::vertex) {
      return vertex_maps.at(s.index)(static_cast<elem_t>(s.value));
    }
    elem_t t = letter_images.at(s.index);
    return s.value > 0 ? t : target.inverse(t);
  }

  elem_t FiniteQuotient::apply(Word const& w) const {
    elem_t out = target.identity();
    for (auto const& s : w) {
      out = target.mul(out, apply(s));
    }
    return out;
  }

  elem_t FiniteQuotient::apply(NormalForm const& x) const {
    return apply(x.word());
  }

  Subgroup FiniteQuotient::image() const {
    std::vector<elem_t> seeds(letter_images);
    for (auto const& h : vertex_maps) {
      seeds.insert(seeds.end(), h.images.begin(), h.images.end());
    }
    return subgroup_closure(target, seeds);
  }

  std::string check_quotient(FiniteQuotient const& q) {
    auto const& g = q.owner;
    if (q.vertex_maps.size() != g.graph().num_vertices()
        || q.letter_images.size() != g.graph().num_edges()) {
      return "image tables do not match the graph";
    }
    for (vertex_t v = 0; v < g.graph().num_vertices(); ++v) {
      if (q.vertex_maps[v].images.size() != g.vertex_group(v).order()
          || !is_homomorphism(g.vertex_group(v), q.target, q.vertex_maps[v])) {
        return "map on vertex " + g.graph().vertex_id(v) + " is not a homomorphism";
      }
    }
    for (elem_t t : q.letter_images) {
      if (t >= q.target.order()) {
        return "letter image out of range";
      }
    }
    for (auto const& r : g.presentation().relators) {
      if (q.apply(r) != q.target.identity()) {
        return "relator " + g.format_word(r) + " is not killed";
      }
    }
    return "";
  }

  QuotientRingElem push_to_quotient(RingElem const& x, FiniteQuotient const& q) {
    QuotientRingElem out{x.modulus(), {}};
    for (auto const& [code, c] : x.raw()) {
      elem_t y = q.apply(NormalForm(x.owner(), code));
      auto&  a = out.terms[y];
      a        = (a + c) % x.modulus();
      if (a == 0) {
        out.terms.erase(y);
      }
    }
    return out;
  }

  QuotientRingElem act_right(QuotientRingElem const& x, FiniteQuotient const& q, elem_t g) {
    QuotientRingElem out{x.modulus, {}};
    for (auto const& [y, c] : x.terms) {
      out.terms[q.target.mul(y, g)] = c;
    }
    return out;
  }

  coeff_t coset_complement_functional(FiniteQuotient const&,
                                      Subgroup const&         d,
                                      QuotientRingElem const& x) {
    std::uint64_t total = 0;
    for (auto const& [y, c] : x.terms) {
      if (!d.contains(y)) {
        total += c;
      }
    }
    return static_cast<coeff_t>(total % x.modulus);
  }

  ////////////////////////////////////////////////////////////////////////
  // Targets
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void sort_by_order(std::vector<FiniteGroup>& ts) {
      std::stable_sort(ts.begin(), ts.end(), [](auto const& a, auto const& b) {
        return a.order() < b.order();
      });
    }
  }  // namespace

  std::vector<FiniteGroup> default_targets() {
    std::vector<FiniteGroup> ts;
    for (std::size_t n = 1; n <= 24; ++n) {
      ts.push_back(FiniteGroup::cyclic(n));
    }
    for (std::size_t n = 3; n <= 6; ++n) {
      ts.push_back(FiniteGroup::symmetric(n));
    }
    sort_by_order(ts);
    return ts;
  }

  std::vector<FiniteGroup> small_targets(std::size_t max_order) {
    std::vector<FiniteGroup> ts;
    auto add = [&](FiniteGroup g) {
      if (g.order() <= max_order) {
        ts.push_back(std::move(g));
      }
    };
    for (std::size_t n = 1; n <= max_order; ++n) {
      add(FiniteGroup::cyclic(n));
    }
    for (std::size_t n = 2; 2 * n <= max_order; ++n) {
      add(FiniteGroup::dihedral(n));
    }
    for (std::size_t n = 2; 4 * n <= max_order; ++n) {
      add(FiniteGroup::dicyclic(n));
    }
    for (std::size_t n = 3; n <= 6; ++n) {
      std::size_t f = 1;
      for (std::size_t i = 2; i <= n; ++i) {
        f *= i;
      }
      if (f <= max_order) {
        add(FiniteGroup::symmetric(n));
      }
    }
    add(FiniteGroup::special_linear_2(3));
    // Products not covered above.
    std::vector<std::pair<FiniteGroup, FiniteGroup>> products{
        {FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)},
        {FiniteGroup::cyclic(3), FiniteGroup::cyclic(3)},
        {FiniteGroup::cyclic(2), FiniteGroup::cyclic(6)},
        {FiniteGroup::cyclic(2), FiniteGroup::cyclic(8)},
        {FiniteGroup::cyclic(4), FiniteGroup::cyclic(4)},
        {FiniteGroup::cyclic(2), FiniteGroup::dihedral(4)},
        {FiniteGroup::cyclic(2), FiniteGroup::dicyclic(2)},
        {FiniteGroup::cyclic(3), FiniteGroup::cyclic(6)},
        {FiniteGroup::cyclic(3), FiniteGroup::dihedral(3)},
        {FiniteGroup::cyclic(2), FiniteGroup::cyclic(10)},
        {FiniteGroup::cyclic(2), FiniteGroup::cyclic(12)},
        {FiniteGroup::cyclic(2), FiniteGroup::dicyclic(3)},
        {FiniteGroup::cyclic(4), FiniteGroup::dihedral(3)},
        {FiniteGroup::cyclic(3), FiniteGroup::dihedral(4)},
        {FiniteGroup::cyclic(3), FiniteGroup::dicyclic(2)},
    };
    for (auto const& [a, b] : products) {
      if (a.order() * b.order() <= max_order) {
        add(FiniteGroup::direct_product(a, b));
      }
    }
    sort_by_order(ts);
    return ts;
  }

  ////////////////////////////////////////////////////////////////////////
  // Search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool search_in(GraphOfGroups const&            g,
                   FiniteGroup const&              T,
                   bool                            faithful,
                   QuotientGoal const&             goal,
                   std::size_t&                    budget,
                   std::optional<FiniteQuotient>&  found) {
      auto const&                        graph = g.graph();
      std::size_t const                  n     = graph.num_vertices();
      std::vector<std::vector<GroupHom>> cand(n);
      for (vertex_t v = 0; v < n; ++v) {
        cand[v] = faithful ? enumerate_embeddings(g.vertex_group(v), T)
                           : enumerate_homs(g.vertex_group(v), T);
        if (cand[v].empty()) {
          return false;
        }
      }
      // Tree edges whose later endpoint is v are checked when v is assigned.
      std::vector<std::vector<edge_t>> checks(n);
      for (edge_t e : g.tree().edges()) {
        checks[std::max(graph.edge(e).d0, graph.edge(e).d1)].push_back(e);
      }
      std::vector<edge_t> free_edges;
      for (edge_t e = 0; e < graph.num_edges(); ++e) {
        if (!g.is_tree_edge(e)) {
          free_edges.push_back(e);
        }
      }

      FiniteQuotient q{g, T, std::vector<GroupHom>(n), std::vector<elem_t>(graph.num_edges(), T.identity())};

      auto letters = [&]() -> bool {
        std::vector<std::vector<elem_t>> options(free_edges.size());
        for (std::size_t j = 0; j < free_edges.size(); ++j) {
          edge_t      e  = free_edges[j];
          auto const& K  = g.edge_group(e);
          auto const& f0 = q.vertex_maps[graph.edge(e).d0];
          auto const& f1 = q.vertex_maps[graph.edge(e).d1];
          for (elem_t t = 0; t < T.order(); ++t) {
            bool ok = true;
            for (elem_t k = 0; k < K.order() && ok; ++k) {
              ok = T.conjugate(f0(g.inclusion(e, 0)(k)), t) == f1(g.inclusion(e, 1)(k));
            }
            if (ok) {
              options[j].push_back(t);
            }
          }
          if (options[j].empty()) {
            return false;
          }
        }
        std::vector<std::size_t> pos(free_edges.size(), 0);
        while (true) {
          for (std::size_t j = 0; j < free_edges.size(); ++j) {
            q.letter_images[free_edges[j]] = options[j][pos[j]];
          }
          if (budget == 0) {
            throw Error(ErrorCode::Exhausted, "candidate cap reached");
          }
          --budget;
          if (goal(q)) {
            found = q;
            return true;
          }
          std::size_t j = free_edges.size();
          while (true) {
            if (j == 0) {
              return false;
            }
            --j;
            if (++pos[j] < options[j].size()) {
              break;
            }
            pos[j] = 0;
          }
        }
      };

      std::function<bool(vertex_t)> assign = [&](vertex_t v) -> bool {
        if (v == n) {
          return letters();
        }
        for (auto const& h : cand[v]) {
          q.vertex_maps[v] = h;
          bool ok          = true;
          for (edge_t e : checks[v]) {
            auto const& K  = g.edge_group(e);
            auto const& f0 = q.vertex_maps[graph.edge(e).d0];
            auto const& f1 = q.vertex_maps[graph.edge(e).d1];
            for (elem_t k = 0; k < K.order() && ok; ++k) {
              ok = f0(g.inclusion(e, 0)(k)) == f1(g.inclusion(e, 1)(k));
            }
            if (!ok) {
              break;
            }
          }
          if (ok && assign(v + 1)) {
            return true;
          }
        }
        return false;
      };
      return assign(0);
    }

    FiniteQuotient run(GraphOfGroups const& g,
                       QuotientGoal const&  goal,
                       SearchOptions const& options,
                       bool                 faithful) {
      auto        targets = options.targets.empty() ? default_targets() : options.targets;
      std::size_t budget  = options.max_candidates;
      std::optional<FiniteQuotient> found;
      for (auto const& T : targets) {
        if (search_in(g, T, faithful, goal, budget, found)) {
          return *found;
        }
      }
      throw Error(ErrorCode::Exhausted,
                  "no quotient found among " + std::to_string(targets.size())
                      + " targets (inconclusive)");
    }

    FiniteQuotient run_staged(GraphOfGroups const& g,
                              QuotientGoal const&  goal,
                              SearchOptions const& options) {
      if (options.faithful_vertices) {
        return run(g, goal, options, *options.faithful_vertices);
      }
      try {
        return run(g, goal, options, true);
      } catch (Error const& e) {
        if (e.code() != ErrorCode::Exhausted) {
          throw;
        }
      }
      return run(g, goal, options, false);
    }
  }  // namespace

  FiniteQuotient search_quotient(GraphOfGroups const& g,
                                 QuotientGoal const&  goal,
                                 SearchOptions const& options) {
    return run(g, goal, options, options.faithful_vertices.value_or(false));
  }

  FiniteQuotient separate(GraphOfGroups const&           g,
                          std::vector<NormalForm> const& elements,
                          SearchOptions                  options) {
    std::vector<Word> words;
    for (auto const& x : elements) {
      if (!(x.owner() == g)) {
        throw Error(ErrorCode::MixedOwners, "separate: element from another graph of groups");
      }
      if (x.is_identity()) {
        throw Error(ErrorCode::BadGoal, "cannot separate the identity");
      }
      words.push_back(x.word());
    }
    return run_staged(
        g,
        [&](FiniteQuotient const& q) {
          return std::all_of(words.begin(), words.end(), [&](Word const& w) {
            return q.apply(w) != q.target.identity();
          });
        },
        options);
  }

  FiniteQuotient separate_from_vertex_group(GraphOfGroups const&           g,
                                            vertex_t                       v,
                                            std::vector<NormalForm> const& elements,
                                            SearchOptions                  options) {
    auto              in_v = vertex_group_predicate(g, v);
    std::vector<Word> words;
    for (auto const& x : elements) {
      if (in_v(x)) {
        throw Error(ErrorCode::BadGoal, x.text() + " lies in the vertex group");
      }
      words.push_back(x.word());
    }
    return run_staged(
        g,
        [&](FiniteQuotient const& q) {
          Subgroup d = image(q.vertex_maps[v]);
          return std::all_of(words.begin(), words.end(), [&](Word const& w) {
            return !d.contains(q.apply(w));
          });
        },
        options);
  }

  FiniteQuotient embed(GraphOfGroups const& g,
                       vertex_t             v,
                       Subgroup const&      sub,
                       SearchOptions        options) {
    if (!is_subgroup(g.vertex_group(v), sub)) {
      throw Error(ErrorCode::BadGoal, "embed: not a subgroup of the vertex group");
    }
    return run_staged(
        g,
        [&](FiniteQuotient const& q) {
          std::vector<elem_t> seen;
          for (elem_t x : sub.elements) {
            seen.push_back(q.vertex_maps[v](x));
          }
          std::sort(seen.begin(), seen.end());
          return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
        },
        options);
  }

  GraphOfGroups extract_subgraph(GraphOfGroups const& g, Subgraph const& sub) {
    auto const&           graph = g.graph();
    std::vector<vertex_t> index(graph.num_vertices(), 0);
    GogSpec               spec;
    std::vector<std::string> ids;
    for (vertex_t v = 0; v < graph.num_vertices(); ++v) {
      if (sub.vertices.at(v)) {
        index[v] = ids.size();
        ids.push_back(graph.vertex_id(v));
        spec.vertex_groups.push_back(g.vertex_group(v));
      }
    }
    std::vector<Edge>   edges;
    std::vector<edge_t> tree;
    for (edge_t e = 0; e < graph.num_edges(); ++e) {
      if (!sub.edges.at(e)) {
        continue;
      }
      if (g.is_tree_edge(e)) {
        tree.push_back(edges.size());
      }
      edges.push_back({graph.edge(e).id, index[graph.edge(e).d0], index[graph.edge(e).d1]});
      spec.edge_groups.push_back(g.edge_group(e));
      spec.d0.push_back(g.inclusion(e, 0));
      spec.d1.push_back(g.inclusion(e, 1));
    }
    spec.graph = FiniteGraph(ids, edges);
    spec.tree  = tree;
    spec.basepoint = sub.vertices[g.basepoint()] ? index[g.basepoint()] : 0;
    try {
      return GraphOfGroups(std::move(spec));
    } catch (Error const& e) {
      throw Error(ErrorCode::BadSubgraph, e.what());
    }
  }

  FiniteQuotient refine(GraphOfGroups const&  g,
                        Subgraph const&       sub,
                        FiniteQuotient const& given,
                        SearchOptions         options) {
    auto const& inner = given.owner;
    if (auto why = check_quotient(given); !why.empty()) {
      throw Error(ErrorCode::BadGoal, "refine: given quotient is invalid: " + why);
    }
    // Generators of the subgraph group, as (outer syllable, inner syllable).
    std::vector<std::pair<Syllable, Syllable>> gens;
    auto const&                                graph = g.graph();
    for (vertex_t v = 0; v < graph.num_vertices(); ++v) {
      if (!sub.vertices[v]) {
        continue;
      }
      vertex_t iv = inner.graph().vertex_index(graph.vertex_id(v));
      for (elem_t x : g.vertex_group(v).generators()) {
        gens.push_back({Syllable::vertex(v, x), Syllable::vertex(iv, x)});
      }
    }
    for (edge_t e = 0; e < graph.num_edges(); ++e) {
      if (sub.edges[e] && !g.is_tree_edge(e)) {
        gens.push_back(
            {Syllable::letter(e, 1), Syllable::letter(inner.graph().edge_index(graph.edge(e).id), 1)});
      }
    }
    FiniteGroup const& T0 = given.target;
    return run_staged(
        g,
        [&](FiniteQuotient const& q) {
          auto                P = FiniteGroup::direct_product(q.target, T0);
          std::vector<elem_t> seeds;
          for (auto const& [outer_s, inner_s] : gens) {
            seeds.push_back(
                static_cast<elem_t>(q.apply(outer_s) * T0.order() + given.apply(inner_s)));
          }
          auto                closure = subgroup_closure(P, seeds);
          std::vector<std::int64_t> second(q.target.order(), -1);
          for (elem_t p : closure.elements) {
            elem_t a = static_cast<elem_t>(p / T0.order()), b = static_cast<elem_t>(p % T0.order());
            if (second[a] >= 0 && second[a] != b) {
              return false;
            }
            second[a] = b;
          }
          return true;
        },
        options);
  }

  NonkernelCertificate certify_nonkernel(Derivation const& f,
                                         NormalForm const& x,
                                         SearchOptions     options) {
    auto                                        value = eval(f, x);
    std::vector<std::vector<std::pair<Word, coeff_t>>> parts(value.size());
    for (std::size_t c = 0; c < value.size(); ++c) {
      for (auto const& [code, a] : value[c].raw()) {
        parts[c].push_back({NormalForm(f.owner(), code).word(), a});
      }
    }
    std::size_t      component = 0;
    QuotientRingElem pushed{f.modulus(), {}};
    auto             q = search_quotient(
        f.owner(),
        [&](FiniteQuotient const& q) {
          for (std::size_t c = 0; c < parts.size(); ++c) {
            QuotientRingElem p{f.modulus(), {}};
            for (auto const& [w, a] : parts[c]) {
              elem_t y = q.apply(w);
              auto&  s = p.terms[y];
              s        = (s + a) % f.modulus();
              if (s == 0) {
                p.terms.erase(y);
              }
            }
            if (!p.is_zero()) {
              component = c;
              pushed    = std::move(p);
              return true;
            }
          }
          return false;
        },
        options);
    return {std::move(q), component, std::move(pushed)};
  }

  bool check_certificate(Derivation const& f, NormalForm const& x, NonkernelCertificate const& c) {
    if (!check_quotient(c.quotient).empty() || c.component >= f.rank()) {
      return false;
    }
    auto p = push_to_quotient(eval(f, x)[c.component], c.quotient);
    return !p.is_zero() && p == c.pushed;
  }

}  // namespace gogkit
