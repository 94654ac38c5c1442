#include "gogkit/derivation.hpp"

#include <random>

#include "gogkit/error.hpp"

namespace gogkit {

  Derivation::Derivation(GraphOfGroups owner, coeff_t modulus, std::vector<Action> actions)
      : _owner(std::move(owner)), _mod(modulus), _actions(std::move(actions)) {
    RingVector zero = zero_vector(_owner, _mod, _actions.size());
    auto const& graph = _owner.graph();
    _vertex_values.resize(graph.num_vertices());
    for (vertex_t v = 0; v < graph.num_vertices(); ++v) {
      _vertex_values[v].assign(_owner.vertex_group(v).order(), zero);
    }
    _letter_values.assign(graph.num_edges(), zero);
  }

  void Derivation::check_shape(RingVector const& value) const {
    if (value.size() != rank()) {
      throw Error(ErrorCode::RingMismatch,
                  "value of length " + std::to_string(value.size()) + " for rank "
                      + std::to_string(rank()));
    }
    for (auto const& x : value) {
      if (x.modulus() != _mod) {
        throw Error(ErrorCode::RingMismatch, "value over a different modulus");
      }
      if (!(x.owner() == _owner)) {
        throw Error(ErrorCode::MixedOwners, "value over a different group");
      }
    }
  }

  void Derivation::set_vertex_value(vertex_t v, elem_t g, RingVector value) {
    check_shape(value);
    _vertex_values.at(v).at(g) = std::move(value);
  }

  void Derivation::set_letter_value(edge_t e, RingVector value) {
    check_shape(value);
    _letter_values.at(e) = std::move(value);
  }

  NormalForm free_part(NormalForm const& x) {
    Word stack;
    for (auto const& s : x.word()) {
      if (s.kind != Syllable::Kind::letter) {
        continue;
      }
      if (!stack.empty() && stack.back().index == s.index && stack.back().value == -s.value) {
        stack.pop_back();
      } else {
        stack.push_back(s);
      }
    }
    return x.owner().reduce(stack);
  }

  NormalForm Derivation::act(std::size_t component, NormalForm const& x) const {
    return _actions.at(component) == Action::standard ? x : free_part(x);
  }

  RingVector Derivation::value(Syllable const& s) const {
    if (s.kind == Syllable::Kind::vertex) {
      return vertex_value(s.index, static_cast<elem_t>(s.value));
    }
    RingVector const& f = letter_value(s.index);
    if (s.value > 0) {
      return f;
    }
    NormalForm t_inv = _owner.element(s);
    RingVector out;
    for (std::size_t c = 0; c < rank(); ++c) {
      out.push_back(-act_right(f[c], act(c, t_inv)));
    }
    return out;
  }

  RingVector eval(Derivation const& f, Word const& w) {
    auto const& g     = f.owner();
    RingVector  total = zero_vector(g, f.modulus(), f.rank());
    NormalForm  suffix = g.identity();
    bool        twisted = false;
    for (auto a : f.actions()) {
      twisted |= a == Action::twisted;
    }
    for (std::size_t i = w.size(); i-- > 0;) {
      RingVector  v      = f.value(w[i]);
      NormalForm  suffix_free = twisted ? free_part(suffix) : suffix;
      for (std::size_t c = 0; c < f.rank(); ++c) {
        if (v[c].is_zero()) {
          continue;
        }
        auto const& by = f.actions()[c] == Action::standard ? suffix : suffix_free;
        total[c] += act_right(v[c], by);
      }
      suffix = multiply(g.element(w[i]), suffix);
    }
    return total;
  }

  RingVector eval(Derivation const& f, NormalForm const& x) {
    if (!(x.owner() == f.owner())) {
      throw Error(ErrorCode::MixedOwners, "eval: element from another graph of groups");
    }
    return eval(f, x.word());
  }

  namespace {
    std::string vector_text(RingVector const& v) {
      std::string out = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + v[i].text();
      }
      return out + ")";
    }

    bool same(RingVector const& a, RingVector const& b) {
      return a == b;
    }
  }  // namespace

  WellDefinedReport check_well_defined(Derivation const& f,
                                       std::size_t       samples,
                                       std::uint64_t     seed) {
    WellDefinedReport r;
    auto const&       g = f.owner();
    auto              p = g.presentation();
    for (auto const& rel : p.relators) {
      ++r.relators_checked;
      auto v = eval(f, rel);
      if (!is_zero(v)) {
        r.ok = false;
        r.failures.push_back("relator " + g.format_word(rel) + " -> " + vector_text(v));
      }
    }
    if (samples == 0) {
      return r;
    }
    auto               pool = g.ball(2);
    std::mt19937_64    rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_rel(0, p.relators.size() ? p.relators.size() - 1 : 0);
    for (std::size_t i = 0; i < samples; ++i) {
      auto const& x  = pool[pick(rng)];
      auto const& y  = pool[pick(rng)];
      Word        w1 = x.word();
      // y y^-1 r x, with r a relator when there is one
      Word w2 = y.word();
      auto yi = g.inverse_word(y.word());
      w2.insert(w2.end(), yi.begin(), yi.end());
      if (!p.relators.empty()) {
        auto const& rel = p.relators[pick_rel(rng)];
        w2.insert(w2.end(), rel.begin(), rel.end());
      }
      w2.insert(w2.end(), w1.begin(), w1.end());
      ++r.pairs_checked;
      auto a = eval(f, w1), b = eval(f, w2);
      if (!same(a, b)) {
        r.ok = false;
        r.failures.push_back("words " + g.format_word(w1) + " and " + g.format_word(w2)
                             + " disagree");
      }
    }
    return r;
  }

  std::vector<GluingResidue> gluing_residues(Derivation const& tables) {
    std::vector<GluingResidue> out;
    auto const&                g = tables.owner();
    for (edge_t e : g.tree().edges()) {
      out.push_back({e, std::nullopt, tables.letter_value(e)});
    }
    for (edge_t e = 0; e < g.graph().num_edges(); ++e) {
      auto const& ed = g.graph().edge(e);
      auto const& K  = g.edge_group(e);
      for (elem_t k = 0; k < K.order(); ++k) {
        Word w{Syllable::vertex(ed.d1, g.vertex_group(ed.d1).inverse(g.inclusion(e, 1)(k))),
               Syllable::letter(e, -1),
               Syllable::vertex(ed.d0, g.inclusion(e, 0)(k)),
               Syllable::letter(e, 1)};
        out.push_back({e, k, eval(tables, w)});
      }
    }
    return out;
  }

  Derivation glue(GluingData data) {
    auto const& f = data.tables;
    auto const& g = f.owner();
    for (vertex_t v = 0; v < g.graph().num_vertices(); ++v) {
      auto const& G = g.vertex_group(v);
      for (elem_t x = 0; x < G.order(); ++x) {
        for (elem_t y = 0; y < G.order(); ++y) {
          Word w{Syllable::vertex(v, x), Syllable::vertex(v, y)};
          if (!same(eval(f, w), f.vertex_value(v, G.mul(x, y)))) {
            throw Error(ErrorCode::GluingConditionFailed,
                        "vertex table at " + g.graph().vertex_id(v)
                            + " breaks the derivation law at (g" + std::to_string(x) + ", g"
                            + std::to_string(y) + ")");
          }
        }
      }
    }
    for (auto const& r : gluing_residues(f)) {
      if (!is_zero(r.residue)) {
        std::string where = "edge " + g.graph().edge(r.edge).id;
        where += r.element ? ", element g" + std::to_string(*r.element) : " (tree letter)";
        throw Error(ErrorCode::GluingConditionFailed,
                    where + ": residue " + vector_text(r.residue));
      }
    }
    return std::move(data.tables);
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Values of the vertex derivation with base v and target w, as a single
    // ring element per generator.
    struct VertexTables {
      std::vector<std::vector<RingElem>> vertex;
      std::vector<RingElem>              letter;
    };

    VertexTables vertex_tables(GraphOfGroups const& g, vertex_t v, vertex_t w, coeff_t m) {
      auto const& graph = g.graph();
      auto        cls   = classify(graph, g.tree(), v, w);
      edge_t      e     = cls.base_edge;
      int         side  = graph.edge(e).d0 == v ? 0 : 1;

      RingElem S(g, m);
      for (elem_t k = 0; k < g.edge_group(e).order(); ++k) {
        S.add_term(g.element(Syllable::vertex(v, g.inclusion(e, side)(k))), 1);
      }
      RingElem one = RingElem::basis(g.identity(), m);

      VertexTables t;
      t.vertex.resize(graph.num_vertices());
      for (vertex_t u = 0; u < graph.num_vertices(); ++u) {
        auto const& G = g.vertex_group(u);
        for (elem_t x = 0; x < G.order(); ++x) {
          if (cls.vertex_signs[u] == Sign::positive) {
            auto gx = RingElem::basis(g.element(Syllable::vertex(u, x)), m);
            t.vertex[u].push_back(S * (gx - one));
          } else {
            t.vertex[u].push_back(RingElem(g, m));
          }
        }
      }
      for (edge_t eta = 0; eta < graph.num_edges(); ++eta) {
        RingElem val(g, m);
        if (!g.is_tree_edge(eta)) {
          bool p0 = cls.vertex_signs[graph.edge(eta).d0] == Sign::positive;
          bool p1 = cls.vertex_signs[graph.edge(eta).d1] == Sign::positive;
          auto t_eta = RingElem::basis(g.element(Syllable::letter(eta, 1)), m);
          if (p0 && p1) {
            val = S * (t_eta - one);
          } else if (p1) {
            val = -S;
          } else if (p0) {
            val = S * t_eta;
          }
        }
        t.letter.push_back(std::move(val));
      }
      return t;
    }
  }  // namespace

  Derivation dunwoody_derivation(GraphOfGroups const& g,
                                 vertex_t             v,
                                 vertex_t             w,
                                 coeff_t              modulus) {
    auto       t = vertex_tables(g, v, w, modulus);
    Derivation f(g, modulus, {Action::standard});
    for (vertex_t u = 0; u < g.graph().num_vertices(); ++u) {
      for (elem_t x = 0; x < t.vertex[u].size(); ++x) {
        f.set_vertex_value(u, x, {t.vertex[u][x]});
      }
    }
    for (edge_t e = 0; e < g.graph().num_edges(); ++e) {
      f.set_letter_value(e, {t.letter[e]});
    }
    return f;
  }

  namespace {
    void check_modulus(GraphOfGroups const& g, coeff_t modulus) {
      if (modulus < 2) {
        throw Error(ErrorCode::BadModulus, "modulus must be at least 2");
      }
      for (edge_t e = 0; e < g.graph().num_edges(); ++e) {
        if (g.edge_group(e).order() % modulus == 0) {
          throw Error(ErrorCode::BadModulus,
                      "edge " + g.graph().edge(e).id + " has group order "
                          + std::to_string(g.edge_group(e).order()) + ", divisible by "
                          + std::to_string(modulus));
        }
      }
    }

    // Vertex derivation components followed by one free-letter component
    // per listed edge.
    Derivation assemble(GraphOfGroups const&             g,
                        coeff_t                          modulus,
                        std::vector<VertexTables> const& vertex_parts,
                        std::vector<edge_t> const&       free_edges,
                        FreeLetterMode                   mode) {
      auto const&         graph = g.graph();
      std::vector<Action> actions(vertex_parts.size(), Action::standard);
      for (std::size_t j = 0; j < free_edges.size(); ++j) {
        actions.push_back(mode == FreeLetterMode::standard ? Action::standard : Action::twisted);
      }
      Derivation        f(g, modulus, actions);
      std::size_t const nv = vertex_parts.size();
      for (vertex_t u = 0; u < graph.num_vertices(); ++u) {
        for (elem_t x = 0; x < g.vertex_group(u).order(); ++x) {
          RingVector val = zero_vector(g, modulus, actions.size());
          for (std::size_t c = 0; c < nv; ++c) {
            val[c] = vertex_parts[c].vertex[u][x];
          }
          f.set_vertex_value(u, x, std::move(val));
        }
      }
      RingElem one = RingElem::basis(g.identity(), modulus);
      for (edge_t e = 0; e < graph.num_edges(); ++e) {
        RingVector val = zero_vector(g, modulus, actions.size());
        for (std::size_t c = 0; c < nv; ++c) {
          val[c] = vertex_parts[c].letter[e];
        }
        for (std::size_t j = 0; j < free_edges.size(); ++j) {
          if (free_edges[j] != e) {
            continue;
          }
          if (mode == FreeLetterMode::twisted) {
            val[nv + j] = RingElem::basis(g.element(Syllable::letter(e, 1)), modulus) - one;
          } else {
            RingElem s(g, modulus);
            vertex_t d1 = graph.edge(e).d1;
            for (elem_t k = 0; k < g.edge_group(e).order(); ++k) {
              s.add_term(g.element(Syllable::vertex(d1, g.inclusion(e, 1)(k))), 1);
            }
            val[nv + j] = -s;
          }
        }
        f.set_letter_value(e, std::move(val));
      }
      return f;
    }
  }  // namespace

  Derivation accessibility_derivation(GraphOfGroups const& g,
                                      vertex_t             v,
                                      coeff_t              modulus,
                                      FreeLetterMode       mode) {
    check_modulus(g, modulus);
    std::vector<VertexTables> vertex_parts;
    for (vertex_t w = 0; w < g.graph().num_vertices(); ++w) {
      if (w != v) {
        vertex_parts.push_back(vertex_tables(g, v, w, modulus));
      }
    }
    std::vector<edge_t> free_edges;
    for (edge_t e = 0; e < g.graph().num_edges(); ++e) {
      if (!g.is_tree_edge(e)) {
        free_edges.push_back(e);
      }
    }
    return assemble(g, modulus, vertex_parts, free_edges, mode);
  }

  Derivation subgraph_derivation(GraphOfGroups const& g,
                                 Subgraph const&      sub,
                                 coeff_t              modulus,
                                 FreeLetterMode       mode) {
    check_modulus(g, modulus);
    auto const&               graph = g.graph();
    std::vector<VertexTables> vertex_parts;
    std::vector<edge_t>       free_edges;
    for (edge_t e = 0; e < graph.num_edges(); ++e) {
      auto const& ends = graph.edge(e);
      bool        in0  = sub.vertices[ends.d0];
      bool        in1  = sub.vertices[ends.d1];
      if (g.is_tree_edge(e) && in0 != in1) {
        // Adjacent through e, so e is the base edge of this pair.
        vertex_parts.push_back(in0 ? vertex_tables(g, ends.d0, ends.d1, modulus)
                                   : vertex_tables(g, ends.d1, ends.d0, modulus));
      } else if (!g.is_tree_edge(e) && !sub.edges[e]) {
        free_edges.push_back(e);
      }
    }
    return assemble(g, modulus, vertex_parts, free_edges, mode);
  }

  KernelScanReport kernel_scan(Derivation const& f, Predicate const& in_h, std::size_t radius) {
    KernelScanReport r;
    for (auto const& x : f.owner().ball(radius)) {
      ++r.elements;
      bool zero   = is_zero(eval(f, x));
      bool member = in_h(x);
      r.zeros += zero;
      r.members += member;
      if (zero != member) {
        ++r.mismatches;
        if (r.examples.size() < 5) {
          r.examples.push_back(x.text() + (zero ? ": f vanishes outside H" : ": f nonzero on H"));
        }
      }
    }
    return r;
  }

}  // namespace gogkit
