#include "gogkit/surgery.hpp"

#include <algorithm>
#include <set>

#include "gogkit/error.hpp"
#include "gogkit/quotients.hpp"

namespace gogkit {

  ////////////////////////////////////////////////////////////////////////
  // Text words
  ////////////////////////////////////////////////////////////////////////

  std::string format_text_word(TextWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& l : w) {
      if (!out.empty()) {
        out += " * ";
      }
      out += l.gen;
      if (l.exp < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  TextWord parse_text_word(std::string const& text) {
    TextWord    out;
    std::size_t pos = 0;
    auto        trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\n");
      auto e = s.find_last_not_of(" \t\n");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (trim(text).empty() || trim(text) == "1") {
      return out;
    }
    while (pos <= text.size()) {
      auto star  = text.find('*', pos);
      auto token = trim(text.substr(pos, star == std::string::npos ? std::string::npos : star - pos));
      pos        = star == std::string::npos ? text.size() + 1 : star + 1;
      if (token.empty()) {
        throw Error(ErrorCode::MalformedWord, "empty letter in '" + text + "'");
      }
      if (token == "1") {
        continue;
      }
      int exp = 1;
      if (token.ends_with("^-1")) {
        exp = -1;
        token.resize(token.size() - 3);
      } else if (token.ends_with("^+1")) {
        token.resize(token.size() - 3);
      } else if (token.ends_with("^1")) {
        token.resize(token.size() - 2);
      }
      out.push_back({trim(token), exp});
    }
    return out;
  }

  TextWord inverse(TextWord const& w) {
    TextWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back({it->gen, -it->exp});
    }
    return out;
  }

  TextWord concat(std::initializer_list<TextWord> parts) {
    TextWord out;
    for (auto const& p : parts) {
      out.insert(out.end(), p.begin(), p.end());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // CompositeGog
  ////////////////////////////////////////////////////////////////////////

  namespace {
    GraphOfGroups one_vertex(std::string const& id, FiniteGroup const& group) {
      GogSpec spec;
      spec.graph         = FiniteGraph({id}, {});
      spec.vertex_groups = {group};
      spec.tree          = std::vector<edge_t>{};
      spec.basepoint     = 0;
      return GraphOfGroups(std::move(spec));
    }

    // Presentation relators plus the multiplication table of every vertex.
    std::vector<Word> full_relators(GraphOfGroups const& g) {
      auto out = g.presentation().relators;
      for (vertex_t v = 0; v < g.graph().num_vertices(); ++v) {
        auto const& G = g.vertex_group(v);
        for (elem_t x = 0; x < G.order(); ++x) {
          for (elem_t y = 0; y < G.order(); ++y) {
            if (x == G.identity() || y == G.identity()) {
              continue;
            }
            Word   w{Syllable::vertex(v, x), Syllable::vertex(v, y)};
            elem_t z = G.inverse(G.mul(x, y));
            if (z != G.identity()) {
              w.push_back(Syllable::vertex(v, z));
            }
            out.push_back(std::move(w));
          }
        }
      }
      return out;
    }

    std::optional<std::size_t> find_image(std::vector<NormalForm> const& images, NormalForm const& x) {
      for (std::size_t k = 0; k < images.size(); ++k) {
        if (images[k] == x) {
          return k;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  CompositeVertex CompositeVertex::plain(std::string const& id, FiniteGroup const& group) {
    return {id, one_vertex(id, group), false};
  }

  CompositeVertex CompositeVertex::nest(std::string const& id, GraphOfGroups const& group) {
    return {id, group, true};
  }

  CompositeGog::CompositeGog(std::vector<CompositeVertex> vertices,
                             std::vector<CompositeEdge>   edges,
                             std::vector<edge_t>          tree,
                             vertex_t                     basepoint) {
    std::vector<std::string> problems;
    std::vector<std::string> ids;
    for (auto const& v : vertices) {
      ids.push_back(v.id);
      if (!v.nested
          && (v.group.graph().num_vertices() != 1 || v.group.graph().vertex_id(0) != v.id)) {
        problems.push_back("vertex " + v.id + ": plain vertex must hold a one-vertex graph");
      }
    }
    std::vector<Edge> plain_edges;
    for (auto const& e : edges) {
      if (e.d0 >= vertices.size() || e.d1 >= vertices.size()) {
        throw Error(ErrorCode::InvalidGraphOfGroups, "edge " + e.id + ": endpoint out of range");
      }
      plain_edges.push_back({e.id, e.d0, e.d1});
      auto const& K = e.group;
      for (int side = 0; side < 2; ++side) {
        auto const& im    = e.images(side);
        auto const& owner = vertices[side == 0 ? e.d0 : e.d1].group;
        std::string where = "edge " + e.id + ": d" + std::to_string(side) + " inclusion";
        if (im.size() != K.order()) {
          problems.push_back(where + " has the wrong length");
          continue;
        }
        if (std::any_of(im.begin(), im.end(), [&](NormalForm const& x) { return !(x.owner() == owner); })) {
          problems.push_back(where + " uses elements of another group");
          continue;
        }
        std::set<std::vector<std::int32_t>> codes;
        for (auto const& x : im) {
          codes.insert(x.code());
        }
        if (codes.size() != im.size()) {
          problems.push_back(where + " is not injective");
        }
        bool hom = true;
        for (elem_t a = 0; a < K.order() && hom; ++a) {
          for (elem_t b = 0; b < K.order() && hom; ++b) {
            hom = multiply(im[a], im[b]) == im[K.mul(a, b)];
          }
        }
        if (!hom) {
          problems.push_back(where + " is not a homomorphism");
        }
      }
    }
    FiniteGraph graph(ids, plain_edges);
    if (!graph.is_connected()) {
      problems.push_back("graph is disconnected");
    }
    if (auto why = check_spanning_tree(graph, tree); !why.empty()) {
      problems.push_back(why);
    }
    if (basepoint >= vertices.size()) {
      problems.push_back("basepoint out of range");
    }
    if (!problems.empty()) {
      std::string msg;
      for (auto const& p : problems) {
        msg += (msg.empty() ? "" : "; ") + p;
      }
      throw Error(ErrorCode::InvalidGraphOfGroups, msg);
    }
    auto d       = std::make_shared<Data>();
    d->graph     = graph;
    d->tree      = SpanningTree(graph, tree);
    d->base      = basepoint;
    d->vertices  = std::move(vertices);
    d->edges     = std::move(edges);
    _d           = d;
    for (vertex_t u = 0; u < d->vertices.size(); ++u) {
      auto const& sub = d->vertices[u].group;
      for (auto const& s : sub.presentation().generators) {
        auto n = name(u, s);
        d->gens.emplace(n, Gen{false, u, sub.element(s)});
        d->gen_order.push_back(n);
      }
    }
    for (edge_t e = 0; e < d->edges.size(); ++e) {
      auto n = "t(" + d->edges[e].id + ")";
      d->gens.emplace(n, Gen{true, e, std::nullopt});
      d->gen_order.push_back(n);
    }
    if (d->gens.size() != d->gen_order.size()) {
      throw Error(ErrorCode::InvalidGraphOfGroups, "generator names collide");
    }
  }

  CompositeGog CompositeGog::from_gog(GraphOfGroups const& g) {
    std::vector<CompositeVertex> vs;
    auto const&                  graph = g.graph();
    for (vertex_t v = 0; v < graph.num_vertices(); ++v) {
      vs.push_back(CompositeVertex::plain(graph.vertex_id(v), g.vertex_group(v)));
    }
    std::vector<CompositeEdge> es;
    for (edge_t e = 0; e < graph.num_edges(); ++e) {
      auto const&   ed = graph.edge(e);
      CompositeEdge ce{ed.id, ed.d0, ed.d1, g.edge_group(e), {}, {}};
      for (elem_t k = 0; k < g.edge_group(e).order(); ++k) {
        ce.d0_images.push_back(vs[ed.d0].group.element(Syllable::vertex(0, g.inclusion(e, 0)(k))));
        ce.d1_images.push_back(vs[ed.d1].group.element(Syllable::vertex(0, g.inclusion(e, 1)(k))));
      }
      es.push_back(std::move(ce));
    }
    return CompositeGog(std::move(vs), std::move(es), g.tree().edges(), g.basepoint());
  }

  bool CompositeGog::is_flat() const {
    return std::none_of(_d->vertices.begin(), _d->vertices.end(),
                        [](CompositeVertex const& v) { return v.nested; });
  }

  GraphOfGroups CompositeGog::flatten() const {
    if (!is_flat()) {
      throw Error(ErrorCode::PreconditionFailed, "graph still has nested vertices");
    }
    GogSpec spec;
    spec.graph = _d->graph;
    for (auto const& v : _d->vertices) {
      spec.vertex_groups.push_back(v.group.vertex_group(0));
    }
    for (auto const& e : _d->edges) {
      spec.edge_groups.push_back(e.group);
      GroupHom h0, h1;
      for (std::size_t k = 0; k < e.group.order(); ++k) {
        h0.images.push_back(static_cast<elem_t>(e.d0_images[k].code()[0]));
        h1.images.push_back(static_cast<elem_t>(e.d1_images[k].code()[0]));
      }
      spec.d0.push_back(h0);
      spec.d1.push_back(h1);
    }
    spec.tree      = _d->tree.edges();
    spec.basepoint = _d->base;
    return GraphOfGroups(std::move(spec));
  }

  std::string CompositeGog::name(vertex_t u, Syllable const& s) const {
    auto const& v   = _d->vertices.at(u);
    auto const& sub = v.group;
    if (!v.nested) {
      return sub.format(s);
    }
    if (s.kind == Syllable::Kind::letter) {
      return "t(" + v.id + "/" + sub.graph().edge(s.index).id + ")";
    }
    return v.id + "/" + sub.format(s);
  }

  TextWord CompositeGog::word(vertex_t u, NormalForm const& x) const {
    TextWord out;
    for (auto const& s : x.word()) {
      if (s.kind == Syllable::Kind::letter) {
        out.push_back({name(u, Syllable::letter(s.index, 1)), s.value});
      } else {
        out.push_back({name(u, s), 1});
      }
    }
    return out;
  }

  std::vector<std::string> CompositeGog::vertex_generators(vertex_t u) const {
    std::vector<std::string> out;
    auto const&              sub = _d->vertices.at(u).group;
    for (auto const& s : sub.presentation().generators) {
      out.push_back(name(u, s));
    }
    return out;
  }

  std::vector<std::string> CompositeGog::generators() const {
    return _d->gen_order;
  }

  std::vector<TextWord> CompositeGog::relators() const {
    std::vector<TextWord> out;
    for (edge_t e : _d->tree.edges()) {
      out.push_back({{"t(" + _d->edges[e].id + ")", 1}});
    }
    for (vertex_t u = 0; u < _d->vertices.size(); ++u) {
      for (auto const& r : full_relators(_d->vertices[u].group)) {
        TextWord w;
        for (auto const& s : r) {
          if (s.kind == Syllable::Kind::letter) {
            w.push_back({name(u, Syllable::letter(s.index, 1)), s.value});
          } else {
            w.push_back({name(u, s), 1});
          }
        }
        out.push_back(std::move(w));
      }
    }
    for (auto const& e : _d->edges) {
      TextWord t{{"t(" + e.id + ")", 1}};
      for (std::size_t k = 0; k < e.group.order(); ++k) {
        out.push_back(concat({inverse(word(e.d1, e.d1_images[k])), inverse(t),
                              word(e.d0, e.d0_images[k]), t}));
      }
    }
    return out;
  }

  bool CompositeGog::is_trivial(TextWord const& w) const {
    struct Frame {
      vertex_t   at;
      NormalForm g;
    };
    auto const&        d = *_d;
    std::vector<Frame> frames{{d.base, d.vertices[d.base].group.identity()}};
    std::vector<Step>  steps;

    auto push = [&](edge_t e, int sign) {
      auto const& ed   = d.edges[e];
      vertex_t    to   = sign > 0 ? ed.d1 : ed.d0;
      auto&       top  = frames.back();
      if (!steps.empty() && steps.back().edge == e && steps.back().sign == -sign) {
        if (auto k = find_image(ed.images(sign > 0 ? 0 : 1), top.g)) {
          steps.pop_back();
          frames.pop_back();
          auto& prev = frames.back();
          prev.g     = multiply(prev.g, ed.images(sign > 0 ? 1 : 0)[*k]);
          return;
        }
      }
      steps.push_back({e, sign});
      frames.push_back({to, d.vertices[to].group.identity()});
    };
    auto walk = [&](vertex_t to) {
      for (auto const& s : d.tree.path(frames.back().at, to)) {
        push(s.edge, s.sign);
      }
    };

    for (auto const& l : w) {
      auto it = d.gens.find(l.gen);
      if (it == d.gens.end()) {
        throw Error(ErrorCode::MalformedWord, "unknown generator '" + l.gen + "'");
      }
      auto const& gen = it->second;
      if (gen.letter) {
        auto const& ed = d.edges[gen.index];
        walk(l.exp > 0 ? ed.d0 : ed.d1);
        push(gen.index, l.exp);
      } else {
        walk(gen.index);
        auto& top = frames.back();
        top.g     = multiply(top.g, l.exp > 0 ? *gen.element : invert(*gen.element));
      }
    }
    walk(d.base);
    return steps.empty() && frames.back().g.is_identity();
  }

  ////////////////////////////////////////////////////////////////////////
  // Witnesses
  ////////////////////////////////////////////////////////////////////////

  TextWord substitute(TextWord const& w, std::map<std::string, TextWord> const& map) {
    TextWord out;
    for (auto const& l : w) {
      auto it = map.find(l.gen);
      if (it == map.end()) {
        throw Error(ErrorCode::MalformedWord, "no image for generator '" + l.gen + "'");
      }
      auto const& img = l.exp > 0 ? it->second : inverse(it->second);
      out.insert(out.end(), img.begin(), img.end());
    }
    return out;
  }

  WitnessReport validate_witness(GogIsoWitness const& w) {
    WitnessReport r;
    auto          check = [&](bool ok, std::string const& what) {
      ++r.checks;
      if (!ok) {
        r.ok = false;
        r.failures.push_back(what);
      }
    };
    auto guarded = [&](auto&& f, std::string const& what) {
      try {
        check(f(), what);
      } catch (Error const& e) {
        check(false, what + " (" + e.what() + ")");
      }
    };
    auto const& S = *w.source;
    auto const& T = *w.target;
    for (auto const& rel : S.relators()) {
      guarded([&] { return T.is_trivial(substitute(rel, w.psi)); },
              "psi does not kill source relator " + format_text_word(rel));
    }
    for (auto const& rel : T.relators()) {
      guarded([&] { return S.is_trivial(substitute(rel, w.phi)); },
              "phi does not kill target relator " + format_text_word(rel));
    }
    for (auto const& s : S.generators()) {
      guarded(
          [&] {
            return S.is_trivial(concat({substitute(substitute({{s, 1}}, w.psi), w.phi), {{s, -1}}}));
          },
          "phi(psi(" + s + ")) != " + s);
    }
    for (auto const& s : T.generators()) {
      guarded(
          [&] {
            return T.is_trivial(concat({substitute(substitute({{s, 1}}, w.phi), w.psi), {{s, -1}}}));
          },
          "psi(phi(" + s + ")) != " + s);
    }
    return r;
  }

  GogIsoWitness compose(GogIsoWitness const& first, GogIsoWitness const& second) {
    GogIsoWitness out{first.source, second.target, {}, {}};
    for (auto const& [s, img] : first.psi) {
      out.psi[s] = substitute(img, second.psi);
    }
    for (auto const& [s, img] : second.phi) {
      out.phi[s] = substitute(img, first.phi);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::map<std::string, TextWord> identity_map(CompositeGog const& g) {
      std::map<std::string, TextWord> out;
      for (auto const& s : g.generators()) {
        out[s] = {{s, 1}};
      }
      return out;
    }

    SurgeryResult finish(CompositeGog const&                source,
                         CompositeGog                       target,
                         std::map<std::string, TextWord>    psi,
                         std::map<std::string, TextWord>    phi) {
      auto s = std::make_shared<CompositeGog const>(source);
      auto t = std::make_shared<CompositeGog const>(target);
      return {std::move(target), GogIsoWitness{s, t, std::move(psi), std::move(phi)}};
    }

    TextWord letter(std::string const& edge_id) {
      return {{"t(" + edge_id + ")", 1}};
    }

    // For every vertex other than `hub`, the tree edge at the hub on its
    // tree path to the hub.
    std::vector<std::optional<edge_t>> hub_edges(CompositeGog const& g, vertex_t hub) {
      std::vector<std::optional<edge_t>> out(g.graph().num_vertices());
      for (vertex_t u = 0; u < out.size(); ++u) {
        if (u != hub) {
          out[u] = g.tree().path(u, hub).back().edge;
        }
      }
      return out;
    }
  }  // namespace

  SurgeryResult reverse_edge(CompositeGog const& g, edge_t e) {
    if (e >= g.edges().size()) {
      throw Error(ErrorCode::UnknownId, "edge index out of range");
    }
    auto edges = g.edges();
    std::swap(edges[e].d0, edges[e].d1);
    std::swap(edges[e].d0_images, edges[e].d1_images);
    CompositeGog out(g.vertices(), edges, g.tree_edges(), g.basepoint());
    auto         psi = identity_map(g);
    auto         t   = "t(" + g.edges()[e].id + ")";
    psi[t]           = {{t, -1}};
    auto phi         = psi;
    return finish(g, std::move(out), std::move(psi), std::move(phi));
  }

  SurgeryResult collapse_tree_edge(CompositeGog const& g, edge_t e) {
    if (e >= g.edges().size()) {
      throw Error(ErrorCode::UnknownId, "edge index out of range");
    }
    auto const& ed = g.edges()[e];
    if (!g.tree().contains(e)) {
      throw Error(ErrorCode::NotCollapsible, "edge " + ed.id + " is not a tree edge");
    }
    std::optional<int> side;
    for (int s : {1, 0}) {
      auto const& end = g.vertices()[s == 0 ? ed.d0 : ed.d1];
      if (!end.nested && end.group.vertex_group(0).order() == ed.group.order()) {
        side = s;
        break;
      }
    }
    if (!side) {
      throw Error(ErrorCode::NotCollapsible,
                  "neither inclusion of edge " + ed.id + " is onto its endpoint group");
    }
    vertex_t gone = *side == 0 ? ed.d0 : ed.d1;
    vertex_t keep = *side == 0 ? ed.d1 : ed.d0;
    // x in the vanishing group, as an element of the surviving one.
    auto absorb = [&](NormalForm const& x) {
      return ed.images(1 - *side)[*find_image(ed.images(*side), x)];
    };
    auto renumber = [&](vertex_t u) {
      u = u == gone ? keep : u;
      return u > gone ? u - 1 : u;
    };

    std::vector<CompositeVertex> vs;
    for (vertex_t u = 0; u < g.vertices().size(); ++u) {
      if (u != gone) {
        vs.push_back(g.vertices()[u]);
      }
    }
    std::vector<CompositeEdge> es;
    std::vector<edge_t>        tree;
    for (edge_t f = 0; f < g.edges().size(); ++f) {
      if (f == e) {
        continue;
      }
      auto c = g.edges()[f];
      for (int s = 0; s < 2; ++s) {
        if ((s == 0 ? c.d0 : c.d1) == gone) {
          auto& im = s == 0 ? c.d0_images : c.d1_images;
          for (auto& x : im) {
            x = absorb(x);
          }
        }
      }
      c.d0 = renumber(c.d0);
      c.d1 = renumber(c.d1);
      if (g.tree().contains(f)) {
        tree.push_back(es.size());
      }
      es.push_back(std::move(c));
    }
    CompositeGog out(std::move(vs), std::move(es), tree, renumber(g.basepoint()));

    auto psi = identity_map(g);
    auto const& lost = g.vertices()[gone].group;
    for (auto const& s : lost.presentation().generators) {
      psi[g.name(gone, s)] = g.word(keep, absorb(lost.element(s)));
    }
    psi["t(" + ed.id + ")"] = {};
    auto phi                = identity_map(out);
    return finish(g, std::move(out), std::move(psi), std::move(phi));
  }

  SurgeryResult expand_vertex(CompositeGog const&                 g,
                              vertex_t                            w,
                              std::map<edge_t, Attachment> const& attach) {
    auto const& W = g.vertices().at(w);
    if (!W.nested) {
      throw Error(ErrorCode::PreconditionFailed, "vertex " + W.id + " is not nested");
    }
    auto const& S = W.group;
    // Attachment and landing side for every edge at w.
    std::map<edge_t, std::pair<Attachment, int>> at;
    for (edge_t e = 0; e < g.edges().size(); ++e) {
      auto const& ed = g.edges()[e];
      if (ed.d0 == w && ed.d1 == w) {
        throw Error(ErrorCode::PreconditionFailed, "loop " + ed.id + " at the expansion vertex");
      }
      if (ed.d0 != w && ed.d1 != w) {
        continue;
      }
      int         side = ed.d0 == w ? 0 : 1;
      auto const& im   = ed.images(side);
      Attachment  a{0, S.identity()};
      if (auto it = attach.find(e); it != attach.end()) {
        a = it->second;
        if (a.vertex >= S.graph().num_vertices() || !(a.conjugator.owner() == S)) {
          throw Error(ErrorCode::BadAttachment, "attachment of " + ed.id + " names another graph");
        }
      } else {
        auto c = conjugate_finite_into_vertex(S, im);
        a      = {c.v, c.h};
      }
      for (auto const& x : im) {
        if (!vertex_preimage(multiply(invert(a.conjugator), multiply(x, a.conjugator)), a.vertex)) {
          throw Error(ErrorCode::BadAttachment,
                      "edge " + ed.id + ": " + x.text() + " does not conjugate into "
                          + S.graph().vertex_id(a.vertex));
        }
      }
      at.emplace(e, std::pair{a, side});
    }

    // Outer vertices keep their order; w's graph follows.
    std::vector<CompositeVertex> vs;
    std::vector<vertex_t>        index(g.vertices().size());
    for (vertex_t u = 0; u < g.vertices().size(); ++u) {
      if (u != w) {
        index[u] = vs.size();
        vs.push_back(g.vertices()[u]);
      }
    }
    std::size_t const offset = vs.size();
    for (vertex_t x = 0; x < S.graph().num_vertices(); ++x) {
      vs.push_back(CompositeVertex::plain(W.id + "/" + S.graph().vertex_id(x), S.vertex_group(x)));
    }
    auto inner = [&](vertex_t x, elem_t a) {
      return vs[offset + x].group.element(Syllable::vertex(0, a));
    };
    std::vector<CompositeEdge> es;
    std::vector<edge_t>        tree;
    for (edge_t e = 0; e < g.edges().size(); ++e) {
      auto c = g.edges()[e];
      if (auto it = at.find(e); it != at.end()) {
        auto const& [a, side] = it->second;
        auto& im              = side == 0 ? c.d0_images : c.d1_images;
        for (auto& x : im) {
          x = inner(a.vertex,
                    *vertex_preimage(multiply(invert(a.conjugator), multiply(x, a.conjugator)), a.vertex));
        }
        (side == 0 ? c.d0 : c.d1) = offset + a.vertex;
        (side == 0 ? c.d1 : c.d0) = index[side == 0 ? c.d1 : c.d0];
      } else {
        c.d0 = index[c.d0];
        c.d1 = index[c.d1];
      }
      if (g.tree().contains(e)) {
        tree.push_back(es.size());
      }
      es.push_back(std::move(c));
    }
    for (edge_t e = 0; e < S.graph().num_edges(); ++e) {
      auto const&   ed = S.graph().edge(e);
      CompositeEdge c{W.id + "/" + ed.id, offset + ed.d0, offset + ed.d1, S.edge_group(e), {}, {}};
      for (elem_t k = 0; k < S.edge_group(e).order(); ++k) {
        c.d0_images.push_back(inner(ed.d0, S.inclusion(e, 0)(k)));
        c.d1_images.push_back(inner(ed.d1, S.inclusion(e, 1)(k)));
      }
      if (S.is_tree_edge(e)) {
        tree.push_back(es.size());
      }
      es.push_back(std::move(c));
    }
    vertex_t base = g.basepoint() == w ? offset + S.basepoint() : index[g.basepoint()];
    CompositeGog out(std::move(vs), std::move(es), tree, base);

    // Outer vertex u is conjugated by the attachment of the tree edge that
    // leads from it to w.
    auto     via = hub_edges(g, w);
    auto     c   = [&](vertex_t u) { return g.word(w, at.at(*via[u]).first.conjugator); };
    auto     psi = identity_map(g);
    auto     phi = identity_map(out);
    for (vertex_t u = 0; u < g.vertices().size(); ++u) {
      if (u == w) {
        continue;
      }
      for (auto const& s : g.vertex_generators(u)) {
        psi[s] = concat({c(u), {{s, 1}}, inverse(c(u))});
        phi[s] = concat({inverse(c(u)), {{s, 1}}, c(u)});
      }
    }
    for (edge_t e = 0; e < g.edges().size(); ++e) {
      auto const& ed = g.edges()[e];
      auto        t  = letter(ed.id);
      if (auto it = at.find(e); it != at.end()) {
        auto l = g.word(w, it->second.first.conjugator);
        if (it->second.second == 1) {
          psi[t[0].gen] = concat({c(ed.d0), t, inverse(l)});
          phi[t[0].gen] = concat({inverse(c(ed.d0)), t, l});
        } else {
          psi[t[0].gen] = concat({l, t, inverse(c(ed.d1))});
          phi[t[0].gen] = concat({inverse(l), t, c(ed.d1)});
        }
      } else {
        psi[t[0].gen] = concat({c(ed.d0), t, inverse(c(ed.d1))});
        phi[t[0].gen] = concat({inverse(c(ed.d0)), t, c(ed.d1)});
      }
    }
    return finish(g, std::move(out), std::move(psi), std::move(phi));
  }

  ConjugatorTable find_delta_conjugators(CompositeGog const& g,
                                         vertex_t            v,
                                         Subgroup const&     chi,
                                         std::size_t         radius) {
    auto const& V = g.vertices().at(v);
    if (V.nested) {
      throw Error(ErrorCode::PreconditionFailed, "vertex " + V.id + " is nested");
    }
    auto const&     G = V.group.vertex_group(0);
    ConjugatorTable table{v, chi, {}};
    for (edge_t e = 0; e < g.edges().size(); ++e) {
      auto const& ed = g.edges()[e];
      if (ed.d0 != v && ed.d1 != v) {
        continue;
      }
      auto const& im = ed.images(ed.d0 == v ? 0 : 1);
      if (chi.size() % im.size() != 0) {
        throw Error(ErrorCode::NotFoundWithinRadius,
                    "edge " + ed.id + ": order " + std::to_string(im.size())
                        + " does not divide |chi| = " + std::to_string(chi.size()));
      }
      std::optional<elem_t> found;
      for (elem_t d = 0; d < G.order() && !found; ++d) {
        if (V.group.element(Syllable::vertex(0, d)).syllable_count() > radius) {
          continue;
        }
        bool inside = std::all_of(im.begin(), im.end(), [&](NormalForm const& x) {
          return chi.contains(G.conjugate(static_cast<elem_t>(x.code()[0]), d));
        });
        if (inside) {
          found = d;
        }
      }
      if (!found) {
        throw Error(ErrorCode::NotFoundWithinRadius,
                    "edge " + ed.id + ": no conjugator within radius " + std::to_string(radius));
      }
      table.delta[e] = *found;
    }
    return table;
  }

  SurgeryResult attach_amalgam_vertex(CompositeGog const&    g,
                                      vertex_t               v,
                                      ConjugatorTable const& table) {
    auto const& V = g.vertices().at(v);
    if (V.nested) {
      throw Error(ErrorCode::PreconditionFailed, "vertex " + V.id + " is nested");
    }
    auto const& G = V.group.vertex_group(0);
    for (edge_t e = 0; e < g.edges().size(); ++e) {
      auto const& ed = g.edges()[e];
      if (ed.d1 == v) {
        throw Error(ErrorCode::PreconditionFailed,
                    "edge " + ed.id + " ends at " + V.id + "; reverse it first");
      }
      if (ed.d0 == v && g.tree().contains(e)) {
        auto const& far = g.vertices()[ed.d1];
        if (!far.nested && far.group.vertex_group(0).order() == ed.group.order()) {
          throw Error(ErrorCode::PreconditionFailed,
                      "tree edge " + ed.id + " is collapsible; collapse it first");
        }
      }
    }
    if (table.v != v || !is_subgroup(G, table.chi)) {
      throw Error(ErrorCode::TableInvalid, "chi is not a subgroup of the vertex group");
    }
    auto const& chi = table.chi;
    for (edge_t e = 0; e < g.edges().size(); ++e) {
      auto const& ed = g.edges()[e];
      if (ed.d0 != v) {
        continue;
      }
      auto it = table.delta.find(e);
      if (it == table.delta.end()) {
        throw Error(ErrorCode::TableInvalid, "no conjugator for edge " + ed.id);
      }
      if (it->second >= G.order()) {
        throw Error(ErrorCode::TableInvalid, "conjugator for " + ed.id + " is not in the vertex group");
      }
      for (auto const& x : ed.d0_images) {
        if (!chi.contains(G.conjugate(static_cast<elem_t>(x.code()[0]), it->second))) {
          throw Error(ErrorCode::TableInvalid,
                      "edge " + ed.id + ": conjugated image leaves chi at " + x.text());
        }
      }
    }

    // chi as a group in its own right; local index i is chi.elements[i].
    std::vector<std::vector<elem_t>> rows(chi.size(), std::vector<elem_t>(chi.size()));
    auto local = [&](elem_t x) {
      return static_cast<elem_t>(
          std::lower_bound(chi.elements.begin(), chi.elements.end(), x) - chi.elements.begin());
    };
    for (std::size_t i = 0; i < chi.size(); ++i) {
      for (std::size_t j = 0; j < chi.size(); ++j) {
        rows[i][j] = local(G.mul(chi.elements[i], chi.elements[j]));
      }
    }
    FiniteGroup  X       = FiniteGroup::from_table(rows);
    std::string  wid     = V.id + ".delta";
    std::string  eid     = V.id + ".chi";
    auto         vs      = g.vertices();
    vs[v]                = CompositeVertex::plain(V.id, X);
    vs.push_back(CompositeVertex::plain(wid, G));
    vertex_t const wv    = vs.size() - 1;
    auto           elem  = [&](vertex_t u, elem_t a) { return vs[u].group.element(Syllable::vertex(0, a)); };
    auto           es    = g.edges();
    for (edge_t e = 0; e < es.size(); ++e) {
      if (es[e].d0 == v) {
        elem_t d = table.delta.at(e);
        for (auto& x : es[e].d0_images) {
          x = elem(v, local(G.conjugate(static_cast<elem_t>(x.code()[0]), d)));
        }
      }
    }
    CompositeEdge link{eid, v, wv, X, {}, {}};
    for (elem_t i = 0; i < X.order(); ++i) {
      link.d0_images.push_back(elem(v, i));
      link.d1_images.push_back(elem(wv, chi.elements[i]));
    }
    es.push_back(std::move(link));
    auto tree = g.tree_edges();
    tree.push_back(es.size() - 1);
    CompositeGog out(vs, std::move(es), tree, g.basepoint());

    // Vertex u sits behind the tree edge via[u] at v and is conjugated by
    // its delta.
    auto via   = hub_edges(g, v);
    auto delta = [&](vertex_t u) -> elem_t { return u == v ? G.identity() : table.delta.at(*via[u]); };
    auto in_target = [&](elem_t a) { return out.word(wv, elem(wv, a)); };
    auto in_source = [&](elem_t a) { return g.word(v, V.group.element(Syllable::vertex(0, a))); };

    std::map<std::string, TextWord> psi, phi;
    for (elem_t a = 0; a < G.order(); ++a) {
      if (a != G.identity()) {
        psi[in_source(a)[0].gen] = in_target(a);
        phi[in_target(a)[0].gen] = in_source(a);
      }
    }
    for (elem_t i = 0; i < X.order(); ++i) {
      if (i != X.identity()) {
        phi[out.word(v, elem(v, i))[0].gen] = in_source(chi.elements[i]);
      }
    }
    phi["t(" + eid + ")"] = {};
    for (vertex_t u = 0; u < g.vertices().size(); ++u) {
      if (u == v) {
        continue;
      }
      for (auto const& s : g.vertex_generators(u)) {
        psi[s] = concat({in_target(delta(u)), {{s, 1}}, inverse(in_target(delta(u)))});
        phi[s] = concat({inverse(in_source(delta(u))), {{s, 1}}, in_source(delta(u))});
      }
    }
    for (edge_t e = 0; e < g.edges().size(); ++e) {
      auto const& ed = g.edges()[e];
      auto        t  = letter(ed.id);
      elem_t      c0 = ed.d0 == v ? table.delta.at(e) : delta(ed.d0);
      elem_t      c1 = delta(ed.d1);
      psi[t[0].gen]  = concat({in_target(c0), t, inverse(in_target(c1))});
      phi[t[0].gen]  = concat({inverse(in_source(c0)), t, in_source(c1)});
    }
    return finish(g, std::move(out), std::move(psi), std::move(phi));
  }

  AmalgamSplit collapse_to_amalgam(GraphOfGroups const& g, Subgraph const& lambda) {
    auto const& graph = g.graph();
    if (lambda.vertices.size() != graph.num_vertices() || lambda.edges.size() != graph.num_edges()) {
      throw Error(ErrorCode::WrongShape, "subgraph does not match the graph");
    }
    Subgraph              delta{std::vector<bool>(graph.num_vertices()), std::vector<bool>(graph.num_edges())};
    std::vector<edge_t>   crossing;
    for (vertex_t u = 0; u < graph.num_vertices(); ++u) {
      delta.vertices[u] = !lambda.vertices[u];
    }
    for (edge_t e = 0; e < graph.num_edges(); ++e) {
      bool a = lambda.vertices[graph.edge(e).d0];
      bool b = lambda.vertices[graph.edge(e).d1];
      if (a != b) {
        crossing.push_back(e);
      } else if (!a) {
        delta.edges[e] = true;
      } else if (!lambda.edges[e]) {
        throw Error(ErrorCode::WrongShape, "edge " + graph.edge(e).id + " inside the subgraph is missing");
      }
    }
    if (crossing.size() != 1) {
      throw Error(ErrorCode::WrongShape,
                  std::to_string(crossing.size()) + " edges join the subgraph to its complement");
    }
    edge_t e = crossing[0];
    if (!g.is_tree_edge(e)) {
      throw Error(ErrorCode::WrongShape, "joining edge " + graph.edge(e).id + " is not a tree edge");
    }
    try {
      AmalgamSplit out{delta,
                       lambda,
                       e,
                       extract_subgraph(g, delta),
                       extract_subgraph(g, lambda),
                       {},
                       subgraph_predicate(g, delta),
                       subgraph_predicate(g, lambda)};
      for (elem_t k = 0; k < g.edge_group(e).order(); ++k) {
        out.chi.push_back(g.element(Syllable::vertex(graph.edge(e).d0, g.inclusion(e, 0)(k))));
      }
      return out;
    } catch (Error const& err) {
      if (err.code() == ErrorCode::BadSubgraph) {
        throw Error(ErrorCode::WrongShape, err.what());
      }
      throw;
    }
  }

}  // namespace gogkit
