#include "gogkit/gog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "gogkit/error.hpp"

namespace gogkit {

  namespace {
    std::int32_t step_code(edge_t e, int sign) {
      return static_cast<std::int32_t>(2 * e + (sign < 0 ? 1 : 0));
    }
    edge_t step_edge(std::int32_t code) {
      return static_cast<edge_t>(code / 2);
    }
    int step_sign(std::int32_t code) {
      return (code % 2) ? -1 : +1;
    }

    std::optional<std::string> hom_violation(FiniteGroup const& source,
                                             FiniteGroup const& target,
                                             GroupHom const&    hom) {
      if (hom.images.size() != source.order()) {
        return "image array has length " + std::to_string(hom.images.size())
               + ", expected " + std::to_string(source.order());
      }
      for (elem_t x = 0; x < source.order(); ++x) {
        if (hom.images[x] >= target.order()) {
          return "image of g" + std::to_string(x) + " is out of range";
        }
      }
      for (elem_t x = 0; x < source.order(); ++x) {
        for (elem_t y = 0; y < source.order(); ++y) {
          if (hom(source.mul(x, y)) != target.mul(hom(x), hom(y))) {
            return "not a homomorphism at the pair (g" + std::to_string(x) + ", g"
                   + std::to_string(y) + ")";
          }
        }
      }
      if (!is_injective(hom, target.order())) {
        return "not injective";
      }
      return std::nullopt;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  ValidationReport validate(GogSpec const& spec) {
    ValidationReport r;
    auto const&      g = spec.graph;
    if (g.num_vertices() == 0) {
      r.violations.push_back("graph has no vertices");
      return r;
    }
    if (spec.vertex_groups.size() != g.num_vertices()) {
      r.violations.push_back("vertex group count does not match the vertex count");
      return r;
    }
    if (spec.edge_groups.size() != g.num_edges() || spec.d0.size() != g.num_edges()
        || spec.d1.size() != g.num_edges()) {
      r.violations.push_back("edge group or inclusion count does not match the edge count");
      return r;
    }
    for (edge_t e = 0; e < g.num_edges(); ++e) {
      auto const& ed = g.edge(e);
      if (auto why
          = hom_violation(spec.edge_groups[e], spec.vertex_groups[ed.d0], spec.d0[e])) {
        r.violations.push_back("edge " + ed.id + ": d0 inclusion " + *why);
      }
      if (auto why
          = hom_violation(spec.edge_groups[e], spec.vertex_groups[ed.d1], spec.d1[e])) {
        r.violations.push_back("edge " + ed.id + ": d1 inclusion " + *why);
      }
    }
    auto comps = g.components();
    if (comps.size() != 1) {
      r.violations.push_back("graph is disconnected (" + std::to_string(comps.size())
                             + " components)");
    } else if (spec.tree) {
      if (auto why = check_spanning_tree(g, *spec.tree); !why.empty()) {
        r.violations.push_back("spanning tree: " + why);
      }
    }
    if (spec.basepoint && *spec.basepoint >= g.num_vertices()) {
      r.violations.push_back("basepoint out of range");
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  GraphOfGroups::GraphOfGroups(GogSpec spec) {
    auto report = validate(spec);
    if (!report.ok()) {
      std::string msg;
      for (auto const& v : report.violations) {
        msg += (msg.empty() ? "" : "; ") + v;
      }
      throw Error(ErrorCode::InvalidGraphOfGroups, msg);
    }
    auto d   = std::make_shared<Data>();
    d->spec  = std::move(spec);
    auto& sp = d->spec;
    d->tree  = sp.tree ? SpanningTree(sp.graph, *sp.tree) : spanning_tree(sp.graph);
    sp.tree  = d->tree.edges();
    d->base  = sp.basepoint.value_or(0);
    sp.basepoint = d->base;

    auto const& graph = sp.graph;
    d->ends.resize(2 * graph.num_edges());
    for (edge_t e = 0; e < graph.num_edges(); ++e) {
      for (int side = 0; side < 2; ++side) {
        auto const& G   = sp.vertex_groups[side == 0 ? graph.edge(e).d0 : graph.edge(e).d1];
        auto const& inc = side == 0 ? sp.d0[e] : sp.d1[e];
        auto&       t   = d->ends[2 * e + side];
        t.pre.assign(G.order(), -1);
        for (elem_t k = 0; k < inc.images.size(); ++k) {
          t.pre[inc(k)] = static_cast<std::int32_t>(k);
        }
        t.rep.assign(G.order(), 0);
        std::vector<bool> done(G.order(), false);
        auto              mark = [&](elem_t r) {
          for (elem_t k = 0; k < inc.images.size(); ++k) {
            elem_t x  = G.mul(r, inc(k));
            t.rep[x]  = r;
            done[x]   = true;
          }
          t.reps.push_back(r);
        };
        mark(G.identity());
        for (elem_t x = 0; x < G.order(); ++x) {
          if (!done[x]) {
            mark(x);
          }
        }
        t.part.assign(G.order(), 0);
        for (elem_t x = 0; x < G.order(); ++x) {
          t.part[x] = static_cast<elem_t>(t.pre[G.mul(G.inverse(t.rep[x]), x)]);
        }
      }
    }
    d->to_vertex.resize(graph.num_vertices());
    d->from_vertex.resize(graph.num_vertices());
    for (vertex_t v = 0; v < graph.num_vertices(); ++v) {
      d->to_vertex[v]   = d->tree.path(d->base, v);
      d->from_vertex[v] = d->tree.path(v, d->base);
    }
    _d = std::move(d);
  }

  GraphOfGroups GraphOfGroups::with_basepoint(vertex_t v) const {
    GogSpec s   = _d->spec;
    s.basepoint = v;
    return GraphOfGroups(std::move(s));
  }

  std::optional<elem_t> GraphOfGroups::preimage(edge_t e, int side, elem_t g) const {
    auto k = _d->ends[2 * e + side].pre[g];
    if (k < 0) {
      return std::nullopt;
    }
    return static_cast<elem_t>(k);
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  Word GraphOfGroups::parse_word(std::string_view text) const {
    Word out;
    text = trim(text);
    if (text.empty() || text == "1") {
      return out;
    }
    auto const& graph = this->graph();
    std::size_t pos   = 0;
    while (pos <= text.size()) {
      auto             star  = text.find('*', pos);
      std::string_view token = trim(text.substr(pos, star == text.npos ? text.npos : star - pos));
      pos                    = star == text.npos ? text.size() + 1 : star + 1;
      if (token.empty()) {
        throw Error(ErrorCode::MalformedWord, "empty syllable in '" + std::string(text) + "'");
      }
      if (token == "1") {
        continue;
      }
      if (token.starts_with("t(")) {
        auto close = token.rfind(')');
        if (close == token.npos) {
          throw Error(ErrorCode::MalformedWord, "unclosed letter '" + std::string(token) + "'");
        }
        std::string      id(token.substr(2, close - 2));
        std::string_view exp = token.substr(close + 1);
        int              sign;
        if (exp.empty() || exp == "^1" || exp == "^+1") {
          sign = 1;
        } else if (exp == "^-1") {
          sign = -1;
        } else {
          throw Error(ErrorCode::MalformedWord, "bad exponent in '" + std::string(token) + "'");
        }
        if (!graph.has_edge(id)) {
          throw Error(ErrorCode::MalformedWord, "unknown edge '" + id + "'");
        }
        out.push_back(Syllable::letter(graph.edge_index(id), sign));
        continue;
      }
      auto colon = token.rfind(':');
      if (colon == token.npos) {
        throw Error(ErrorCode::MalformedWord, "cannot read syllable '" + std::string(token) + "'");
      }
      std::string      id(trim(token.substr(0, colon)));
      std::string_view el = trim(token.substr(colon + 1));
      if (!graph.has_vertex(id)) {
        throw Error(ErrorCode::MalformedWord, "unknown vertex '" + id + "'");
      }
      vertex_t    v = graph.vertex_index(id);
      std::size_t n = 0;
      if (el.size() < 2 || el[0] != 'g'
          || std::from_chars(el.data() + 1, el.data() + el.size(), n).ptr
                 != el.data() + el.size()) {
        throw Error(ErrorCode::MalformedWord, "bad element '" + std::string(el) + "'");
      }
      if (n >= vertex_group(v).order()) {
        throw Error(ErrorCode::MalformedWord,
                    "element g" + std::to_string(n) + " out of range at vertex " + id);
      }
      out.push_back(Syllable::vertex(v, static_cast<elem_t>(n)));
    }
    return out;
  }

  std::string GraphOfGroups::format(Syllable const& s) const {
    if (s.kind == Syllable::Kind::vertex) {
      return graph().vertex_id(s.index) + ":g" + std::to_string(s.value);
    }
    return "t(" + graph().edge(s.index).id + ")" + (s.value < 0 ? "^-1" : "");
  }

  std::string GraphOfGroups::format_word(Word const& w) const {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) {
        out += " * ";
      }
      out += format(w[i]);
    }
    return out;
  }

  Word GraphOfGroups::inverse_word(Word const& w) const {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (it->kind == Syllable::Kind::vertex) {
        out.push_back(Syllable::vertex(
            it->index, vertex_group(it->index).inverse(static_cast<elem_t>(it->value))));
      } else {
        out.push_back(Syllable::letter(it->index, -it->value));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction
  ////////////////////////////////////////////////////////////////////////

  class GraphOfGroups::Reducer {
   public:
    explicit Reducer(Data const& d)
        : _d(d), _cur(d.base), _acc(d.spec.vertex_groups[d.base].identity()) {}

    void element(elem_t g) {
      _acc = group(_cur).mul(_acc, g);
    }

    void step(edge_t e, int sign) {
      auto const& ed   = _d.spec.graph.edge(e);
      int         side = sign > 0 ? 0 : 1;  // the end we leave through
      if (!_stack.empty() && _stack.back().step == step_code(e, -sign)) {
        auto k = _d.ends[2 * e + side].pre[_acc];
        if (k >= 0) {
          auto const& other = side == 0 ? _d.spec.d1[e] : _d.spec.d0[e];
          _cur              = _stack.back().from;
          _acc = group(_cur).mul(_stack.back().g, other(static_cast<elem_t>(k)));
          _stack.pop_back();
          return;
        }
      }
      _stack.push_back({_acc, step_code(e, sign), _cur});
      _cur = sign > 0 ? ed.d1 : ed.d0;
      _acc = group(_cur).identity();
    }

    void path(std::vector<Step> const& steps) {
      for (auto const& s : steps) {
        step(s.edge, s.sign);
      }
    }

    void syllable(Syllable const& s) {
      if (s.kind == Syllable::Kind::vertex) {
        path(_d.to_vertex[s.index]);
        element(static_cast<elem_t>(s.value));
        path(_d.from_vertex[s.index]);
        return;
      }
      if (_d.tree.contains(s.index)) {
        return;
      }
      auto const& ed = _d.spec.graph.edge(s.index);
      if (s.value > 0) {
        path(_d.to_vertex[ed.d0]);
        step(s.index, +1);
        path(_d.from_vertex[ed.d1]);
      } else {
        path(_d.to_vertex[ed.d1]);
        step(s.index, -1);
        path(_d.from_vertex[ed.d0]);
      }
    }

    void code(std::vector<std::int32_t> const& c) {
      element(static_cast<elem_t>(c[0]));
      for (std::size_t i = 1; i < c.size(); i += 2) {
        step(step_edge(c[i]), step_sign(c[i]));
        element(static_cast<elem_t>(c[i + 1]));
      }
    }

    void inverse_code(std::vector<std::int32_t> const& c) {
      // Walk the loop backwards; vertices are tracked by the reducer itself.
      std::vector<vertex_t> at(c.size() / 2 + 1);
      at[0] = _d.base;
      for (std::size_t i = 1; i < c.size(); i += 2) {
        auto const& ed  = _d.spec.graph.edge(step_edge(c[i]));
        at[i / 2 + 1]   = step_sign(c[i]) > 0 ? ed.d1 : ed.d0;
      }
      for (std::size_t j = c.size(); j-- > 0;) {
        if (j % 2 == 0) {
          element(group(at[j / 2]).inverse(static_cast<elem_t>(c[j])));
        } else {
          step(step_edge(c[j]), -step_sign(c[j]));
        }
      }
    }

    std::vector<std::int32_t> finish() {
      // Left to right transversal normalization.
      std::vector<std::int32_t> out;
      out.reserve(2 * _stack.size() + 1);
      elem_t carry_k = 0;
      bool   carry   = false;
      for (std::size_t i = 0; i < _stack.size(); ++i) {
        auto const& f = _stack[i];
        auto const& G = group(f.from);
        elem_t      g = f.g;
        if (carry) {
          g = G.mul(carry_k, g);
        }
        edge_t e    = step_edge(f.step);
        int    side = step_sign(f.step) > 0 ? 0 : 1;
        auto&  t    = _d.ends[2 * e + side];
        elem_t k    = t.part[g];
        out.push_back(static_cast<std::int32_t>(t.rep[g]));
        out.push_back(f.step);
        auto const& other = side == 0 ? _d.spec.d1[e] : _d.spec.d0[e];
        carry_k           = other(k);
        carry             = true;
      }
      elem_t last = _acc;
      if (carry) {
        last = group(_cur).mul(carry_k, last);
      }
      out.push_back(static_cast<std::int32_t>(last));
      return out;
    }

   private:
    FiniteGroup const& group(vertex_t v) const {
      return _d.spec.vertex_groups[v];
    }

    struct Frame {
      elem_t       g;
      std::int32_t step;
      vertex_t     from;
    };

    Data const&        _d;
    std::vector<Frame> _stack;
    vertex_t           _cur;
    elem_t             _acc;
  };

  NormalForm GraphOfGroups::reduce(Word const& w) const {
    Reducer r(*_d);
    for (auto const& s : w) {
      if (s.kind == Syllable::Kind::vertex
          && (s.index >= graph().num_vertices()
              || static_cast<std::size_t>(s.value) >= vertex_group(s.index).order())) {
        throw Error(ErrorCode::MalformedWord, "vertex syllable out of range");
      }
      if (s.kind == Syllable::Kind::letter
          && (s.index >= graph().num_edges() || (s.value != 1 && s.value != -1))) {
        throw Error(ErrorCode::MalformedWord, "letter syllable out of range");
      }
      r.syllable(s);
    }
    return NormalForm(*this, r.finish());
  }

  NormalForm GraphOfGroups::parse(std::string_view text) const {
    return reduce(parse_word(text));
  }

  NormalForm GraphOfGroups::identity() const {
    return NormalForm(*this, {static_cast<std::int32_t>(vertex_group(_d->base).identity())});
  }

  NormalForm GraphOfGroups::element(Syllable const& s) const {
    return reduce(Word{s});
  }

  Presentation GraphOfGroups::presentation() const {
    Presentation p;
    auto const&  graph = this->graph();
    for (vertex_t v = 0; v < graph.num_vertices(); ++v) {
      auto const& G = vertex_group(v);
      for (elem_t x = 0; x < G.order(); ++x) {
        if (x != G.identity()) {
          p.generators.push_back(Syllable::vertex(v, x));
        }
      }
    }
    for (edge_t e = 0; e < graph.num_edges(); ++e) {
      p.generators.push_back(Syllable::letter(e, 1));
    }
    for (edge_t e : tree().edges()) {
      p.relators.push_back(Word{Syllable::letter(e, 1)});
    }
    for (edge_t e = 0; e < graph.num_edges(); ++e) {
      auto const& ed = graph.edge(e);
      auto const& K  = edge_group(e);
      for (elem_t k = 0; k < K.order(); ++k) {
        Word   w;
        elem_t a = vertex_group(ed.d1).inverse(inclusion(e, 1)(k));
        elem_t b = inclusion(e, 0)(k);
        if (a != vertex_group(ed.d1).identity()) {
          w.push_back(Syllable::vertex(ed.d1, a));
        }
        w.push_back(Syllable::letter(e, -1));
        if (b != vertex_group(ed.d0).identity()) {
          w.push_back(Syllable::vertex(ed.d0, b));
        }
        w.push_back(Syllable::letter(e, 1));
        p.relators.push_back(std::move(w));
      }
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ball
  ////////////////////////////////////////////////////////////////////////

  std::vector<NormalForm> GraphOfGroups::ball(std::size_t radius, std::size_t cap) const {
    auto const&                            graph = this->graph();
    std::vector<std::vector<std::int32_t>> found;
    std::vector<std::int32_t>              code;

    // Depth first over reduced loops: at each vertex either stop (only at
    // the basepoint) or pick an outgoing step and a transversal element.
    std::function<void(vertex_t, std::int32_t, std::size_t)> walk
        = [&](vertex_t cur, std::int32_t prev, std::size_t cost) {
            auto const& G = vertex_group(cur);
            if (cur == _d->base) {
              for (elem_t g = 0; g < G.order(); ++g) {
                if (cost + (g != G.identity()) <= radius) {
                  code.push_back(static_cast<std::int32_t>(g));
                  found.push_back(code);
                  code.pop_back();
                  if (found.size() > cap) {
                    throw Error(ErrorCode::BallTooLarge,
                                "ball of radius " + std::to_string(radius) + " exceeds "
                                    + std::to_string(cap) + " elements");
                  }
                }
              }
            }
            for (edge_t e = 0; e < graph.num_edges(); ++e) {
              std::size_t step_cost = is_tree_edge(e) ? 0 : 1;
              for (int sign : {+1, -1}) {
                int side = sign > 0 ? 0 : 1;
                if (end(e, side) != cur) {
                  continue;
                }
                bool backtrack = prev == step_code(e, -sign);
                for (elem_t r : coset_reps(e, side)) {
                  bool trivial = r == G.identity();
                  if (backtrack && trivial) {
                    continue;
                  }
                  std::size_t c = cost + step_cost + (trivial ? 0 : 1);
                  if (c > radius) {
                    continue;
                  }
                  code.push_back(static_cast<std::int32_t>(r));
                  code.push_back(step_code(e, sign));
                  walk(end(e, 1 - side), step_code(e, sign), c);
                  code.pop_back();
                  code.pop_back();
                }
              }
            }
          };
    walk(_d->base, -1, 0);

    std::vector<std::pair<std::pair<std::size_t, std::string>, std::size_t>> keys;
    std::vector<NormalForm>                                                  forms;
    forms.reserve(found.size());
    for (auto& c : found) {
      forms.emplace_back(*this, std::move(c));
    }
    keys.reserve(forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i) {
      keys.push_back({{forms[i].syllable_count(), forms[i].text()}, i});
    }
    std::sort(keys.begin(), keys.end());
    std::vector<NormalForm> out;
    out.reserve(forms.size());
    for (auto const& k : keys) {
      out.push_back(std::move(forms[k.second]));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // NormalForm
  ////////////////////////////////////////////////////////////////////////

  Word NormalForm::word() const {
    Word        out;
    auto const& g   = _owner;
    vertex_t    cur = g.basepoint();
    for (std::size_t i = 0; i < _code.size(); ++i) {
      if (i % 2 == 0) {
        elem_t x = static_cast<elem_t>(_code[i]);
        if (x != g.vertex_group(cur).identity()) {
          out.push_back(Syllable::vertex(cur, x));
        }
      } else {
        edge_t e    = step_edge(_code[i]);
        int    sign = step_sign(_code[i]);
        if (!g.is_tree_edge(e)) {
          out.push_back(Syllable::letter(e, sign));
        }
        cur = g.end(e, sign > 0 ? 1 : 0);
      }
    }
    return out;
  }

  std::size_t NormalForm::syllable_count() const {
    return word().size();
  }

  std::string NormalForm::text() const {
    return _owner.format_word(word());
  }

  NormalForm multiply(NormalForm const& x, NormalForm const& y) {
    if (!(x.owner() == y.owner())) {
      throw Error(ErrorCode::MixedOwners, "multiply: operands from different graphs of groups");
    }
    GraphOfGroups::Reducer r(*x.owner()._d);
    r.code(x.code());
    r.code(y.code());
    return NormalForm(x.owner(), r.finish());
  }

  NormalForm invert(NormalForm const& x) {
    GraphOfGroups::Reducer r(*x.owner()._d);
    r.inverse_code(x.code());
    return NormalForm(x.owner(), r.finish());
  }

  NormalForm power(NormalForm const& x, long long k) {
    NormalForm base = k < 0 ? invert(x) : x;
    NormalForm out  = x.owner().identity();
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) {
      out = multiply(out, base);
    }
    return out;
  }

  bool equal(NormalForm const& x, NormalForm const& y) {
    if (!(x.owner() == y.owner())) {
      throw Error(ErrorCode::MixedOwners, "equal: operands from different graphs of groups");
    }
    return x.code() == y.code();
  }

  bool shortlex_less(NormalForm const& x, NormalForm const& y) {
    auto cx = x.syllable_count(), cy = y.syllable_count();
    if (cx != cy) {
      return cx < cy;
    }
    return x.text() < y.text();
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_subgraph(GraphOfGroups const& g, Subgraph const& sub) {
      auto const& graph = g.graph();
      if (std::none_of(sub.vertices.begin(), sub.vertices.end(), [](bool b) { return b; })) {
        throw Error(ErrorCode::BadSubgraph, "subgraph has no vertices");
      }
      for (edge_t e = 0; e < graph.num_edges(); ++e) {
        if (sub.edges[e] && (!sub.vertices[graph.edge(e).d0] || !sub.vertices[graph.edge(e).d1])) {
          throw Error(ErrorCode::BadSubgraph,
                      "edge " + graph.edge(e).id + " leaves the subgraph");
        }
      }
      // The tree edges inside the subgraph must connect it.
      std::vector<std::string> ids;
      std::vector<vertex_t>    index(graph.num_vertices(), 0);
      for (vertex_t v = 0; v < graph.num_vertices(); ++v) {
        if (sub.vertices[v]) {
          index[v] = ids.size();
          ids.push_back(graph.vertex_id(v));
        }
      }
      std::vector<Edge> edges;
      for (edge_t e : g.tree().edges()) {
        if (sub.edges[e]) {
          edges.push_back({graph.edge(e).id, index[graph.edge(e).d0], index[graph.edge(e).d1]});
        }
      }
      if (!FiniteGraph(ids, edges).is_connected()) {
        throw Error(ErrorCode::BadSubgraph,
                    "the spanning tree restricted to the subgraph does not connect it");
      }
    }

    bool syllables_inside(Word const& w, Subgraph const& sub) {
      return std::all_of(w.begin(), w.end(), [&](Syllable const& s) {
        return s.kind == Syllable::Kind::vertex ? sub.vertices[s.index] : sub.edges[s.index];
      });
    }
  }  // namespace

  Subgraph make_subgraph(GraphOfGroups const&            g,
                         std::vector<std::string> const& vertex_ids,
                         std::vector<std::string> const& edge_ids) {
    Subgraph sub{std::vector<bool>(g.graph().num_vertices(), false),
                 std::vector<bool>(g.graph().num_edges(), false)};
    for (auto const& id : vertex_ids) {
      sub.vertices[g.graph().vertex_index(id)] = true;
    }
    for (auto const& id : edge_ids) {
      sub.edges[g.graph().edge_index(id)] = true;
    }
    check_subgraph(g, sub);
    return sub;
  }

  Subgraph induced_subgraph(GraphOfGroups const& g, std::vector<vertex_t> const& vertices) {
    Subgraph sub{std::vector<bool>(g.graph().num_vertices(), false),
                 std::vector<bool>(g.graph().num_edges(), false)};
    for (vertex_t v : vertices) {
      sub.vertices.at(v) = true;
    }
    for (edge_t e = 0; e < g.graph().num_edges(); ++e) {
      sub.edges[e] = sub.vertices[g.graph().edge(e).d0] && sub.vertices[g.graph().edge(e).d1];
    }
    check_subgraph(g, sub);
    return sub;
  }

  Predicate subgraph_predicate(GraphOfGroups const& g, Subgraph const& sub) {
    check_subgraph(g, sub);
    if (sub.vertices[g.basepoint()]) {
      return [sub](NormalForm const& x) { return syllables_inside(x.word(), sub); };
    }
    vertex_t inside = 0;
    while (!sub.vertices[inside]) {
      ++inside;
    }
    GraphOfGroups moved = g.with_basepoint(inside);
    return [sub, moved](NormalForm const& x) {
      return syllables_inside(moved.reduce(x.word()).word(), sub);
    };
  }

  bool subgraph_group_membership(GraphOfGroups const& g,
                                 Subgraph const&      sub,
                                 NormalForm const&    x) {
    if (!(x.owner() == g)) {
      throw Error(ErrorCode::MixedOwners, "membership: element from another graph of groups");
    }
    return subgraph_predicate(g, sub)(x);
  }

  std::optional<elem_t> vertex_preimage(NormalForm const& x, vertex_t v) {
    auto const& g = x.owner();
    auto const& G = g.vertex_group(v);
    for (elem_t h = 0; h < G.order(); ++h) {
      if (g.element(Syllable::vertex(v, h)) == x) {
        return h;
      }
    }
    return std::nullopt;
  }

  Predicate vertex_group_predicate(GraphOfGroups const& g, vertex_t v) {
    std::set<std::vector<std::int32_t>> codes;
    for (elem_t h = 0; h < g.vertex_group(v).order(); ++h) {
      codes.insert(g.element(Syllable::vertex(v, h)).code());
    }
    return [codes = std::move(codes)](NormalForm const& x) {
      return codes.contains(x.code());
    };
  }

  MalnormalityReport verify_relative_malnormality(GraphOfGroups const& g,
                                                  vertex_t             v,
                                                  Subgroup const&      chi,
                                                  std::size_t          radius) {
    MalnormalityReport      report;
    auto const&             H = g.vertex_group(v);
    std::vector<NormalForm> members;
    std::map<std::vector<std::int32_t>, elem_t> lookup;
    for (elem_t h = 0; h < H.order(); ++h) {
      members.push_back(g.element(Syllable::vertex(v, h)));
      lookup[members.back().code()] = h;
    }
    for (auto const& s : g.ball(radius)) {
      if (lookup.contains(s.code())) {
        continue;
      }
      ++report.checked;
      NormalForm          s_inv = invert(s);
      std::vector<elem_t> meet;
      for (elem_t h = 0; h < H.order(); ++h) {
        if (lookup.contains(multiply(multiply(s, members[h]), s_inv).code())) {
          meet.push_back(h);
        }
      }
      if (!is_conjugate_into(H, Subgroup{meet}, chi)) {
        report.holds = false;
        std::string list;
        for (elem_t h : meet) {
          list += (list.empty() ? "g" : ", g") + std::to_string(h);
        }
        report.counterexample = "s = " + s.text() + ": intersection {" + list
                                + "} is not conjugate into chi inside the factor";
        return report;
      }
    }
    return report;
  }

}  // namespace gogkit
