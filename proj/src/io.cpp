#include "gogkit/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gogkit/error.hpp"

#ifndef GOGKIT_FIXTURES_DIR
#define GOGKIT_FIXTURES_DIR "fixtures"
#endif

namespace gogkit {

  namespace {
    [[noreturn]] void bad(std::string const& msg) {
      throw Error(ErrorCode::BadDocument, msg);
    }

    std::size_t positive(json const& j, char const* what) {
      if (!j.is_number_integer() || j.get<long long>() < 1) {
        throw Error(ErrorCode::BadGroupSpec, std::string(what) + " needs a positive integer");
      }
      return j.get<std::size_t>();
    }

    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field '") + key + "'");
      }
      return j.at(key);
    }

    std::vector<elem_t> index_array(json const& j, std::string const& what) {
      if (!j.is_array()) {
        bad(what + " must be an array");
      }
      std::vector<elem_t> out;
      for (auto const& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 0) {
          bad(what + " must hold element indices");
        }
        out.push_back(x.get<elem_t>());
      }
      return out;
    }
  }  // namespace

  FiniteGroup group_from_json(json const& spec, std::map<std::string, FiniteGroup> const& named) {
    if (spec.is_string()) {
      auto it = named.find(spec.get<std::string>());
      if (it == named.end()) {
        throw Error(ErrorCode::UnknownId, "no group named '" + spec.get<std::string>() + "'");
      }
      return it->second;
    }
    if (!spec.is_object()) {
      throw Error(ErrorCode::BadGroupSpec, "group spec must be an object or a name");
    }
    if (spec.contains("cyclic")) {
      return FiniteGroup::cyclic(positive(spec["cyclic"], "cyclic"));
    }
    if (spec.contains("dihedral")) {
      return FiniteGroup::dihedral(positive(spec["dihedral"], "dihedral"));
    }
    if (spec.contains("symmetric")) {
      return FiniteGroup::symmetric(positive(spec["symmetric"], "symmetric"));
    }
    if (spec.contains("dicyclic")) {
      return FiniteGroup::dicyclic(positive(spec["dicyclic"], "dicyclic"));
    }
    if (spec.contains("special_linear_2")) {
      return FiniteGroup::special_linear_2(positive(spec["special_linear_2"], "special_linear_2"));
    }
    if (spec.contains("product")) {
      auto const& parts = spec["product"];
      if (!parts.is_array() || parts.size() != 2) {
        throw Error(ErrorCode::BadGroupSpec, "product needs exactly two factors");
      }
      return FiniteGroup::direct_product(group_from_json(parts[0], named),
                                         group_from_json(parts[1], named));
    }
    if (spec.contains("table")) {
      std::vector<std::vector<elem_t>> table;
      if (!spec["table"].is_array()) {
        throw Error(ErrorCode::BadGroupSpec, "table must be an array of rows");
      }
      for (auto const& row : spec["table"]) {
        table.push_back(index_array(row, "table row"));
      }
      std::vector<std::string> labels;
      if (spec.contains("labels")) {
        labels = spec["labels"].get<std::vector<std::string>>();
      }
      return FiniteGroup::from_table(table, labels);
    }
    throw Error(ErrorCode::BadGroupSpec, "unknown group spec " + spec.dump());
  }

  json group_to_json(FiniteGroup const& g) {
    std::istringstream in(g.description());
    std::string        kind;
    std::size_t        n = 0;
    if (in >> kind >> n) {
      for (char const* k : {"cyclic", "dihedral", "symmetric", "dicyclic", "special_linear_2"}) {
        if (kind == k) {
          return json{{kind, n}};
        }
      }
    }
    return json{{"table", g.table()}};
  }

  GogSpec gog_spec_from_json(json const& doc) {
    std::map<std::string, FiniteGroup> named;
    if (doc.contains("groups")) {
      for (auto const& [name, spec] : doc["groups"].items()) {
        named.emplace(name, group_from_json(spec, named));
      }
    }
    auto const&              graph_doc = field(doc, "graph");
    std::vector<std::string> vids;
    GogSpec                  out;
    for (auto const& v : field(graph_doc, "vertices")) {
      vids.push_back(field(v, "id").get<std::string>());
      if (v.contains("subgraph")) {
        bad("vertex " + vids.back() + " has a subgraph; load it as a composite document");
      }
      out.vertex_groups.push_back(group_from_json(field(v, "group"), named));
    }
    for (std::size_t i = 0; i < vids.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (vids[i] == vids[j]) {
          bad("duplicate vertex id '" + vids[i] + "'");
        }
      }
    }
    FiniteGraph       ids_only(vids, {});
    std::vector<Edge> edges;
    auto const&       edges_doc = graph_doc.contains("edges") ? graph_doc["edges"] : json::array();
    for (auto const& e : edges_doc) {
      Edge ed{field(e, "id").get<std::string>(),
              ids_only.vertex_index(field(e, "from").get<std::string>()),
              ids_only.vertex_index(field(e, "to").get<std::string>())};
      for (auto const& prior : edges) {
        if (prior.id == ed.id) {
          bad("duplicate edge id '" + ed.id + "'");
        }
      }
      edges.push_back(ed);
      out.edge_groups.push_back(group_from_json(field(e, "group"), named));
      out.d0.push_back(GroupHom{index_array(field(e, "d0_images"), "d0_images of " + ed.id)});
      out.d1.push_back(GroupHom{index_array(field(e, "d1_images"), "d1_images of " + ed.id)});
    }
    out.graph = FiniteGraph(vids, edges);
    if (doc.contains("spanning_tree")) {
      std::vector<edge_t> tree;
      for (auto const& id : doc["spanning_tree"]) {
        tree.push_back(out.graph.edge_index(id.get<std::string>()));
      }
      out.tree = tree;
    }
    if (doc.contains("basepoint")) {
      out.basepoint = out.graph.vertex_index(doc["basepoint"].get<std::string>());
    }
    return out;
  }

  GraphOfGroups gog_from_json(json const& doc) {
    return GraphOfGroups(gog_spec_from_json(doc));
  }

  json gog_to_json(GraphOfGroups const& g, std::string const& name) {
    json        doc;
    auto const& graph = g.graph();
    doc["name"]       = name;
    // One named group per distinct spec.
    json                     groups = json::object();
    std::vector<json>        seen;
    std::vector<std::string> names;
    auto name_of = [&](FiniteGroup const& G) {
      json spec = group_to_json(G);
      for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i] == spec) {
          return names[i];
        }
      }
      std::string n = "G" + std::to_string(seen.size());
      if (spec.contains("cyclic")) {
        n = "C" + std::to_string(spec["cyclic"].get<std::size_t>());
      }
      seen.push_back(spec);
      names.push_back(n);
      groups[n] = spec;
      return n;
    };
    json vertices = json::array();
    for (vertex_t v = 0; v < graph.num_vertices(); ++v) {
      vertices.push_back({{"id", graph.vertex_id(v)}, {"group", name_of(g.vertex_group(v))}});
    }
    json edges = json::array();
    for (edge_t e = 0; e < graph.num_edges(); ++e) {
      auto const& ed = graph.edge(e);
      edges.push_back({{"id", ed.id},
                       {"from", graph.vertex_id(ed.d0)},
                       {"to", graph.vertex_id(ed.d1)},
                       {"group", name_of(g.edge_group(e))},
                       {"d0_images", g.inclusion(e, 0).images},
                       {"d1_images", g.inclusion(e, 1).images}});
    }
    doc["groups"]   = groups;
    doc["graph"]    = {{"vertices", vertices}, {"edges", edges}};
    json tree       = json::array();
    for (edge_t e : g.tree().edges()) {
      tree.push_back(graph.edge(e).id);
    }
    doc["spanning_tree"] = tree;
    doc["basepoint"]     = graph.vertex_id(g.basepoint());
    return doc;
  }

  std::string fixtures_dir() {
    if (char const* env = std::getenv("GOGKIT_FIXTURES")) {
      return env;
    }
    return GOGKIT_FIXTURES_DIR;
  }

  std::string resolve_document(std::string const& path_or_name) {
    namespace fs = std::filesystem;
    if (fs::exists(path_or_name)) {
      return path_or_name;
    }
    std::string stem;
    for (char c : path_or_name) {
      stem += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    for (auto const& candidate : {stem + ".gog.json", stem + ".json", stem}) {
      fs::path p = fs::path(fixtures_dir()) / candidate;
      if (fs::exists(p)) {
        return p.string();
      }
    }
    bad("no such file or fixture: " + path_or_name);
  }

  json load_json(std::string const& path_or_name) {
    std::ifstream in(resolve_document(path_or_name));
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      bad(std::string("JSON parse error: ") + e.what());
    }
  }

  void save_json(std::string const& path, json const& doc) {
    std::ofstream out(path);
    if (!out) {
      bad("cannot write " + path);
    }
    out << doc.dump(2) << '\n';
  }

  GraphOfGroups load_gog(std::string const& path_or_name) {
    return gog_from_json(load_json(path_or_name));
  }

  json ring_elem_to_json(RingElem const& x) {
    json terms = json::array();
    for (auto const& [w, c] : x.terms()) {
      terms.push_back({{"word", w.text()}, {"coeff", c}});
    }
    return {{"mod", x.modulus()}, {"terms", terms}};
  }

  RingElem ring_elem_from_json(GraphOfGroups const& owner, json const& doc) {
    RingElem x(owner, field(doc, "mod").get<coeff_t>());
    for (auto const& t : field(doc, "terms")) {
      auto c = field(t, "coeff").get<long long>();
      auto m = static_cast<long long>(x.modulus());
      x.add_term(owner.parse(field(t, "word").get<std::string>()),
                 static_cast<coeff_t>(((c % m) + m) % m));
    }
    return x;
  }

  json derivation_to_json(Derivation const& f) {
    auto const& g = f.owner();
    json        actions = json::array();
    for (auto a : f.actions()) {
      actions.push_back(a == Action::standard ? "standard" : "twisted");
    }
    json values = json::object();
    auto to_json = [&](RingVector const& v) {
      json arr = json::array();
      for (auto const& x : v) {
        arr.push_back(ring_elem_to_json(x));
      }
      return arr;
    };
    for (auto const& s : g.presentation().generators) {
      values[g.format(s)] = to_json(f.value(s));
    }
    return {{"mod", f.modulus()}, {"rank", f.rank()}, {"actions", actions}, {"values", values}};
  }

  Derivation derivation_from_json(GraphOfGroups const& owner, json const& doc) {
    auto                m = field(doc, "mod").get<coeff_t>();
    std::vector<Action> actions;
    for (auto const& a : field(doc, "actions")) {
      auto s = a.get<std::string>();
      if (s != "standard" && s != "twisted") {
        bad("unknown action '" + s + "'");
      }
      actions.push_back(s == "standard" ? Action::standard : Action::twisted);
    }
    if (doc.contains("rank") && doc["rank"].get<std::size_t>() != actions.size()) {
      bad("rank does not match the action list");
    }
    Derivation f(owner, m, actions);
    for (auto const& [name, vals] : field(doc, "values").items()) {
      auto w = owner.parse_word(name);
      if (w.size() != 1) {
        bad("value key '" + name + "' is not a generator");
      }
      RingVector v;
      for (auto const& x : vals) {
        v.push_back(ring_elem_from_json(owner, x));
      }
      if (w[0].kind == Syllable::Kind::vertex) {
        f.set_vertex_value(w[0].index, static_cast<elem_t>(w[0].value), v);
      } else if (w[0].value > 0) {
        f.set_letter_value(w[0].index, v);
      } else {
        bad("value key '" + name + "' is an inverse letter");
      }
    }
    return f;
  }

  std::map<std::string, std::string> aliases_from_json(json const& doc) {
    std::map<std::string, std::string> out;
    if (doc.contains("aliases")) {
      for (auto const& [k, v] : doc["aliases"].items()) {
        out[k] = v.get<std::string>();
      }
    }
    return out;
  }

  Word read_word(GraphOfGroups const&                      g,
                 std::string const&                        text,
                 std::map<std::string, std::string> const& aliases) {
    if (aliases.empty()) {
      return g.parse_word(text);
    }
    Word        out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto star  = text.find('*', pos);
      auto token = text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
      pos        = star == std::string::npos ? text.size() + 1 : star + 1;
      auto b     = token.find_first_not_of(" \t");
      auto e     = token.find_last_not_of(" \t");
      token      = b == std::string::npos ? "" : token.substr(b, e - b + 1);
      std::string base  = token;
      long long   power = 1;
      if (auto caret = token.rfind('^'); caret != std::string::npos && !token.starts_with("t(")) {
        base = token.substr(0, caret);
        try {
          power = std::stoll(token.substr(caret + 1));
        } catch (std::exception const&) {
          throw Error(ErrorCode::MalformedWord, "bad exponent in '" + token + "'");
        }
      }
      auto it = aliases.find(base);
      if (it == aliases.end()) {
        auto w = g.parse_word(token);
        out.insert(out.end(), w.begin(), w.end());
        continue;
      }
      auto w = g.parse_word(it->second);
      if (power < 0) {
        w     = g.inverse_word(w);
        power = -power;
      }
      for (long long i = 0; i < power; ++i) {
        out.insert(out.end(), w.begin(), w.end());
      }
    }
    return out;
  }

  bool is_composite_document(json const& doc) {
    if (!doc.contains("graph") || !doc["graph"].contains("vertices")) {
      return false;
    }
    for (auto const& v : doc["graph"]["vertices"]) {
      if (v.contains("subgraph")) {
        return true;
      }
    }
    return false;
  }

  CompositeGog composite_from_json(json const& doc) {
    std::map<std::string, FiniteGroup> named;
    if (doc.contains("groups")) {
      for (auto const& [name, spec] : doc["groups"].items()) {
        named.emplace(name, group_from_json(spec, named));
      }
    }
    auto const&                  graph_doc = field(doc, "graph");
    std::vector<CompositeVertex> vs;
    std::map<std::string, vertex_t> vindex;
    for (auto const& v : field(graph_doc, "vertices")) {
      auto id = field(v, "id").get<std::string>();
      if (!vindex.emplace(id, vs.size()).second) {
        bad("duplicate vertex id '" + id + "'");
      }
      if (v.contains("subgraph")) {
        vs.push_back(CompositeVertex::nest(id, gog_from_json(v["subgraph"])));
      } else {
        vs.push_back(CompositeVertex::plain(id, group_from_json(field(v, "group"), named)));
      }
    }
    auto vertex_of = [&](json const& j) {
      auto it = vindex.find(j.get<std::string>());
      if (it == vindex.end()) {
        throw Error(ErrorCode::UnknownId, "unknown vertex '" + j.get<std::string>() + "'");
      }
      return it->second;
    };
    std::vector<CompositeEdge>    es;
    std::map<std::string, edge_t> eindex;
    auto const& edges_doc = graph_doc.contains("edges") ? graph_doc["edges"] : json::array();
    for (auto const& e : edges_doc) {
      CompositeEdge c{field(e, "id").get<std::string>(), vertex_of(field(e, "from")),
                      vertex_of(field(e, "to")), group_from_json(field(e, "group"), named), {}, {}};
      if (!eindex.emplace(c.id, es.size()).second) {
        bad("duplicate edge id '" + c.id + "'");
      }
      for (int side = 0; side < 2; ++side) {
        auto const& owner = vs[side == 0 ? c.d0 : c.d1].group;
        auto&       im    = side == 0 ? c.d0_images : c.d1_images;
        std::string key   = side == 0 ? "d0" : "d1";
        if (e.contains(key + "_words")) {
          for (auto const& w : e[key + "_words"]) {
            im.push_back(owner.parse(w.get<std::string>()));
          }
        } else {
          for (elem_t x : index_array(field(e, (key + "_images").c_str()), key + "_images of " + c.id)) {
            if (owner.graph().num_vertices() != 1 || x >= owner.vertex_group(0).order()) {
              bad(key + "_images of " + c.id + " needs a plain endpoint and valid indices");
            }
            im.push_back(owner.element(Syllable::vertex(0, x)));
          }
        }
      }
      es.push_back(std::move(c));
    }
    std::vector<std::string> ids;
    std::vector<Edge>        plain;
    for (auto const& v : vs) {
      ids.push_back(v.id);
    }
    for (auto const& c : es) {
      plain.push_back({c.id, c.d0, c.d1});
    }
    std::vector<edge_t> tree;
    if (doc.contains("spanning_tree")) {
      for (auto const& id : doc["spanning_tree"]) {
        auto it = eindex.find(id.get<std::string>());
        if (it == eindex.end()) {
          throw Error(ErrorCode::UnknownId, "unknown edge '" + id.get<std::string>() + "'");
        }
        tree.push_back(it->second);
      }
    } else {
      tree = spanning_tree(FiniteGraph(ids, plain)).edges();
    }
    vertex_t base = doc.contains("basepoint") ? vertex_of(doc["basepoint"]) : 0;
    return CompositeGog(std::move(vs), std::move(es), tree, base);
  }

  json composite_to_json(CompositeGog const& g, std::string const& name) {
    if (g.is_flat()) {
      return gog_to_json(g.flatten(), name);
    }
    json groups   = json::object();
    json vertices = json::array();
    for (auto const& v : g.vertices()) {
      if (v.nested) {
        vertices.push_back({{"id", v.id}, {"subgraph", gog_to_json(v.group, v.id)}});
      } else {
        vertices.push_back({{"id", v.id}, {"group", group_to_json(v.group.vertex_group(0))}});
      }
    }
    json edges = json::array();
    for (auto const& e : g.edges()) {
      json j{{"id", e.id},
             {"from", g.vertices()[e.d0].id},
             {"to", g.vertices()[e.d1].id},
             {"group", group_to_json(e.group)}};
      for (int side = 0; side < 2; ++side) {
        auto const& end = g.vertices()[side == 0 ? e.d0 : e.d1];
        std::string key = side == 0 ? "d0" : "d1";
        json        arr = json::array();
        for (auto const& x : e.images(side)) {
          if (end.nested) {
            arr.push_back(x.text());
          } else {
            arr.push_back(x.code()[0]);
          }
        }
        j[key + (end.nested ? "_words" : "_images")] = arr;
      }
      edges.push_back(j);
    }
    json tree = json::array();
    for (edge_t e : g.tree_edges()) {
      tree.push_back(g.edges()[e].id);
    }
    return {{"name", name},
            {"groups", groups},
            {"graph", {{"vertices", vertices}, {"edges", edges}}},
            {"spanning_tree", tree},
            {"basepoint", g.vertices()[g.basepoint()].id}};
  }

  json quotient_to_json(FiniteQuotient const& q) {
    auto const& graph = q.owner.graph();
    json        vimg  = json::object();
    for (vertex_t v = 0; v < graph.num_vertices(); ++v) {
      vimg[graph.vertex_id(v)] = q.vertex_maps[v].images;
    }
    json limg = json::object();
    for (edge_t e = 0; e < graph.num_edges(); ++e) {
      limg[graph.edge(e).id] = q.letter_images[e];
    }
    return {{"target", group_to_json(q.target)},
            {"target_order", q.target.order()},
            {"vertex_images", vimg},
            {"letter_images", limg}};
  }

  FiniteQuotient quotient_from_json(GraphOfGroups const& owner, json const& doc) {
    auto const&    graph = owner.graph();
    FiniteQuotient q{owner, group_from_json(field(doc, "target")), {}, {}};
    auto const&    vimg = field(doc, "vertex_images");
    auto const&    limg = field(doc, "letter_images");
    for (vertex_t v = 0; v < graph.num_vertices(); ++v) {
      auto const& id = graph.vertex_id(v);
      if (!vimg.contains(id)) {
        bad("no vertex images for " + id);
      }
      q.vertex_maps.push_back(GroupHom{index_array(vimg[id], "vertex images of " + id)});
    }
    for (edge_t e = 0; e < graph.num_edges(); ++e) {
      auto const& id = graph.edge(e).id;
      q.letter_images.push_back(limg.contains(id) ? limg[id].get<elem_t>() : q.target.identity());
    }
    if (auto why = check_quotient(q); !why.empty()) {
      bad("quotient document is not a homomorphism: " + why);
    }
    return q;
  }

  namespace {
    json word_table(std::map<std::string, TextWord> const& m) {
      json out = json::object();
      for (auto const& [k, w] : m) {
        out[k] = format_text_word(w);
      }
      return out;
    }

    std::map<std::string, TextWord> read_word_table(json const& j) {
      std::map<std::string, TextWord> out;
      for (auto const& [k, w] : j.items()) {
        out[k] = parse_text_word(w.get<std::string>());
      }
      return out;
    }
  }  // namespace

  json transcript_to_json(std::string const& operation, json const& input, SurgeryResult const& result) {
    return {{"operation", operation},
            {"input_hash", document_hash(input)},
            {"output", composite_to_json(result.output, operation)},
            {"psi", word_table(result.witness.psi)},
            {"phi", word_table(result.witness.phi)}};
  }

  GogIsoWitness witness_from_transcript(json const& input, json const& transcript) {
    if (field(transcript, "input_hash").get<std::string>() != document_hash(input)) {
      bad("transcript was made from a different input document");
    }
    return {std::make_shared<CompositeGog const>(composite_from_json(input)),
            std::make_shared<CompositeGog const>(composite_from_json(field(transcript, "output"))),
            read_word_table(field(transcript, "psi")),
            read_word_table(field(transcript, "phi"))};
  }

  std::string document_hash(json const& doc) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : doc.dump()) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

}  // namespace gogkit
