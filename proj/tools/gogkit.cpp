// Command-line front end. Exit status: 0 success, 1 property violation,
// 2 invalid input, 3 search exhausted or inconclusive.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gogkit/error.hpp"
#include "gogkit/io.hpp"
#include "gogkit/quotients.hpp"
#include "gogkit/structure_tree.hpp"
#include "gogkit/surgery.hpp"
#include "gogkit/verify.hpp"

using namespace gogkit;

namespace {

  enum Exit { ok = 0, violation = 1, invalid = 2, inconclusive = 3 };

  std::vector<std::string> split(std::string const& text, char sep) {
    std::vector<std::string> out;
    std::stringstream        in(text);
    std::string              item;
    while (std::getline(in, item, sep)) {
      auto b = item.find_first_not_of(' ');
      auto e = item.find_last_not_of(' ');
      if (b != std::string::npos) {
        out.push_back(item.substr(b, e - b + 1));
      }
    }
    return out;
  }

  struct Doc {
    json          raw;
    GraphOfGroups g;
    std::map<std::string, std::string> aliases;
  };

  Doc load(std::string const& file) {
    json raw = load_json(file);
    auto g   = gog_from_json(raw);
    return {raw, g, aliases_from_json(raw)};
  }

  NormalForm element(Doc const& d, std::string const& text) {
    return d.g.reduce(read_word(d.g, text, d.aliases));
  }

  std::vector<NormalForm> elements(Doc const& d, std::string const& list) {
    std::vector<NormalForm> out;
    for (auto const& w : split(list, ',')) {
      out.push_back(element(d, w));
    }
    return out;
  }

  // Labels of elements of a finite group, generating a subgroup.
  Subgroup subgroup_from_labels(FiniteGroup const& group, std::string const& list) {
    std::vector<elem_t> seeds;
    for (auto const& name : split(list, ',')) {
      bool found = false;
      for (elem_t x = 0; x < group.order(); ++x) {
        if (group.label(x) == name) {
          seeds.push_back(x);
          found = true;
          break;
        }
      }
      if (!found) {
        throw Error(ErrorCode::UnknownId, "no element labelled " + name);
      }
    }
    return subgroup_closure(group, seeds);
  }

  Subgraph subgraph_from_ids(GraphOfGroups const& g, std::string const& list) {
    std::vector<vertex_t> vs;
    for (auto const& id : split(list, ',')) {
      vs.push_back(g.graph().vertex_index(id));
    }
    auto sub = induced_subgraph(g, vs);
    std::vector<std::string> vids;
    std::vector<std::string> eids;
    for (vertex_t v = 0; v < g.graph().num_vertices(); ++v) {
      if (sub.vertices[v]) {
        vids.push_back(g.graph().vertex_id(v));
      }
    }
    for (edge_t e = 0; e < g.graph().num_edges(); ++e) {
      if (sub.edges[e]) {
        eids.push_back(g.graph().edge(e).id);
      }
    }
    return make_subgraph(g, vids, eids);
  }

  std::string format_vector(RingVector const& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? "; " : "") + v[i].text();
    }
    return "(" + out + ")";
  }

  void emit(json const& doc, std::string const& out) {
    if (out.empty()) {
      std::cout << doc.dump(2) << "\n";
    } else {
      save_json(out, doc);
    }
  }

  CompositeGog load_composite(json const& raw) {
    return is_composite_document(raw) ? composite_from_json(raw)
                                      : CompositeGog::from_gog(gog_from_json(raw));
  }

  SearchOptions search_options(std::size_t max_order) {
    SearchOptions o;
    if (max_order != 0) {
      o.targets = small_targets(max_order);
    }
    return o;
  }

  void print_quotient(FiniteQuotient const& q, std::vector<NormalForm> const& xs) {
    std::cout << "target " << q.target.description() << " (order " << q.target.order() << ")\n";
    for (auto const& x : xs) {
      std::cout << "  " << x.text() << " -> " << q.target.label(q.apply(x)) << "\n";
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphs of finite groups: normal forms, derivations, structure trees, "
               "finite quotients and surgery."};
  app.require_subcommand(1);

  std::string file, word, w1, w2, out, base, target, deriv_file, sub_text, elems, vertex, edge,
      chi_text, lambda_text, given_file, transcript_file, fixture, dot;
  std::size_t radius = 3, max_order = 0;
  coeff_t     mod     = 5;
  bool        twisted = false, count_only = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a graph-of-groups document");
  validate_cmd->add_option("file", file)->required();

  auto* nf_cmd = app.add_subcommand("nf", "normal form of a word");
  nf_cmd->add_option("file", file)->required();
  nf_cmd->add_option("--word", word)->required();

  auto* eq_cmd = app.add_subcommand("eq", "decide whether two words are equal");
  eq_cmd->add_option("file", file)->required();
  eq_cmd->add_option("--w1", w1)->required();
  eq_cmd->add_option("--w2", w2)->required();

  auto* ball_cmd = app.add_subcommand("ball", "elements within a syllable radius");
  ball_cmd->add_option("file", file)->required();
  ball_cmd->add_option("--radius", radius)->required();
  ball_cmd->add_flag("--count", count_only);

  auto* deriv_cmd = app.add_subcommand("deriv", "derivations into (Z/m)[G]");
  deriv_cmd->require_subcommand(1);
  auto* dun_cmd = deriv_cmd->add_subcommand("dunwoody", "vertex derivation from base to target");
  dun_cmd->add_option("file", file)->required();
  dun_cmd->add_option("--base", base)->required();
  dun_cmd->add_option("--target", target)->required();
  dun_cmd->add_option("--mod", mod);
  dun_cmd->add_option("--out", out);
  auto* access_cmd = deriv_cmd->add_subcommand("access", "derivation whose kernel is G(base)");
  access_cmd->add_option("file", file)->required();
  access_cmd->add_option("--base", base)->required();
  access_cmd->add_option("--mod", mod);
  access_cmd->add_flag("--twisted", twisted, "use the twisted free-letter component");
  access_cmd->add_option("--out", out);
  auto* eval_cmd = deriv_cmd->add_subcommand("eval", "evaluate a stored derivation");
  eval_cmd->add_option("file", file)->required();
  eval_cmd->add_option("--deriv", deriv_file)->required();
  eval_cmd->add_option("--word", word)->required();
  auto* scan_cmd = deriv_cmd->add_subcommand("kernel-scan", "compare kernel with a subgroup on a ball");
  scan_cmd->add_option("file", file)->required();
  scan_cmd->add_option("--subgroup", sub_text, "vertex id, or comma-separated vertex ids")
      ->required();
  scan_cmd->add_option("--radius", radius)->required();
  scan_cmd->add_option("--mod", mod);
  scan_cmd->add_option("--deriv", deriv_file, "derivation to scan instead of the built one");

  auto* tree_cmd = app.add_subcommand("tree", "the structure tree");
  tree_cmd->require_subcommand(1);
  auto* tball_cmd = tree_cmd->add_subcommand("ball", "ball around the base vertex");
  tball_cmd->add_option("file", file)->required();
  tball_cmd->add_option("--radius", radius)->required();
  tball_cmd->add_option("--dot", dot);
  auto* fix_cmd = tree_cmd->add_subcommand("fix", "vertex fixed by a finite subgroup");
  fix_cmd->add_option("file", file)->required();
  fix_cmd->add_option("--elements", elems)->required();
  fix_cmd->add_option("--radius", radius)->default_val(8);
  auto* conj_cmd = tree_cmd->add_subcommand("conj", "conjugate a finite subgroup into a vertex group");
  conj_cmd->add_option("file", file)->required();
  conj_cmd->add_option("--elements", elems)->required();
  conj_cmd->add_option("--radius", radius)->default_val(8);

  auto* quot_cmd = app.add_subcommand("quotient", "finite quotients");
  quot_cmd->require_subcommand(1);
  auto* sep_cmd = quot_cmd->add_subcommand("separate", "map elements to nontrivial elements");
  sep_cmd->add_option("file", file)->required();
  sep_cmd->add_option("--elements", elems)->required();
  sep_cmd->add_option("--from-vertex", vertex, "map outside the image of this vertex group");
  sep_cmd->add_option("--max-order", max_order, "search all small groups up to this order");
  sep_cmd->add_option("--out", out);
  auto* embed_cmd = quot_cmd->add_subcommand("embed", "injective on a vertex subgroup");
  embed_cmd->add_option("file", file)->required();
  embed_cmd->add_option("--vertex", vertex)->required();
  embed_cmd->add_option("--subgroup", sub_text, "generating element labels");
  embed_cmd->add_option("--subgraph", lambda_text, "work in this subgraph's group (vertex ids)");
  embed_cmd->add_option("--max-order", max_order);
  embed_cmd->add_option("--out", out);
  auto* refine_cmd = quot_cmd->add_subcommand("refine", "extend a quotient of a subgraph group");
  refine_cmd->add_option("file", file)->required();
  refine_cmd->add_option("--subgraph", sub_text, "comma-separated vertex ids")->required();
  refine_cmd->add_option("--given", given_file)->required();
  refine_cmd->add_option("--max-order", max_order);
  refine_cmd->add_option("--out", out);

  auto* surg_cmd = app.add_subcommand("surgery", "isomorphism-preserving rewrites");
  surg_cmd->require_subcommand(1);
  auto* rev_cmd = surg_cmd->add_subcommand("reverse", "reverse an edge");
  rev_cmd->add_option("file", file)->required();
  rev_cmd->add_option("--edge", edge)->required();
  rev_cmd->add_option("--out", out);
  auto* col_cmd = surg_cmd->add_subcommand("collapse", "collapse a tree edge");
  col_cmd->add_option("file", file)->required();
  col_cmd->add_option("--edge", edge)->required();
  col_cmd->add_option("--out", out);
  auto* exp_cmd = surg_cmd->add_subcommand("expand", "replace a nested vertex by its graph");
  exp_cmd->add_option("file", file)->required();
  exp_cmd->add_option("--vertex", vertex)->required();
  exp_cmd->add_option("--out", out);
  auto* att_cmd = surg_cmd->add_subcommand("attach", "split a vertex group over a subgroup");
  att_cmd->add_option("file", file)->required();
  att_cmd->add_option("--vertex", vertex)->required();
  att_cmd->add_option("--chi", chi_text, "generating element labels")->required();
  att_cmd->add_option("--radius", radius)->default_val(1);
  att_cmd->add_option("--out", out);
  auto* amal_cmd = surg_cmd->add_subcommand("amalgamate", "split along the one tree edge leaving a subgraph");
  amal_cmd->add_option("file", file)->required();
  amal_cmd->add_option("--lambda", lambda_text, "comma-separated vertex ids")->required();
  auto* chk_cmd = surg_cmd->add_subcommand("check", "validate a transcript against its input");
  chk_cmd->add_option("file", file)->required();
  chk_cmd->add_option("--transcript", transcript_file)->required();

  auto* verify_cmd = app.add_subcommand("verify", "acceptance checks");
  verify_cmd->require_subcommand(1);
  auto* all_cmd = verify_cmd->add_subcommand("all", "run every check");
  all_cmd->add_option("--fixture", fixture);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : invalid;
  }

  try {
    if (*validate_cmd) {
      json raw = load_json(file);
      if (is_composite_document(raw)) {
        auto g = composite_from_json(raw);
        std::cout << "valid: " << g.graph().num_vertices() << " vertices, "
                  << g.graph().num_edges() << " edges (nested)\n";
        return ok;
      }
      auto report = validate(gog_spec_from_json(raw));
      if (!report.ok()) {
        for (auto const& v : report.violations) {
          std::cout << "violation: " << v << "\n";
        }
        return invalid;
      }
      auto g = gog_from_json(raw);
      std::cout << "valid: " << g.graph().num_vertices() << " vertices, " << g.graph().num_edges()
                << " edges\n";
      return ok;
    }
    if (*nf_cmd) {
      auto d = load(file);
      std::cout << element(d, word).text() << "\n";
      return ok;
    }
    if (*eq_cmd) {
      auto d = load(file);
      std::cout << (equal(element(d, w1), element(d, w2)) ? "equal" : "not equal") << "\n";
      return ok;
    }
    if (*ball_cmd) {
      auto d  = load(file);
      auto xs = d.g.ball(radius);
      if (!count_only) {
        for (auto const& x : xs) {
          std::cout << x.text() << "\n";
        }
      }
      std::cout << xs.size() << " elements\n";
      return ok;
    }
    if (*dun_cmd) {
      auto d = load(file);
      auto f = dunwoody_derivation(d.g, d.g.graph().vertex_index(base),
                                   d.g.graph().vertex_index(target), mod);
      emit(derivation_to_json(f), out);
      return ok;
    }
    if (*access_cmd) {
      auto d = load(file);
      auto f = accessibility_derivation(d.g, d.g.graph().vertex_index(base), mod,
                                        twisted ? FreeLetterMode::twisted : FreeLetterMode::standard);
      emit(derivation_to_json(f), out);
      return ok;
    }
    if (*eval_cmd) {
      auto d = load(file);
      auto f = derivation_from_json(d.g, load_json(deriv_file));
      std::cout << format_vector(eval(f, read_word(d.g, word, d.aliases))) << "\n";
      return ok;
    }
    if (*scan_cmd) {
      auto      d   = load(file);
      auto      ids = split(sub_text, ',');
      Predicate in_h;
      std::optional<Derivation> f;
      if (ids.size() == 1) {
        vertex_t v = d.g.graph().vertex_index(ids[0]);
        in_h       = vertex_group_predicate(d.g, v);
        f          = accessibility_derivation(d.g, v, mod);
      } else {
        auto sub = subgraph_from_ids(d.g, sub_text);
        in_h     = subgraph_predicate(d.g, sub);
        f        = subgraph_derivation(d.g, sub, mod);
      }
      if (!deriv_file.empty()) {
        f = derivation_from_json(d.g, load_json(deriv_file));
      }
      auto rp = kernel_scan(*f, in_h, radius);
      for (auto const& ex : rp.examples) {
        std::cout << "mismatch: " << ex << "\n";
      }
      std::cout << rp.mismatches << " mismatches / " << rp.elements << " elements\n";
      return rp.mismatches == 0 ? ok : violation;
    }
    if (*tball_cmd) {
      auto d    = load(file);
      auto ball = tree_ball(base_vertex(d.g), radius);
      if (!dot.empty()) {
        std::ofstream(dot) << to_dot(ball);
      }
      for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
        auto const& n = ball.vertices[i];
        std::cout << ball.distance[i] << " " << n.rep.text() << " G("
                  << d.g.graph().vertex_id(n.orbit) << ")\n";
      }
      std::cout << ball.vertices.size() << " vertices, " << ball.edges.size() << " edges\n";
      return ok;
    }
    if (*fix_cmd) {
      auto d    = load(file);
      auto node = fixed_vertex(d.g, elements(d, elems), radius);
      std::cout << node.rep.text() << " G(" << d.g.graph().vertex_id(node.orbit) << ")\n";
      return ok;
    }
    if (*conj_cmd) {
      auto d = load(file);
      auto c = conjugate_finite_into_vertex(d.g, elements(d, elems), radius);
      std::cout << "h = " << c.h.text() << ", vertex " << d.g.graph().vertex_id(c.v) << "\n";
      return ok;
    }
    if (*sep_cmd) {
      auto d  = load(file);
      auto xs = elements(d, elems);
      auto q  = vertex.empty()
                    ? separate(d.g, xs, search_options(max_order))
                    : separate_from_vertex_group(d.g, d.g.graph().vertex_index(vertex), xs,
                                                 search_options(max_order));
      print_quotient(q, xs);
      if (!out.empty()) {
        save_json(out, quotient_to_json(q));
      }
      return ok;
    }
    if (*embed_cmd) {
      auto d = load(file);
      if (!lambda_text.empty()) {
        d.g = extract_subgraph(d.g, subgraph_from_ids(d.g, lambda_text));
      }
      vertex_t    v     = d.g.graph().vertex_index(vertex);
      auto const& group = d.g.vertex_group(v);
      Subgroup    sub;
      if (sub_text.empty()) {
        for (elem_t x = 0; x < group.order(); ++x) {
          sub.elements.push_back(x);
        }
      } else {
        sub = subgroup_from_labels(group, sub_text);
      }
      auto q = embed(d.g, v, sub, search_options(max_order));
      std::cout << "target " << q.target.description() << " (order " << q.target.order() << ")\n";
      for (elem_t x : sub.elements) {
        std::cout << "  " << group.label(x) << " -> " << q.target.label(q.vertex_maps[v](x)) << "\n";
      }
      if (!out.empty()) {
        save_json(out, quotient_to_json(q));
      }
      return ok;
    }
    if (*refine_cmd) {
      auto d     = load(file);
      auto sub   = subgraph_from_ids(d.g, sub_text);
      auto given = quotient_from_json(extract_subgraph(d.g, sub), load_json(given_file));
      auto q     = refine(d.g, sub, given, search_options(max_order));
      std::cout << "target " << q.target.description() << " (order " << q.target.order() << ")\n";
      emit(quotient_to_json(q), out);
      return ok;
    }
    if (*rev_cmd || *col_cmd || *exp_cmd || *att_cmd) {
      json raw = load_json(file);
      auto g   = load_composite(raw);
      std::string op;
      std::optional<SurgeryResult> r;
      if (*rev_cmd) {
        op = "reverse";
        r  = reverse_edge(g, g.graph().edge_index(edge));
      } else if (*col_cmd) {
        op = "collapse";
        r  = collapse_tree_edge(g, g.graph().edge_index(edge));
      } else if (*exp_cmd) {
        op = "expand";
        r  = expand_vertex(g, g.graph().vertex_index(vertex));
      } else {
        op             = "attach";
        vertex_t    v  = g.graph().vertex_index(vertex);
        auto const& gv = g.vertices()[v];
        if (gv.nested) {
          throw Error(ErrorCode::PreconditionFailed, "vertex " + vertex + " is nested");
        }
        auto chi   = subgroup_from_labels(gv.group.vertex_group(0), chi_text);
        auto table = find_delta_conjugators(g, v, chi, radius);
        r          = attach_amalgam_vertex(g, v, table);
      }
      auto report = validate_witness(r->witness);
      if (!report.ok) {
        for (auto const& f : report.failures) {
          std::cerr << "witness: " << f << "\n";
        }
        return violation;
      }
      emit(transcript_to_json(op, raw, *r), out);
      return ok;
    }
    if (*amal_cmd) {
      auto d     = load(file);
      auto split = collapse_to_amalgam(d.g, subgraph_from_ids(d.g, lambda_text));
      auto ids   = [&](Subgraph const& s) {
        std::string r;
        for (vertex_t v = 0; v < d.g.graph().num_vertices(); ++v) {
          if (s.vertices[v]) {
            r += (r.empty() ? "" : ",") + d.g.graph().vertex_id(v);
          }
        }
        return r;
      };
      std::cout << "delta side: " << ids(split.delta_side) << "\n"
                << "lambda side: " << ids(split.lambda_side) << "\n"
                << "edge: " << d.g.graph().edge(split.edge).id << "\n"
                << "chi:";
      for (auto const& x : split.chi) {
        std::cout << " " << x.text();
      }
      std::cout << "\n";
      return ok;
    }
    if (*chk_cmd) {
      auto w      = witness_from_transcript(load_json(file), load_json(transcript_file));
      auto report = validate_witness(w);
      for (auto const& f : report.failures) {
        std::cout << "failure: " << f << "\n";
      }
      std::cout << (report.ok ? "witness valid" : "witness invalid") << " (" << report.checks
                << " checks)\n";
      return report.ok ? ok : violation;
    }
    if (*all_cmd) {
      VerifyOptions o;
      if (!fixture.empty()) {
        o.fixture = fixture;
      }
      bool pass = true;
      for (auto const& r : verify_all(o)) {
        std::cout << format_result(r) << "\n";
        pass = pass && r.pass;
      }
      return pass ? ok : violation;
    }
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::Exhausted:
      case ErrorCode::NotFoundWithinRadius:
        return inconclusive;
      default:
        return invalid;
    }
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid;
  }
  return ok;
}
