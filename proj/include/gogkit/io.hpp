#pragma once

// JSON reading and writing for every document kind: graphs of groups,
// ring elements, derivations, quotients and surgery transcripts. See
// docs/FORMATS.md.

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

#include "gogkit/derivation.hpp"
#include "gogkit/finite_group.hpp"
#include "gogkit/gog.hpp"
#include "gogkit/group_ring.hpp"
#include "gogkit/quotients.hpp"
#include "gogkit/surgery.hpp"

namespace gogkit {

  using json = nlohmann::json;

  // {"cyclic": n}, {"dihedral": n}, {"symmetric": n}, {"dicyclic": n},
  // {"special_linear_2": p}, {"product": [spec, spec]} or
  // {"table": [[...]], "labels": [...]}. A string names an entry of `named`.
  // Throws Error{BadGroupSpec | BadDocument} or the table validation errors.
  FiniteGroup group_from_json(json const& spec,
                              std::map<std::string, FiniteGroup> const& named = {});
  json        group_to_json(FiniteGroup const& g);

  // The raw data of a GogDocument; call validate() or construct a
  // GraphOfGroups from it. Throws Error{BadDocument | UnknownId | ...}.
  GogSpec       gog_spec_from_json(json const& doc);
  GraphOfGroups gog_from_json(json const& doc);
  json          gog_to_json(GraphOfGroups const& g, std::string const& name = "");

  // Directory holding the shipped fixtures; GOGKIT_FIXTURES overrides it.
  std::string fixtures_dir();
  // A path, or a fixture name such as FIX-A or nested-demo.
  std::string resolve_document(std::string const& path_or_name);
  json        load_json(std::string const& path_or_name);
  void        save_json(std::string const& path, json const& doc);
  GraphOfGroups load_gog(std::string const& path_or_name);

  json     ring_elem_to_json(RingElem const& x);
  RingElem ring_elem_from_json(GraphOfGroups const& owner, json const& doc);

  json       derivation_to_json(Derivation const& f);
  Derivation derivation_from_json(GraphOfGroups const& owner, json const& doc);

  // Optional "aliases" object of a GogDocument: short name -> word text.
  std::map<std::string, std::string> aliases_from_json(json const& doc);
  // Word text in which a token may also be an alias, optionally raised to
  // an integer power ("a^3", "b^-1").
  Word read_word(GraphOfGroups const& g,
                 std::string const&   text,
                 std::map<std::string, std::string> const& aliases = {});

  // Documents whose vertices may carry a nested "subgraph" document in
  // place of a group; inclusions into such vertices are given as
  // "d0_words"/"d1_words".
  bool         is_composite_document(json const& doc);
  CompositeGog composite_from_json(json const& doc);
  // Flat graphs are written as plain GogDocuments.
  json         composite_to_json(CompositeGog const& g, std::string const& name = "");

  json          quotient_to_json(FiniteQuotient const& q);
  FiniteQuotient quotient_from_json(GraphOfGroups const& owner, json const& doc);

  // {"operation", "input_hash", "output", "psi", "phi"}.
  json transcript_to_json(std::string const& operation,
                          json const&        input,
                          SurgeryResult const& result);
  // Rebuilds the witness of a transcript against its input document.
  // Throws Error{BadDocument} when the input hash differs.
  GogIsoWitness witness_from_transcript(json const& input, json const& transcript);

  // FNV-1a of the compact dump, as 16 hex digits.
  std::string document_hash(json const& doc);

}  // namespace gogkit
