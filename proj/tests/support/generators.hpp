#pragma once

// Deterministic random RDF content for property tests: documents with
// blank nodes, self-references (plain and suffixed), language-tagged and
// datatyped literals with awkward characters, plus a TriG renderer used
// as the cross-format twin of the canonical N-Quads rendering.

#include "trustyuri/module_r.hpp"
#include "trustyuri/rdf.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace testsupport {

using Rng = std::mt19937_64;

struct DocOptions {
    std::size_t min_quads = 0;
    std::size_t max_quads = 20;
    bool with_blanks = true;
    bool with_self_references = true;
    bool multi_graph = true;
    std::string base_uri; // self-references target this when non-empty
};

std::string random_iri(Rng& rng);
trustyuri::RdfTerm random_literal(Rng& rng);
trustyuri::QuadDocument random_document(Rng& rng, const DocOptions& options);

// Four-graph document shaped like a nanopublication: head, assertion,
// provenance and pubinfo graphs hanging off `base_uri`, with blanks and
// mixed literals.
trustyuri::QuadDocument nanopub_like_document(Rng& rng, const std::string& base_uri);

// TriG rendering with randomized surface syntax (prefixes, GRAPH
// keyword, predicate-object lists, renamed blank labels, comments).
// Parsing it yields the same quads in the same order as `doc`, with
// blank labels possibly renamed consistently.
std::string render_trig(Rng& rng, const trustyuri::QuadDocument& doc);

// Preprocessed quads drawn from small component pools so the later sort
// rules actually have to tie-break; IRIs always start with a scheme
// letter and may contain placeholder spaces.
trustyuri::PreprocessedQuad random_preprocessed_quad(Rng& rng);

} // namespace testsupport
