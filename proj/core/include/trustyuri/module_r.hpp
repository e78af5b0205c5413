#pragma once

//! Modules RA and RB: trusty URIs over RDF datasets, independent of the
//! serialization format.
//!
//! Hashing works on *preprocessed* quads: every occurrence of the artifact
//! code under consideration is replaced by a single space inside IRI
//! strings (URIs cannot otherwise contain spaces, so this is unambiguous
//! and reversible). That makes self-referencing content checkable: the
//! transform-time hash input, where the code position holds a placeholder
//! read as a space, is byte-identical to the check-time hash input.
//!
//! Quads are sorted by a nine-rule total order (graph, subject, predicate,
//! non-literal objects first, object IRI, literal label, datatype-less
//! first, language-less first, datatype-or-language string), serialized as
//! four newline-terminated lines each, concatenated, and SHA-256 hashed in
//! UTF-8; the tail encoding is identical to module FA.

#include "trustyuri/check_report.hpp"
#include "trustyuri/codec.hpp"
#include "trustyuri/rdf.hpp"

#include <compare>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace trustyuri {

/// Placeholder for the not-yet-known (or blanked-out) artifact code.
inline constexpr char kPlaceholderChar = ' ';

/// One quad with the artifact code already blanked out of its IRI strings
/// and blank nodes eliminated. Literal components are kept structured so
/// the sort rules can address label, datatype and language separately.
struct PreprocessedQuad {
    std::string graph; // "" = default graph
    std::string subject;
    std::string predicate;
    bool object_is_iri = true;
    std::string object_iri;
    std::string object_label;
    std::string object_datatype; // empty iff language-tagged
    std::string object_language; // lowercase; empty iff datatyped

    bool operator==(const PreprocessedQuad&) const = default;
};

/// Replaces every occurrence of `artifact_code` in the IRI strings of
/// `quad` (graph, subject, predicate, IRI object) by one space. Literal
/// components are copied untouched. Throws on blank nodes.
PreprocessedQuad preprocess_quad(const RdfQuad& quad, std::string_view artifact_code);

/// Total order over preprocessed quads, applying the first matching rule:
///   1. graph  2. subject  3. predicate  4. non-literal object first
///   5. object IRI  6. literal label  7. literal without datatype first
///   8. literal without language first  9. datatype or language string
/// String comparison is by Unicode code point (UTF-8 byte order), with
/// the shorter string first on prefix ties.
std::strong_ordering compare_quads(const PreprocessedQuad& a, const PreprocessedQuad& b);

/// Four newline-terminated lines: graph, subject, predicate, object.
/// IRI lines are the bare preprocessed strings. Literal objects render as
/// '^' + datatype + ' ' + label or '@' + language + ' ' + label, with
/// '\' -> "\\" and U+000A -> "\n" escaped in the label, so the text
/// contains exactly four newlines.
std::string serialize_statement(const PreprocessedQuad& quad);

/// Inverse of serialize_statement. Throws Error on malformed input.
PreprocessedQuad parse_serialized_statement(std::string_view text);

/// Order over serialized statement texts that agrees with compare_quads
/// on the originating quads. The three IRI lines compare as plain bytes
/// (a newline sorts below every URI character, so prefix ties resolve
/// shorter-first); object lines need a structural comparison because '^'
/// and '@' markers do not rank literals after IRIs, and escaping can
/// reorder labels. Used as the merge comparator in the external sort.
std::strong_ordering compare_serialized_statements(std::string_view a, std::string_view b);

/// Sorts (a copy of) the quads and returns the 43-character hash tail of
/// the concatenated statement serializations.
std::string hash_preprocessed_dataset(std::vector<PreprocessedQuad> quads);

/// Rewrites quads for transformation: URIs equal to the base URI or
/// carrying it as a prefix get the placeholder inserted where the
/// artifact code will sit (with a '.' delimiter iff preceded by a Base64
/// character), and blank nodes become skolem IRIs
/// "<base+placeholder>#_<n>", numbered from 1 in order of first
/// appearance (subject before object, quads in document order).
class TransformPlan {
public:
    TransformPlan(std::string base_uri, Module target_module);

    PreprocessedQuad rewrite(const RdfQuad& quad);

    /// Base URI with delimiter and placeholder appended.
    const std::string& placeholder_uri() const { return placeholder_uri_; }
    Module target_module() const { return module_; }
    std::size_t blank_node_count() const { return blank_index_.size(); }

private:
    std::string rewrite_iri(const std::string& iri) const;
    std::string skolem_iri(const std::string& label);

    std::string base_uri_;
    std::string placeholder_uri_;
    Module module_;
    std::unordered_map<std::string, std::size_t> blank_index_;
};

/// Turns a preprocessed quad back into a concrete one by substituting
/// `artifact_code` for every placeholder space in its IRI strings.
RdfQuad materialize_quad(const PreprocessedQuad& quad, std::string_view artifact_code);

struct TransformResult {
    std::string trusty_uri;
    ArtifactCode code;
    /// Transformed document in canonical (sorted) order.
    QuadDocument document;
};

/// Transforms a document into self-referencing trusty content: rewrites
/// base-URI occurrences and blank nodes per TransformPlan, hashes with
/// the placeholder read as a space, then substitutes the final code.
/// Verifying the result against the returned URI succeeds by
/// construction. For RB, every rewritten quad must sit in the single
/// graph equal to the trusty URI; otherwise an Error is thrown.
TransformResult transform_rdf(const QuadDocument& doc, std::string_view base_uri, Module module);

/// Verifies a document against a potential trusty URI with module RA or
/// RB. Blank nodes yield an Error verdict; an RB candidate whose quads do
/// not all share the candidate URI as graph yields Invalid.
CheckReport check_rdf(const QuadDocument& doc, const TrustyUriCandidate& candidate);

/// Parses `input` (format chosen by extension unless overridden),
/// transforms it, and writes the sorted canonical N-Quads trusty file
/// "<stem>.<code>.nq" next to the input. Returns the result plus the
/// written path.
struct FileTransformResult {
    std::filesystem::path path;
    std::string trusty_uri;
    ArtifactCode code;
};
FileTransformResult transform_rdf_to_file(const std::filesystem::path& input,
                                          std::string_view base_uri, Module module,
                                          std::optional<RdfFormat> format = std::nullopt);

/// Replaces every occurrence of `needle` in `text` by `replacement`.
std::string replace_all(std::string_view text, std::string_view needle,
                        std::string_view replacement);

} // namespace trustyuri
