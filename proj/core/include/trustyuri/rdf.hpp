#pragma once

//! Minimal RDF 1.1 dataset model: IRIs, blank nodes, literals with a
//! datatype or a language tag, and quads with an optional named graph.
//! Documents preserve input order; blank-node enumeration during
//! transformation depends on it.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trustyuri {

inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

struct RdfTerm {
    enum class Kind { Iri, Blank, Literal };

    Kind kind = Kind::Iri;
    /// IRI string, blank-node label (without "_:"), or literal lexical form.
    std::string value;
    /// Literals carry exactly one of datatype/language. A literal without an
    /// explicit datatype is materialized as xsd:string at construction.
    std::string datatype;
    /// Lowercased language tag.
    std::string language;

    static RdfTerm iri(std::string value);
    static RdfTerm blank(std::string label);
    static RdfTerm literal(std::string lexical, std::string datatype = std::string(kXsdString));
    static RdfTerm lang_literal(std::string lexical, std::string language);

    bool is_iri() const { return kind == Kind::Iri; }
    bool is_blank() const { return kind == Kind::Blank; }
    bool is_literal() const { return kind == Kind::Literal; }

    bool operator==(const RdfTerm&) const = default;
};

struct RdfQuad {
    /// Graph IRI; the empty string is the default-graph sentinel.
    std::string graph;
    RdfTerm subject;   // Iri or Blank
    RdfTerm predicate; // Iri
    RdfTerm object;    // any kind

    bool operator==(const RdfQuad&) const = default;
};

enum class RdfFormat { NQuads, TriG };

struct QuadDocument {
    std::vector<RdfQuad> quads;
    RdfFormat source_format = RdfFormat::NQuads;

    bool operator==(const QuadDocument& other) const { return quads == other.quads; }
};

/// Pull interface shared by the streaming parsers.
class QuadSource {
public:
    virtual ~QuadSource() = default;
    /// Next quad in document order, or nullopt at end of input.
    /// Throws ParseError on malformed input.
    virtual std::optional<RdfQuad> next() = 0;
};

/// Lowercases an ASCII language tag; non-ASCII bytes pass through.
std::string canonical_language_tag(std::string_view tag);

} // namespace trustyuri
