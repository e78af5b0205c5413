#pragma once

//! Streaming N-Quads reader and writer. Reading is line-based, so memory
//! stays bounded by the longest statement. Output is canonical: UTF-8,
//! LF line endings, one statement per line, xsd:string datatypes left
//! implicit, and only " \ LF CR escaped in literals.

#include "trustyuri/rdf.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace trustyuri {

class NQuadsParser final : public QuadSource {
public:
    explicit NQuadsParser(std::istream& in) : in_(in) {}

    std::optional<RdfQuad> next() override;

    /// 1-based line number of the most recently read line.
    std::size_t line() const { return line_; }

private:
    std::istream& in_;
    std::string buf_;
    std::size_t line_ = 0;
};

QuadDocument parse_nquads(std::istream& in);
QuadDocument parse_nquads(std::string_view text);

/// One canonical N-Quads line including the terminating " .\n".
std::string to_nquads_line(const RdfQuad& quad);

void serialize_nquads(const QuadDocument& doc, std::ostream& out);
std::string serialize_nquads(const QuadDocument& doc);

/// Escapes a literal lexical form for canonical N-Quads output.
std::string escape_nquads_literal(std::string_view lexical);

/// True iff `iri` starts with a URI scheme ("alpha (alnum|+|-|.)* :").
/// The parsers require this of every IRI, which also guarantees IRIs can
/// never begin with '^' or '@'.
bool has_uri_scheme(std::string_view iri);

} // namespace trustyuri
