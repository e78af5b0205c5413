#include "trustyuri/rdf.hpp"

namespace trustyuri {

RdfTerm RdfTerm::iri(std::string value) {
    RdfTerm t;
    t.kind = Kind::Iri;
    t.value = std::move(value);
    return t;
}

RdfTerm RdfTerm::blank(std::string label) {
    RdfTerm t;
    t.kind = Kind::Blank;
    t.value = std::move(label);
    return t;
}

RdfTerm RdfTerm::literal(std::string lexical, std::string datatype) {
    RdfTerm t;
    t.kind = Kind::Literal;
    t.value = std::move(lexical);
    t.datatype = std::move(datatype);
    if (t.datatype.empty()) t.datatype = kXsdString;
    return t;
}

RdfTerm RdfTerm::lang_literal(std::string lexical, std::string language) {
    RdfTerm t;
    t.kind = Kind::Literal;
    t.value = std::move(lexical);
    t.language = canonical_language_tag(language);
    return t;
}

std::string canonical_language_tag(std::string_view tag) {
    std::string out(tag);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

} // namespace trustyuri
