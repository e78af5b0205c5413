#include "support/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace testsupport {

using trustyuri::QuadDocument;
using trustyuri::RdfQuad;
using trustyuri::RdfTerm;

namespace {

std::size_t pick(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool chance(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

const std::array<std::string, 4> kHosts = {"example.org", "data.example.net", "purl.org",
                                           "w3id.org"};
const std::array<std::string, 8> kWords = {"resource", "item",  "thing", "graph",
                                           "entity",   "claim", "obs",   "term"};
const std::array<std::string, 5> kDatatypes = {
    "http://www.w3.org/2001/XMLSchema#integer", "http://www.w3.org/2001/XMLSchema#decimal",
    "http://www.w3.org/2001/XMLSchema#dateTime", "http://www.w3.org/2001/XMLSchema#boolean",
    "http://example.org/datatype/custom"};
const std::array<std::string, 5> kLangTags = {"en", "en-GB", "DE", "fr-CA", "zh-Hant"};

// Characters that exercise escaping and comparison corner cases.
const std::string kLabelChars =
    "abcXYZ019 \t\\\"'\n\r^@<>~\xc3\xa9"; // includes U+00E9 as UTF-8

} // namespace

std::string random_iri(Rng& rng) {
    std::string iri = "http://" + kHosts[pick(rng, kHosts.size())] + "/";
    std::size_t segments = 1 + pick(rng, 2);
    for (std::size_t i = 0; i < segments; ++i) {
        if (i > 0) iri += '/';
        iri += kWords[pick(rng, kWords.size())];
        if (chance(rng, 0.5)) iri += std::to_string(pick(rng, 1000));
    }
    if (chance(rng, 0.2)) iri += "#" + kWords[pick(rng, kWords.size())];
    return iri;
}

RdfTerm random_literal(Rng& rng) {
    std::string label;
    std::size_t len = pick(rng, 16);
    for (std::size_t i = 0; i < len; ++i) label += kLabelChars[pick(rng, kLabelChars.size())];

    switch (pick(rng, 3)) {
        case 0: return RdfTerm::literal(std::move(label));
        case 1: return RdfTerm::literal(std::move(label), kDatatypes[pick(rng, kDatatypes.size())]);
        default:
            return RdfTerm::lang_literal(std::move(label), kLangTags[pick(rng, kLangTags.size())]);
    }
}

QuadDocument random_document(Rng& rng, const DocOptions& options) {
    QuadDocument doc;
    std::size_t n = options.min_quads + pick(rng, options.max_quads - options.min_quads + 1);

    std::vector<std::string> graphs;
    if (options.multi_graph) {
        graphs.push_back("");
        std::size_t extra = 1 + pick(rng, 3);
        for (std::size_t i = 0; i < extra; ++i) graphs.push_back(random_iri(rng));
        if (!options.base_uri.empty() && chance(rng, 0.5)) {
            graphs.push_back(options.base_uri + "#g" + std::to_string(pick(rng, 3)));
        }
    } else {
        graphs.push_back(options.base_uri.empty() ? random_iri(rng) : options.base_uri);
    }

    auto self_reference = [&]() -> std::string {
        if (chance(rng, 0.4)) return options.base_uri;
        if (chance(rng, 0.5)) return options.base_uri + "#Part" + std::to_string(1 + pick(rng, 3));
        return options.base_uri + "/sub/" + kWords[pick(rng, kWords.size())];
    };

    auto resource = [&](bool allow_blank) -> RdfTerm {
        if (allow_blank && options.with_blanks && chance(rng, 0.25)) {
            return RdfTerm::blank("b" + std::to_string(pick(rng, 5)));
        }
        if (options.with_self_references && !options.base_uri.empty() && chance(rng, 0.3)) {
            return RdfTerm::iri(self_reference());
        }
        return RdfTerm::iri(random_iri(rng));
    };

    for (std::size_t i = 0; i < n; ++i) {
        RdfQuad quad;
        quad.graph = graphs[pick(rng, graphs.size())];
        quad.subject = resource(true);
        quad.predicate = RdfTerm::iri(random_iri(rng));
        if (chance(rng, 0.45)) quad.object = random_literal(rng);
        else quad.object = resource(true);
        doc.quads.push_back(std::move(quad));
    }
    return doc;
}

QuadDocument nanopub_like_document(Rng& rng, const std::string& base_uri) {
    QuadDocument doc;
    const std::string head = base_uri + "#head";
    const std::string assertion = base_uri + "#assertion";
    const std::string provenance = base_uri + "#provenance";
    const std::string pubinfo = base_uri + "#pubinfo";
    const std::string ns = "http://www.nanopub.org/nschema#";

    auto add = [&](std::string graph, RdfTerm s, std::string p, RdfTerm o) {
        RdfQuad quad;
        quad.graph = std::move(graph);
        quad.subject = std::move(s);
        quad.predicate = RdfTerm::iri(std::move(p));
        quad.object = std::move(o);
        doc.quads.push_back(std::move(quad));
    };

    add(head, RdfTerm::iri(base_uri), "http://www.w3.org/1999/02/22-rdf-syntax-ns#type",
        RdfTerm::iri(ns + "Nanopublication"));
    add(head, RdfTerm::iri(base_uri), ns + "hasAssertion", RdfTerm::iri(assertion));
    add(head, RdfTerm::iri(base_uri), ns + "hasProvenance", RdfTerm::iri(provenance));
    add(head, RdfTerm::iri(base_uri), ns + "hasPublicationInfo", RdfTerm::iri(pubinfo));

    std::size_t assertions = 1 + pick(rng, 4);
    for (std::size_t i = 0; i < assertions; ++i) {
        RdfTerm subject = chance(rng, 0.3) ? RdfTerm::blank("a" + std::to_string(pick(rng, 3)))
                                           : RdfTerm::iri(random_iri(rng));
        RdfTerm object = chance(rng, 0.5) ? random_literal(rng)
                         : chance(rng, 0.3)
                             ? RdfTerm::blank("a" + std::to_string(pick(rng, 3)))
                             : RdfTerm::iri(random_iri(rng));
        add(assertion, std::move(subject), random_iri(rng), std::move(object));
    }

    add(provenance, RdfTerm::iri(assertion), "http://www.w3.org/ns/prov#wasDerivedFrom",
        RdfTerm::iri(random_iri(rng)));
    if (chance(rng, 0.5)) {
        add(provenance, RdfTerm::iri(assertion), "http://www.w3.org/ns/prov#generatedAtTime",
            RdfTerm::literal("2014-07-0" + std::to_string(1 + pick(rng, 9)) + "T10:00:00Z",
                             "http://www.w3.org/2001/XMLSchema#dateTime"));
    }
    add(pubinfo, RdfTerm::iri(base_uri), "http://purl.org/dc/terms/creator",
        RdfTerm::iri(random_iri(rng)));
    add(pubinfo, RdfTerm::iri(base_uri), "http://purl.org/dc/terms/description",
        chance(rng, 0.5) ? RdfTerm::lang_literal("a statement about something", "EN")
                         : random_literal(rng));
    return doc;
}

namespace {

const std::array<std::pair<std::string, std::string>, 5> kPrefixPool = {{
    {"ex", "http://example.org/"},
    {"dct", "http://purl.org/dc/terms/"},
    {"xsd", "http://www.w3.org/2001/XMLSchema#"},
    {"np", "http://www.nanopub.org/nschema#"},
    {"prov", "http://www.w3.org/ns/prov#"},
}};

bool pname_local_ok(std::string_view local) {
    if (local.empty()) return true;
    if (!std::isalpha(static_cast<unsigned char>(local[0])) && local[0] != '_') return false;
    return std::all_of(local.begin(), local.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '-';
    });
}

bool plain_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string trig_escape(std::string_view lexical) {
    std::string out;
    for (char c : lexical) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string random_case(Rng& rng, std::string s) {
    for (char& c : s) {
        if (std::isalpha(static_cast<unsigned char>(c)) && chance(rng, 0.5)) {
            c = static_cast<char>(std::isupper(static_cast<unsigned char>(c))
                                      ? std::tolower(static_cast<unsigned char>(c))
                                      : std::toupper(static_cast<unsigned char>(c)));
        }
    }
    return s;
}

} // namespace

std::string render_trig(Rng& rng, const QuadDocument& doc) {
    std::ostringstream out;
    std::map<std::string, std::string> blank_names; // original label -> rendered label

    auto blank_label = [&](const std::string& original) -> std::string {
        auto [it, inserted] =
            blank_names.try_emplace(original, "t" + std::to_string(blank_names.size()));
        return it->second;
    };

    std::vector<std::pair<std::string, std::string>> declared;
    for (const auto& [prefix, ns] : kPrefixPool) {
        if (chance(rng, 0.7)) {
            declared.emplace_back(prefix, ns);
            if (chance(rng, 0.5)) out << "@prefix " << prefix << ": <" << ns << "> .\n";
            else out << "PREFIX " << prefix << ": <" << ns << ">\n";
        }
    }
    if (chance(rng, 0.3)) out << "# generated fixture\n";

    auto render_iri = [&](const std::string& iri) -> std::string {
        for (const auto& [prefix, ns] : declared) {
            if (iri.starts_with(ns) && pname_local_ok(std::string_view(iri).substr(ns.size())) &&
                chance(rng, 0.6)) {
                return prefix + ":" + iri.substr(ns.size());
            }
        }
        return "<" + iri + ">";
    };

    auto render_term = [&](const RdfTerm& term) -> std::string {
        switch (term.kind) {
            case RdfTerm::Kind::Iri: return render_iri(term.value);
            case RdfTerm::Kind::Blank: return "_:" + blank_label(term.value);
            case RdfTerm::Kind::Literal: break;
        }
        if (!term.language.empty()) {
            return "\"" + trig_escape(term.value) + "\"@" + random_case(rng, term.language);
        }
        if (term.datatype == "http://www.w3.org/2001/XMLSchema#integer" &&
            plain_integer(term.value) && chance(rng, 0.5)) {
            return term.value;
        }
        if (term.datatype == "http://www.w3.org/2001/XMLSchema#boolean" &&
            (term.value == "true" || term.value == "false") && chance(rng, 0.5)) {
            return term.value;
        }
        if (term.datatype == trustyuri::kXsdString && chance(rng, 0.7)) {
            return "\"" + trig_escape(term.value) + "\"";
        }
        return "\"" + trig_escape(term.value) + "\"^^" + render_iri(term.datatype);
    };

    // Quads are emitted strictly in document order; consecutive quads
    // sharing a graph share a block, so the parse order is unchanged.
    bool block_open = false;
    bool top_level_default = false; // default graph rendered without braces
    std::string current_graph;
    bool have_graph = false;
    const RdfQuad* prev = nullptr;

    auto close_statement = [&]() {
        if (prev) out << " .\n";
        prev = nullptr;
    };
    auto close_block = [&]() {
        close_statement();
        if (block_open) out << "}\n";
        block_open = false;
        top_level_default = false;
        have_graph = false;
    };

    for (const RdfQuad& quad : doc.quads) {
        if (!have_graph || quad.graph != current_graph) {
            close_block();
            current_graph = quad.graph;
            have_graph = true;
            if (current_graph.empty()) {
                top_level_default = chance(rng, 0.5);
                if (!top_level_default) {
                    out << "{\n";
                    block_open = true;
                }
            } else {
                if (chance(rng, 0.4)) out << "GRAPH ";
                out << render_iri(current_graph) << " {\n";
                block_open = true;
            }
        }

        if (prev && prev->subject == quad.subject) {
            if (prev->predicate == quad.predicate) {
                out << " , " << render_term(quad.object);
            } else {
                out << " ;\n    " << render_term(quad.predicate) << " "
                    << render_term(quad.object);
            }
        } else {
            close_statement();
            if (block_open) out << "  ";
            out << render_term(quad.subject) << " ";
            if (quad.predicate.value == trustyuri::kRdfType && chance(rng, 0.5)) out << "a ";
            else out << render_term(quad.predicate) << " ";
            out << render_term(quad.object);
        }
        prev = &quad;
    }
    close_block();
    return out.str();
}

trustyuri::PreprocessedQuad random_preprocessed_quad(Rng& rng) {
    auto pick_of = [&](std::initializer_list<const char*> pool) -> std::string {
        auto it = pool.begin();
        std::advance(it, pick(rng, pool.size()));
        return *it;
    };
    trustyuri::PreprocessedQuad q;
    q.graph = pick_of({"", "http://g/1", "http://g/2", "http://g/1 ", "http://g/1 #x"});
    q.subject = pick_of({"http://s/a", "http://s/ab", "http://s/b", "http://s/ ", "urn:s:1"});
    q.predicate = pick_of({"http://p/1", "http://p/2", "http://p/12"});
    if (chance(rng, 0.5)) {
        q.object_is_iri = true;
        q.object_iri =
            pick_of({"http://o/1", "http://o/12", "http://o/2", "http://o/r. ", "http://o/r. #p"});
    } else {
        q.object_is_iri = false;
        q.object_label = pick_of({"", "abc", "abcd", "ab\nc", "ab\\c", "ab\\nc", "a c", "A"});
        if (chance(rng, 0.5)) {
            q.object_datatype = pick_of(
                {"http://www.w3.org/2001/XMLSchema#string", "http://dt/1", "http://dt/2"});
        } else {
            q.object_language = pick_of({"en", "en-gb", "de"});
        }
    }
    return q;
}

} // namespace testsupport
