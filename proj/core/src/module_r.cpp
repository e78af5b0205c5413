#include "trustyuri/module_r.hpp"

#include "trustyuri/errors.hpp"
#include "trustyuri/nquads.hpp"
#include "trustyuri/sha256.hpp"
#include "trustyuri/trig.hpp"

#include <algorithm>
#include <fstream>

namespace trustyuri {

namespace {

std::strong_ordering order_of(int c) {
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Byte-wise comparison; char_traits<char> compares as unsigned, which on
// UTF-8 strings equals code-point order. Prefix ties: shorter first.
std::strong_ordering compare_strings(std::string_view a, std::string_view b) {
    return order_of(a.compare(b));
}

} // namespace

std::string replace_all(std::string_view text, std::string_view needle,
                        std::string_view replacement) {
    if (needle.empty()) return std::string(text);
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (true) {
        std::size_t hit = text.find(needle, pos);
        if (hit == std::string_view::npos) {
            out.append(text.substr(pos));
            return out;
        }
        out.append(text.substr(pos, hit - pos));
        out.append(replacement);
        pos = hit + needle.size();
    }
}

PreprocessedQuad preprocess_quad(const RdfQuad& quad, std::string_view artifact_code) {
    auto blank_space = [&](const std::string& iri) {
        return replace_all(iri, artifact_code, std::string_view(&kPlaceholderChar, 1));
    };
    if (quad.subject.is_blank() || quad.object.is_blank()) {
        throw Error("blank nodes are not supported here; they have to be skolemized");
    }
    PreprocessedQuad p;
    p.graph = blank_space(quad.graph);
    p.subject = blank_space(quad.subject.value);
    p.predicate = blank_space(quad.predicate.value);
    if (quad.object.is_iri()) {
        p.object_is_iri = true;
        p.object_iri = blank_space(quad.object.value);
    } else {
        p.object_is_iri = false;
        p.object_label = quad.object.value;
        p.object_datatype = quad.object.datatype;
        p.object_language = quad.object.language;
    }
    return p;
}

std::strong_ordering compare_quads(const PreprocessedQuad& a, const PreprocessedQuad& b) {
    if (auto c = compare_strings(a.graph, b.graph); c != 0) return c;          // rule 1
    if (auto c = compare_strings(a.subject, b.subject); c != 0) return c;      // rule 2
    if (auto c = compare_strings(a.predicate, b.predicate); c != 0) return c;  // rule 3
    if (a.object_is_iri != b.object_is_iri) {                                  // rule 4
        return a.object_is_iri ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.object_is_iri) {                                                     // rule 5
        return compare_strings(a.object_iri, b.object_iri);
    }
    if (auto c = compare_strings(a.object_label, b.object_label); c != 0) return c; // rule 6
    bool a_dt = !a.object_datatype.empty();
    bool b_dt = !b.object_datatype.empty();
    if (a_dt != b_dt) {                                                        // rule 7
        return a_dt ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    bool a_lang = !a.object_language.empty();
    bool b_lang = !b.object_language.empty();
    if (a_lang != b_lang) {                                                    // rule 8
        return a_lang ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (a_dt) return compare_strings(a.object_datatype, b.object_datatype);    // rule 9
    return compare_strings(a.object_language, b.object_language);              // rule 9
}

namespace {

// '\' -> "\\" and U+000A -> "\n"; everything else, including U+000D,
// passes through.
void append_escaped_label(std::string& out, std::string_view label) {
    for (char c : label) {
        if (c == '\\') out += "\\\\";
        else if (c == '\n') out += "\\n";
        else out += c;
    }
}

std::string unescape_label(std::string_view escaped) {
    std::string out;
    out.reserve(escaped.size());
    for (std::size_t i = 0; i < escaped.size(); ++i) {
        if (escaped[i] != '\\') {
            out += escaped[i];
            continue;
        }
        if (i + 1 >= escaped.size()) throw Error("dangling '\\' in serialized literal");
        char next = escaped[++i];
        if (next == '\\') out += '\\';
        else if (next == 'n') out += '\n';
        else throw Error("invalid escape in serialized literal");
    }
    return out;
}

} // namespace

std::string serialize_statement(const PreprocessedQuad& quad) {
    std::string out;
    out.reserve(quad.graph.size() + quad.subject.size() + quad.predicate.size() + 64);
    out += quad.graph;
    out += '\n';
    out += quad.subject;
    out += '\n';
    out += quad.predicate;
    out += '\n';
    if (quad.object_is_iri) {
        out += quad.object_iri;
    } else if (!quad.object_language.empty()) {
        out += '@';
        out += quad.object_language;
        out += ' ';
        append_escaped_label(out, quad.object_label);
    } else {
        out += '^';
        out += quad.object_datatype;
        out += ' ';
        append_escaped_label(out, quad.object_label);
    }
    out += '\n';
    return out;
}

PreprocessedQuad parse_serialized_statement(std::string_view text) {
    PreprocessedQuad quad;
    std::string_view rest = text;
    auto take_line = [&]() -> std::string_view {
        std::size_t nl = rest.find('\n');
        if (nl == std::string_view::npos) throw Error("truncated serialized statement");
        std::string_view line = rest.substr(0, nl);
        rest = rest.substr(nl + 1);
        return line;
    };
    quad.graph = std::string(take_line());
    quad.subject = std::string(take_line());
    quad.predicate = std::string(take_line());
    std::string_view object = take_line();
    if (!rest.empty()) throw Error("serialized statement has trailing content");

    if (object.starts_with('^') || object.starts_with('@')) {
        bool langed = object[0] == '@';
        std::size_t space = object.find(' ');
        if (space == std::string_view::npos)
            throw Error("serialized literal is missing its separator");
        quad.object_is_iri = false;
        if (langed) quad.object_language = std::string(object.substr(1, space - 1));
        else quad.object_datatype = std::string(object.substr(1, space - 1));
        quad.object_label = unescape_label(object.substr(space + 1));
    } else {
        quad.object_is_iri = true;
        quad.object_iri = std::string(object);
    }
    return quad;
}

namespace {

// Walks an escaped label, decoding one character at a time, so two labels
// can be compared in their unescaped form without allocating.
struct EscapedLabelCursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char take() {
        char c = text[pos++];
        if (c != '\\') return c;
        char next = pos < text.size() ? text[pos++] : '\0';
        return next == 'n' ? '\n' : next;
    }
};

std::strong_ordering compare_escaped_labels(std::string_view a, std::string_view b) {
    EscapedLabelCursor ca{a}, cb{b};
    while (!ca.done() && !cb.done()) {
        unsigned char x = static_cast<unsigned char>(ca.take());
        unsigned char y = static_cast<unsigned char>(cb.take());
        if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (ca.done() && cb.done()) return std::strong_ordering::equal;
    return ca.done() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering compare_object_lines(std::string_view a, std::string_view b) {
    auto is_literal = [](std::string_view line) {
        return line.starts_with('^') || line.starts_with('@');
    };
    bool lit_a = is_literal(a);
    bool lit_b = is_literal(b);
    if (lit_a != lit_b) {                                            // rule 4
        return lit_a ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (!lit_a) return order_of(a.compare(b));                       // rule 5
    std::size_t space_a = a.find(' ');
    std::size_t space_b = b.find(' ');
    if (space_a == std::string_view::npos || space_b == std::string_view::npos)
        throw Error("malformed serialized literal");
    if (auto c = compare_escaped_labels(a.substr(space_a + 1), b.substr(space_b + 1)); c != 0)
        return c;                                                    // rule 6
    bool dt_a = a[0] == '^';
    bool dt_b = b[0] == '^';
    if (dt_a != dt_b) {                                              // rules 7/8
        return dt_a ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return order_of(a.substr(1, space_a - 1).compare(b.substr(1, space_b - 1))); // rule 9
}

} // namespace

std::strong_ordering compare_serialized_statements(std::string_view a, std::string_view b) {
    // Graph, subject and predicate lines compare correctly as plain bytes.
    for (int line = 0; line < 3; ++line) {
        std::size_t nl_a = a.find('\n');
        std::size_t nl_b = b.find('\n');
        if (nl_a == std::string_view::npos || nl_b == std::string_view::npos)
            throw Error("truncated serialized statement");
        if (auto c = order_of(a.substr(0, nl_a).compare(b.substr(0, nl_b))); c != 0) return c;
        a = a.substr(nl_a + 1);
        b = b.substr(nl_b + 1);
    }
    if (a.empty() || a.back() != '\n' || b.empty() || b.back() != '\n')
        throw Error("serialized statement must end in a newline");
    return compare_object_lines(a.substr(0, a.size() - 1), b.substr(0, b.size() - 1));
}

std::string hash_preprocessed_dataset(std::vector<PreprocessedQuad> quads) {
    std::sort(quads.begin(), quads.end(),
              [](const PreprocessedQuad& a, const PreprocessedQuad& b) {
                  return compare_quads(a, b) < 0;
              });
    Sha256 hasher;
    for (const PreprocessedQuad& quad : quads) hasher.update(serialize_statement(quad));
    return encode_hash_tail(hasher.finish());
}

TransformPlan::TransformPlan(std::string base_uri, Module target_module)
    : base_uri_(std::move(base_uri)), module_(target_module) {
    if (base_uri_.empty()) throw Error("base URI must not be empty");
    if (module_ != Module::RA && module_ != Module::RB)
        throw Error("transformation requires an RDF module (RA or RB)");
    placeholder_uri_ = append_with_delimiter(base_uri_, std::string_view(&kPlaceholderChar, 1));
}

std::string TransformPlan::rewrite_iri(const std::string& iri) const {
    if (iri.size() >= base_uri_.size() &&
        std::string_view(iri).substr(0, base_uri_.size()) == base_uri_) {
        return placeholder_uri_ + iri.substr(base_uri_.size());
    }
    return iri;
}

std::string TransformPlan::skolem_iri(const std::string& label) {
    auto [it, inserted] = blank_index_.try_emplace(label, blank_index_.size() + 1);
    return placeholder_uri_ + "#_" + std::to_string(it->second);
}

PreprocessedQuad TransformPlan::rewrite(const RdfQuad& quad) {
    PreprocessedQuad p;
    p.graph = rewrite_iri(quad.graph);
    p.subject = quad.subject.is_blank() ? skolem_iri(quad.subject.value)
                                        : rewrite_iri(quad.subject.value);
    p.predicate = rewrite_iri(quad.predicate.value);
    if (quad.object.is_iri()) {
        p.object_is_iri = true;
        p.object_iri = rewrite_iri(quad.object.value);
    } else if (quad.object.is_blank()) {
        p.object_is_iri = true;
        p.object_iri = skolem_iri(quad.object.value);
    } else {
        p.object_is_iri = false;
        p.object_label = quad.object.value;
        p.object_datatype = quad.object.datatype;
        p.object_language = quad.object.language;
    }
    return p;
}

RdfQuad materialize_quad(const PreprocessedQuad& quad, std::string_view artifact_code) {
    auto fill = [&](const std::string& iri) {
        return replace_all(iri, std::string_view(&kPlaceholderChar, 1), artifact_code);
    };
    RdfQuad out;
    out.graph = fill(quad.graph);
    out.subject = RdfTerm::iri(fill(quad.subject));
    out.predicate = RdfTerm::iri(fill(quad.predicate));
    if (quad.object_is_iri) {
        out.object = RdfTerm::iri(fill(quad.object_iri));
    } else if (!quad.object_language.empty()) {
        out.object = RdfTerm::lang_literal(quad.object_label, quad.object_language);
    } else {
        out.object = RdfTerm::literal(quad.object_label, quad.object_datatype);
    }
    return out;
}

TransformResult transform_rdf(const QuadDocument& doc, std::string_view base_uri, Module module) {
    TransformPlan plan{std::string(base_uri), module};

    std::vector<PreprocessedQuad> pre;
    pre.reserve(doc.quads.size());
    for (const RdfQuad& quad : doc.quads) {
        PreprocessedQuad p = plan.rewrite(quad);
        if (module == Module::RB && p.graph != plan.placeholder_uri()) {
            throw Error("module RB requires all statements to be in the single graph "
                        "named by the trusty URI");
        }
        pre.push_back(std::move(p));
    }

    std::sort(pre.begin(), pre.end(), [](const PreprocessedQuad& a, const PreprocessedQuad& b) {
        return compare_quads(a, b) < 0;
    });
    Sha256 hasher;
    for (const PreprocessedQuad& quad : pre) hasher.update(serialize_statement(quad));
    ArtifactCode code{module, encode_hash_tail(hasher.finish())};
    std::string code_str = code.str();

    TransformResult result;
    result.code = code;
    result.trusty_uri = append_artifact_code(base_uri, code);
    result.document.source_format = doc.source_format;
    result.document.quads.reserve(pre.size());
    for (const PreprocessedQuad& quad : pre) {
        result.document.quads.push_back(materialize_quad(quad, code_str));
    }
    return result;
}

CheckReport check_rdf(const QuadDocument& doc, const TrustyUriCandidate& candidate) {
    if (candidate.classification != Classification::Potential || !candidate.code) {
        return CheckReport::error("not a potential trusty URI: " + candidate.diagnostic);
    }
    const ArtifactCode& expected = *candidate.code;
    if (expected.module != Module::RA && expected.module != Module::RB) {
        return CheckReport::error("not an RDF module code", expected);
    }
    std::string code_str = expected.str();

    std::vector<PreprocessedQuad> pre;
    pre.reserve(doc.quads.size());
    for (const RdfQuad& quad : doc.quads) {
        if (quad.subject.is_blank() || quad.object.is_blank()) {
            return CheckReport::error(
                "blank nodes are not supported and have to be skolemized", expected);
        }
        pre.push_back(preprocess_quad(quad, code_str));
    }

    if (expected.module == Module::RB) {
        std::string expected_graph = replace_all(candidate.uri, code_str,
                                                 std::string_view(&kPlaceholderChar, 1));
        for (const PreprocessedQuad& quad : pre) {
            if (quad.graph != expected_graph) {
                return CheckReport::invalid(
                    expected, std::nullopt,
                    "module RB requires all statements to be in the single graph "
                    "named by the trusty URI");
            }
        }
    }

    bool code_left_over = false;
    std::sort(pre.begin(), pre.end(), [](const PreprocessedQuad& a, const PreprocessedQuad& b) {
        return compare_quads(a, b) < 0;
    });
    Sha256 hasher;
    for (const PreprocessedQuad& quad : pre) {
        std::string statement = serialize_statement(quad);
        if (statement.find(code_str) != std::string::npos) code_left_over = true;
        hasher.update(statement);
    }
    ArtifactCode computed{expected.module, encode_hash_tail(hasher.finish())};

    std::string note;
    if (code_left_over) {
        note = "artifact code still occurs outside IRI positions after preprocessing";
    }
    if (computed == expected) {
        CheckReport report = CheckReport::valid(expected, computed);
        report.message = note;
        return report;
    }
    return CheckReport::invalid(expected, computed,
                                note.empty() ? "dataset hash does not match" : note);
}

FileTransformResult transform_rdf_to_file(const std::filesystem::path& input,
                                          std::string_view base_uri, Module module,
                                          std::optional<RdfFormat> format) {
    RdfFormat fmt = format.value_or(input.extension() == ".trig" ? RdfFormat::TriG
                                                                 : RdfFormat::NQuads);
    std::ifstream in(input, std::ios::binary);
    if (!in) throw Error("cannot open file: " + input.string());
    QuadDocument doc = fmt == RdfFormat::TriG ? parse_trig(in) : parse_nquads(in);

    TransformResult result = transform_rdf(doc, base_uri, module);

    std::string name = input.filename().string();
    std::string stem = input.has_extension() ? input.stem().string() : name;
    std::filesystem::path target =
        input.parent_path() / (append_artifact_code(stem, result.code) + ".nq");
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write file: " + target.string());
    serialize_nquads(result.document, out);
    out.flush();
    if (!out) throw Error("I/O error while writing: " + target.string());
    return {target, result.trusty_uri, result.code};
}

} // namespace trustyuri
