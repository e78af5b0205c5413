#include "trustyuri/nquads.hpp"

#include "trustyuri/errors.hpp"

#include <sstream>

namespace trustyuri {

namespace {

void append_utf8(std::string& out, std::uint32_t code) {
    if (code < 0x80) {
        out += static_cast<char>(code);
    } else if (code < 0x800) {
        out += static_cast<char>(0xc0 | (code >> 6));
        out += static_cast<char>(0x80 | (code & 0x3f));
    } else if (code < 0x10000) {
        out += static_cast<char>(0xe0 | (code >> 12));
        out += static_cast<char>(0x80 | ((code >> 6) & 0x3f));
        out += static_cast<char>(0x80 | (code & 0x3f));
    } else {
        out += static_cast<char>(0xf0 | (code >> 18));
        out += static_cast<char>(0x80 | ((code >> 12) & 0x3f));
        out += static_cast<char>(0x80 | ((code >> 6) & 0x3f));
        out += static_cast<char>(0x80 | (code & 0x3f));
    }
}

bool is_ascii_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

// Characters the IRIREF production forbids unescaped (besides controls).
bool iri_char_forbidden(unsigned char c) {
    return c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' ||
           c == '|' || c == '^' || c == '`' || c == '\\';
}

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 0;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char take() { return text[pos++]; }
    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line); }
};

std::uint32_t parse_hex(Cursor& c, int digits) {
    std::uint32_t value = 0;
    for (int i = 0; i < digits; ++i) {
        if (c.eof()) c.fail("truncated \\u escape");
        char ch = c.take();
        value <<= 4;
        if (ch >= '0' && ch <= '9') value |= static_cast<std::uint32_t>(ch - '0');
        else if (ch >= 'a' && ch <= 'f') value |= static_cast<std::uint32_t>(ch - 'a' + 10);
        else if (ch >= 'A' && ch <= 'F') value |= static_cast<std::uint32_t>(ch - 'A' + 10);
        else c.fail("invalid hex digit in \\u escape");
    }
    return value;
}

std::string parse_iriref(Cursor& c) {
    if (c.eof() || c.take() != '<') c.fail("expected '<'");
    std::string iri;
    while (true) {
        if (c.eof()) c.fail("unterminated IRI");
        char ch = c.take();
        if (ch == '>') break;
        if (ch == '\\') {
            if (c.eof()) c.fail("truncated escape in IRI");
            char esc = c.take();
            std::uint32_t code;
            if (esc == 'u') code = parse_hex(c, 4);
            else if (esc == 'U') code = parse_hex(c, 8);
            else c.fail("invalid escape in IRI");
            if (code < 0x80 && iri_char_forbidden(static_cast<unsigned char>(code)))
                c.fail("escaped character not allowed in IRI");
            append_utf8(iri, code);
        } else if (iri_char_forbidden(static_cast<unsigned char>(ch))) {
            c.fail(std::string("character not allowed in IRI: '") + ch + "'");
        } else {
            iri += ch;
        }
    }
    if (!has_uri_scheme(iri)) c.fail("IRI is not absolute: <" + iri + ">");
    return iri;
}

bool blank_label_char(unsigned char c) {
    return is_ascii_alpha(static_cast<char>(c)) || is_ascii_digit(static_cast<char>(c)) ||
           c == '_' || c == '-' || c >= 0x80;
}

std::string parse_blank_label(Cursor& c) {
    if (c.eof() || c.take() != '_') c.fail("expected blank node");
    if (c.eof() || c.take() != ':') c.fail("expected ':' after '_'");
    std::string label;
    while (!c.eof() &&
           (blank_label_char(static_cast<unsigned char>(c.peek())) || c.peek() == '.')) {
        label += c.take();
    }
    // A label cannot end in '.'; trailing dots belong to the statement.
    while (!label.empty() && label.back() == '.') {
        label.pop_back();
        --c.pos;
    }
    if (label.empty()) c.fail("empty blank node label");
    return label;
}

RdfTerm parse_literal(Cursor& c) {
    if (c.eof() || c.take() != '"') c.fail("expected '\"'");
    std::string lexical;
    while (true) {
        if (c.eof()) c.fail("unterminated literal");
        char ch = c.take();
        if (ch == '"') break;
        if (ch == '\r') c.fail("raw carriage return in literal");
        if (ch == '\\') {
            if (c.eof()) c.fail("truncated escape in literal");
            char esc = c.take();
            switch (esc) {
                case 't': lexical += '\t'; break;
                case 'b': lexical += '\b'; break;
                case 'n': lexical += '\n'; break;
                case 'r': lexical += '\r'; break;
                case 'f': lexical += '\f'; break;
                case '"': lexical += '"'; break;
                case '\'': lexical += '\''; break;
                case '\\': lexical += '\\'; break;
                case 'u': append_utf8(lexical, parse_hex(c, 4)); break;
                case 'U': append_utf8(lexical, parse_hex(c, 8)); break;
                default: c.fail("invalid escape in literal");
            }
        } else {
            lexical += ch;
        }
    }
    if (!c.eof() && c.peek() == '^') {
        c.take();
        if (c.eof() || c.take() != '^') c.fail("expected '^^' before datatype");
        return RdfTerm::literal(std::move(lexical), parse_iriref(c));
    }
    if (!c.eof() && c.peek() == '@') {
        c.take();
        std::string tag;
        while (!c.eof() && is_ascii_alpha(c.peek())) tag += c.take();
        if (tag.empty()) c.fail("empty language tag");
        while (!c.eof() && c.peek() == '-') {
            tag += c.take();
            std::size_t part = 0;
            while (!c.eof() && (is_ascii_alpha(c.peek()) || is_ascii_digit(c.peek()))) {
                tag += c.take();
                ++part;
            }
            if (part == 0) c.fail("malformed language tag");
        }
        return RdfTerm::lang_literal(std::move(lexical), std::move(tag));
    }
    return RdfTerm::literal(std::move(lexical));
}

RdfQuad parse_statement(Cursor& c) {
    RdfQuad quad;

    if (c.peek() == '<') quad.subject = RdfTerm::iri(parse_iriref(c));
    else if (c.peek() == '_') quad.subject = RdfTerm::blank(parse_blank_label(c));
    else c.fail("expected IRI or blank node subject");

    c.skip_ws();
    if (c.eof() || c.peek() != '<') c.fail("expected IRI predicate");
    quad.predicate = RdfTerm::iri(parse_iriref(c));

    c.skip_ws();
    if (c.eof()) c.fail("missing object");
    if (c.peek() == '<') quad.object = RdfTerm::iri(parse_iriref(c));
    else if (c.peek() == '_') quad.object = RdfTerm::blank(parse_blank_label(c));
    else if (c.peek() == '"') quad.object = parse_literal(c);
    else c.fail("expected IRI, blank node or literal object");

    c.skip_ws();
    if (!c.eof() && c.peek() == '<') {
        quad.graph = parse_iriref(c);
        c.skip_ws();
    } else if (!c.eof() && c.peek() == '_') {
        c.fail("blank node graph labels are not supported");
    }

    if (c.eof() || c.take() != '.') c.fail("expected '.' at end of statement");
    c.skip_ws();
    if (!c.eof() && c.peek() != '#') c.fail("unexpected characters after '.'");
    return quad;
}

} // namespace

bool has_uri_scheme(std::string_view iri) {
    if (iri.empty() || !is_ascii_alpha(iri[0])) return false;
    for (std::size_t i = 1; i < iri.size(); ++i) {
        char c = iri[i];
        if (c == ':') return true;
        if (!is_ascii_alpha(c) && !is_ascii_digit(c) && c != '+' && c != '-' && c != '.')
            return false;
    }
    return false;
}

std::optional<RdfQuad> NQuadsParser::next() {
    while (std::getline(in_, buf_)) {
        ++line_;
        if (!buf_.empty() && buf_.back() == '\r') buf_.pop_back();
        Cursor c{buf_, 0, line_};
        c.skip_ws();
        if (c.eof() || c.peek() == '#') continue;
        return parse_statement(c);
    }
    if (in_.bad()) throw Error("I/O error while reading N-Quads input");
    return std::nullopt;
}

QuadDocument parse_nquads(std::istream& in) {
    QuadDocument doc;
    doc.source_format = RdfFormat::NQuads;
    NQuadsParser parser(in);
    while (auto quad = parser.next()) doc.quads.push_back(std::move(*quad));
    return doc;
}

QuadDocument parse_nquads(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_nquads(in);
}

std::string escape_nquads_literal(std::string_view lexical) {
    std::string out;
    out.reserve(lexical.size());
    for (char c : lexical) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

namespace {

void append_term(std::string& out, const RdfTerm& term) {
    switch (term.kind) {
        case RdfTerm::Kind::Iri:
            out += '<';
            out += term.value;
            out += '>';
            break;
        case RdfTerm::Kind::Blank:
            out += "_:";
            out += term.value;
            break;
        case RdfTerm::Kind::Literal:
            out += '"';
            out += escape_nquads_literal(term.value);
            out += '"';
            if (!term.language.empty()) {
                out += '@';
                out += term.language;
            } else if (term.datatype != kXsdString) {
                out += "^^<";
                out += term.datatype;
                out += '>';
            }
            break;
    }
}

} // namespace

std::string to_nquads_line(const RdfQuad& quad) {
    std::string out;
    append_term(out, quad.subject);
    out += ' ';
    append_term(out, quad.predicate);
    out += ' ';
    append_term(out, quad.object);
    if (!quad.graph.empty()) {
        out += " <";
        out += quad.graph;
        out += '>';
    }
    out += " .\n";
    return out;
}

void serialize_nquads(const QuadDocument& doc, std::ostream& out) {
    for (const RdfQuad& quad : doc.quads) out << to_nquads_line(quad);
}

std::string serialize_nquads(const QuadDocument& doc) {
    std::string out;
    for (const RdfQuad& quad : doc.quads) out += to_nquads_line(quad);
    return out;
}

} // namespace trustyuri
