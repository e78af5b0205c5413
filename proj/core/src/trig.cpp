#include "trustyuri/trig.hpp"

#include "trustyuri/errors.hpp"
#include "trustyuri/nquads.hpp"

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

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool name_char(unsigned char c) {
    return is_alpha(static_cast<char>(c)) || is_digit(static_cast<char>(c)) || c == '_' ||
           c == '-' || c == ':' || c == '.' || c >= 0x80;
}

bool iri_char_forbidden(unsigned char c) {
    return c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' ||
           c == '|' || c == '^' || c == '`' || c == '\\';
}

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

} // namespace

struct TrigParser::Lexer {
    enum class Kind {
        Eof,
        Dot,
        Semicolon,
        Comma,
        LBrace,
        RBrace,
        CaretCaret,
        Iri,       // text = decoded IRI
        Name,      // bare word or prefixed name, text = lexeme
        AtWord,    // '@' followed by a word, text = word
        Blank,     // text = label
        String,    // text = decoded lexical form
        Integer,   // text = lexeme
        Decimal,
        Double,
    };

    struct Token {
        Kind kind;
        std::string text;
    };

    explicit Lexer(std::istream& in) : in(in) {}

    std::istream& in;
    std::size_t line = 1;
    std::deque<Token> pushed;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line); }

    int get() {
        int c = in.get();
        if (c == '\n') ++line;
        return c;
    }
    void unget_char(char c) {
        if (c == '\n') --line;
        in.clear(); // putback must work right after hitting EOF
        in.putback(c);
    }

    void push(Token t) { pushed.push_front(std::move(t)); }

    Token take() {
        if (!pushed.empty()) {
            Token t = std::move(pushed.front());
            pushed.pop_front();
            return t;
        }
        return scan();
    }

    const Token& peek() {
        if (pushed.empty()) pushed.push_back(scan());
        return pushed.front();
    }

    Token scan() {
        int ci;
        // Skip whitespace and comments.
        while (true) {
            ci = get();
            if (ci == EOF) return {Kind::Eof, {}};
            char c = static_cast<char>(ci);
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
            if (c == '#') {
                while (ci != EOF && ci != '\n') ci = get();
                continue;
            }
            break;
        }
        char c = static_cast<char>(ci);
        switch (c) {
            case '.': return {Kind::Dot, {}};
            case ';': return {Kind::Semicolon, {}};
            case ',': return {Kind::Comma, {}};
            case '{': return {Kind::LBrace, {}};
            case '}': return {Kind::RBrace, {}};
            case '<': return {Kind::Iri, scan_iri()};
            case '"': return {Kind::String, scan_string()};
            case '^': {
                int c2 = get();
                if (c2 != '^') fail("expected '^^'");
                return {Kind::CaretCaret, {}};
            }
            case '@': {
                std::string word;
                while ((ci = get()) != EOF && is_alpha(static_cast<char>(ci)))
                    word += static_cast<char>(ci);
                // Language subtags after a string are handled by the parser;
                // include them in the word so tags like "en-GB" stay whole.
                while (ci == '-') {
                    word += '-';
                    while ((ci = get()) != EOF &&
                           (is_alpha(static_cast<char>(ci)) || is_digit(static_cast<char>(ci))))
                        word += static_cast<char>(ci);
                }
                if (ci != EOF) unget_char(static_cast<char>(ci));
                if (word.empty()) fail("dangling '@'");
                return {Kind::AtWord, std::move(word)};
            }
            case '_': {
                int c2 = get();
                if (c2 != ':') fail("expected ':' after '_'");
                std::string label;
                while ((ci = get()) != EOF && name_char(static_cast<unsigned char>(ci)))
                    label += static_cast<char>(ci);
                if (ci != EOF) unget_char(static_cast<char>(ci));
                while (!label.empty() && label.back() == '.') {
                    label.pop_back();
                    push({Kind::Dot, {}});
                }
                if (label.empty() || label.find(':') != std::string::npos)
                    fail("malformed blank node label");
                return {Kind::Blank, std::move(label)};
            }
            case '(': fail("RDF collections are not supported");
            case '[': fail("anonymous blank nodes are not supported");
            case '\'': fail("single-quoted strings are not supported");
            default: break;
        }
        if (c == '+' || c == '-' || is_digit(c)) return scan_number(c);
        if (name_char(static_cast<unsigned char>(c)) && c != '.') return scan_name(c);
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string scan_iri() {
        std::string iri;
        while (true) {
            int ci = get();
            if (ci == EOF) fail("unterminated IRI");
            char c = static_cast<char>(ci);
            if (c == '>') break;
            if (c == '\\') {
                int e = get();
                std::uint32_t code;
                if (e == 'u') code = hex(4);
                else if (e == 'U') code = hex(8);
                else fail("invalid escape in IRI");
                if (code < 0x80 && iri_char_forbidden(static_cast<unsigned char>(code)))
                    fail("escaped character not allowed in IRI");
                append_utf8(iri, code);
            } else if (iri_char_forbidden(static_cast<unsigned char>(c))) {
                fail(std::string("character not allowed in IRI: '") + c + "'");
            } else {
                iri += c;
            }
        }
        return iri;
    }

    std::uint32_t hex(int digits) {
        std::uint32_t value = 0;
        for (int i = 0; i < digits; ++i) {
            int ci = get();
            if (ci == EOF) fail("truncated \\u escape");
            char c = static_cast<char>(ci);
            value <<= 4;
            if (c >= '0' && c <= '9') value |= static_cast<std::uint32_t>(c - '0');
            else if (c >= 'a' && c <= 'f') value |= static_cast<std::uint32_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') value |= static_cast<std::uint32_t>(c - 'A' + 10);
            else fail("invalid hex digit in \\u escape");
        }
        return value;
    }

    std::string scan_string() {
        // Leading '"' already consumed. Detect long strings to reject them.
        std::string lexical;
        int first = get();
        if (first == '"') {
            int third = get();
            if (third == '"') fail("long strings are not supported");
            if (third != EOF) unget_char(static_cast<char>(third));
            return lexical; // empty string
        }
        if (first == EOF) fail("unterminated string");
        unget_char(static_cast<char>(first));
        while (true) {
            int ci = get();
            if (ci == EOF) fail("unterminated string");
            char c = static_cast<char>(ci);
            if (c == '"') break;
            if (c == '\n' || c == '\r') fail("raw line break in string");
            if (c == '\\') {
                int e = get();
                if (e == EOF) fail("truncated escape in string");
                switch (e) {
                    case 't': lexical += '\t'; break;
                    case 'b': lexical += '\b'; break;
                    case 'n': lexical += '\n'; break;
                    case 'r': lexical += '\r'; break;
                    case 'f': lexical += '\f'; break;
                    case '"': lexical += '"'; break;
                    case '\'': lexical += '\''; break;
                    case '\\': lexical += '\\'; break;
                    case 'u': append_utf8(lexical, hex(4)); break;
                    case 'U': append_utf8(lexical, hex(8)); break;
                    default: fail("invalid escape in string");
                }
            } else {
                lexical += c;
            }
        }
        return lexical;
    }

    Token scan_number(char first) {
        std::string lexeme(1, first);
        bool has_dot = false, has_exp = false;
        while (true) {
            int ci = get();
            if (ci == EOF) break;
            char c = static_cast<char>(ci);
            if (is_digit(c)) {
                lexeme += c;
            } else if (c == '.' && !has_dot && !has_exp) {
                int nxt = get();
                if (nxt != EOF) unget_char(static_cast<char>(nxt));
                if (nxt == EOF || !is_digit(static_cast<char>(nxt))) {
                    unget_char(c); // statement terminator, not a decimal point
                    break;
                }
                has_dot = true;
                lexeme += c;
            } else if ((c == 'e' || c == 'E') && !has_exp) {
                has_exp = true;
                lexeme += c;
                int nxt = get();
                if (nxt == '+' || nxt == '-') lexeme += static_cast<char>(nxt);
                else if (nxt != EOF) unget_char(static_cast<char>(nxt));
            } else {
                unget_char(c);
                break;
            }
        }
        if (lexeme == "+" || lexeme == "-") fail("malformed number");
        if (has_exp) return {Kind::Double, std::move(lexeme)};
        if (has_dot) return {Kind::Decimal, std::move(lexeme)};
        return {Kind::Integer, std::move(lexeme)};
    }

    Token scan_name(char first) {
        std::string lexeme(1, first);
        int ci;
        while ((ci = get()) != EOF && name_char(static_cast<unsigned char>(ci)))
            lexeme += static_cast<char>(ci);
        if (ci != EOF) unget_char(static_cast<char>(ci));
        while (!lexeme.empty() && lexeme.back() == '.') {
            lexeme.pop_back();
            push({Kind::Dot, {}});
        }
        if (lexeme.empty()) fail("malformed name");
        return {Kind::Name, std::move(lexeme)};
    }
};

TrigParser::TrigParser(std::istream& in) : lex_(std::make_unique<Lexer>(in)) {}
TrigParser::~TrigParser() = default;

std::size_t TrigParser::line() const { return lex_->line; }

namespace {

constexpr std::string_view kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
constexpr std::string_view kXsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
constexpr std::string_view kXsdDouble = "http://www.w3.org/2001/XMLSchema#double";
constexpr std::string_view kXsdBoolean = "http://www.w3.org/2001/XMLSchema#boolean";

} // namespace

std::optional<RdfQuad> TrigParser::next() {
    while (pending_.empty()) {
        if (!pump()) return std::nullopt;
    }
    RdfQuad quad = std::move(pending_.front());
    pending_.pop_front();
    return quad;
}

// Parses one directive, one graph-block delimiter, or one triples
// production per call, so memory stays bounded by a single statement.
bool TrigParser::pump() {
    using Kind = Lexer::Kind;
    auto& lex = *lex_;

    auto expand = [&](const std::string& pname) -> std::string {
        auto colon = pname.find(':');
        if (colon == std::string::npos)
            lex.fail("expected ':' in prefixed name '" + pname + "'");
        auto it = prefixes_.find(pname.substr(0, colon));
        if (it == prefixes_.end())
            lex.fail("undeclared prefix '" + pname.substr(0, colon) + ":'");
        std::string iri = it->second + pname.substr(colon + 1);
        if (!has_uri_scheme(iri)) lex.fail("expanded IRI is not absolute: <" + iri + ">");
        return iri;
    };

    auto term_iri = [&](Lexer::Token tok) -> std::string {
        if (tok.kind == Kind::Iri) {
            if (!has_uri_scheme(tok.text)) lex.fail("IRI is not absolute: <" + tok.text + ">");
            return std::move(tok.text);
        }
        if (tok.kind == Kind::Name) return expand(tok.text);
        lex.fail("expected IRI");
    };

    auto parse_object = [&]() -> RdfTerm {
        Lexer::Token tok = lex.take();
        switch (tok.kind) {
            case Kind::Iri:
            case Kind::Name:
                if (tok.kind == Kind::Name && tok.text.find(':') == std::string::npos) {
                    if (tok.text == "true" || tok.text == "false")
                        return RdfTerm::literal(tok.text, std::string(kXsdBoolean));
                    lex.fail("unexpected bare word '" + tok.text + "'");
                }
                return RdfTerm::iri(term_iri(std::move(tok)));
            case Kind::Blank: return RdfTerm::blank(std::move(tok.text));
            case Kind::Integer: return RdfTerm::literal(std::move(tok.text), std::string(kXsdInteger));
            case Kind::Decimal: return RdfTerm::literal(std::move(tok.text), std::string(kXsdDecimal));
            case Kind::Double: return RdfTerm::literal(std::move(tok.text), std::string(kXsdDouble));
            case Kind::String: {
                std::string lexical = std::move(tok.text);
                if (lex.peek().kind == Kind::AtWord) {
                    return RdfTerm::lang_literal(std::move(lexical), lex.take().text);
                }
                if (lex.peek().kind == Kind::CaretCaret) {
                    lex.take();
                    return RdfTerm::literal(std::move(lexical), term_iri(lex.take()));
                }
                return RdfTerm::literal(std::move(lexical));
            }
            default: lex.fail("expected object term");
        }
    };

    // Parses "subject predicateObjectList" given the already-consumed
    // subject; queues one quad per object.
    auto parse_predicate_object_list = [&](RdfTerm subject, const std::string& graph) {
        while (true) {
            Lexer::Token ptok = lex.take();
            RdfTerm predicate;
            if (ptok.kind == Kind::Name && ptok.text == "a") {
                predicate = RdfTerm::iri(std::string(kRdfType));
            } else {
                predicate = RdfTerm::iri(term_iri(std::move(ptok)));
            }
            while (true) {
                RdfQuad quad;
                quad.graph = graph;
                quad.subject = subject;
                quad.predicate = predicate;
                quad.object = parse_object();
                pending_.push_back(std::move(quad));
                if (lex.peek().kind == Kind::Comma) lex.take();
                else break;
            }
            if (lex.peek().kind == Kind::Semicolon) {
                while (lex.peek().kind == Kind::Semicolon) lex.take();
                // A trailing ';' before '.' or '}' ends the list.
                if (lex.peek().kind == Kind::Dot || lex.peek().kind == Kind::RBrace) break;
                continue;
            }
            break;
        }
    };

    auto parse_subject = [&](Lexer::Token tok) -> RdfTerm {
        if (tok.kind == Kind::Blank) return RdfTerm::blank(std::move(tok.text));
        return RdfTerm::iri(term_iri(std::move(tok)));
    };

    auto finish_triples = [&]() {
        if (in_graph_block_) {
            // The last '.' before '}' is optional.
            if (lex.peek().kind == Kind::Dot) lex.take();
            else if (lex.peek().kind != Kind::RBrace)
                lex.fail("expected '.' or '}' after triples");
        } else {
            if (lex.take().kind != Kind::Dot) lex.fail("expected '.' after triples");
        }
    };

    if (in_graph_block_) {
        if (lex.peek().kind == Kind::RBrace) {
            lex.take();
            in_graph_block_ = false;
            return true;
        }
        if (lex.peek().kind == Kind::Eof) lex.fail("unterminated graph block");
        RdfTerm subject = parse_subject(lex.take());
        parse_predicate_object_list(std::move(subject), current_graph_);
        finish_triples();
        return true;
    }

    Lexer::Token tok = lex.take();
    switch (tok.kind) {
        case Kind::Eof: return false;
        case Kind::AtWord: {
            std::string word = to_lower_ascii(tok.text);
            if (word == "prefix") {
                Lexer::Token name = lex.take();
                if (name.kind != Kind::Name || name.text.back() != ':')
                    lex.fail("expected prefix name ending in ':'");
                Lexer::Token iri = lex.take();
                if (iri.kind != Kind::Iri) lex.fail("expected IRI in prefix declaration");
                prefixes_[name.text.substr(0, name.text.size() - 1)] = iri.text;
                if (lex.take().kind != Kind::Dot) lex.fail("expected '.' after @prefix");
                return true;
            }
            if (word == "base") lex.fail("@base is not supported");
            lex.fail("unknown directive '@" + tok.text + "'");
        }
        case Kind::Name: {
            std::string lowered = to_lower_ascii(tok.text);
            if (tok.text.find(':') == std::string::npos) {
                if (lowered == "prefix") {
                    Lexer::Token name = lex.take();
                    if (name.kind != Kind::Name || name.text.back() != ':')
                        lex.fail("expected prefix name ending in ':'");
                    Lexer::Token iri = lex.take();
                    if (iri.kind != Kind::Iri) lex.fail("expected IRI in prefix declaration");
                    prefixes_[name.text.substr(0, name.text.size() - 1)] = iri.text;
                    return true;
                }
                if (lowered == "graph") {
                    std::string graph = term_iri(lex.take());
                    if (lex.take().kind != Kind::LBrace) lex.fail("expected '{' after graph name");
                    in_graph_block_ = true;
                    current_graph_ = std::move(graph);
                    return true;
                }
                if (lowered == "base") lex.fail("BASE is not supported");
                lex.fail("unexpected word '" + tok.text + "'");
            }
            [[fallthrough]];
        }
        case Kind::Iri: {
            // Either a graph name followed by '{', or a top-level subject.
            std::string iri = term_iri(std::move(tok));
            if (lex.peek().kind == Kind::LBrace) {
                lex.take();
                in_graph_block_ = true;
                current_graph_ = std::move(iri);
                return true;
            }
            parse_predicate_object_list(RdfTerm::iri(std::move(iri)), std::string());
            finish_triples();
            return true;
        }
        case Kind::Blank: {
            if (lex.peek().kind == Kind::LBrace)
                lex.fail("graph labels must be IRIs");
            parse_predicate_object_list(RdfTerm::blank(std::move(tok.text)), std::string());
            finish_triples();
            return true;
        }
        case Kind::LBrace:
            in_graph_block_ = true;
            current_graph_.clear();
            return true;
        default: lex.fail("unexpected token at start of statement");
    }
}

QuadDocument parse_trig(std::istream& in) {
    QuadDocument doc;
    doc.source_format = RdfFormat::TriG;
    TrigParser parser(in);
    while (auto quad = parser.next()) doc.quads.push_back(std::move(*quad));
    return doc;
}

QuadDocument parse_trig(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_trig(in);
}

} // namespace trustyuri
