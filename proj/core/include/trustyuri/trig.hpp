#pragma once

//! Streaming TriG reader covering the subset needed for named-graph RDF
//! interchange: prefix declarations, graph blocks (with or without the
//! GRAPH keyword), top-level triples, predicate-object lists, the 'a'
//! keyword, blank-node labels, and string / numeric / boolean literals.
//! Collections, anonymous blank nodes, long strings and @base are
//! rejected with a parse error.

#include "trustyuri/rdf.hpp"

#include <deque>
#include <istream>
#include <map>
#include <memory>
#include <string>

namespace trustyuri {

class TrigParser final : public QuadSource {
public:
    explicit TrigParser(std::istream& in);
    ~TrigParser() override;

    std::optional<RdfQuad> next() override;

    std::size_t line() const;

private:
    struct Lexer;
    bool pump();

    std::unique_ptr<Lexer> lex_;
    std::map<std::string, std::string, std::less<>> prefixes_;
    std::deque<RdfQuad> pending_;
    bool in_graph_block_ = false;
    std::string current_graph_;
};

QuadDocument parse_trig(std::istream& in);
QuadDocument parse_trig(std::string_view text);

} // namespace trustyuri
