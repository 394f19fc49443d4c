#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "gq/graph.hpp"

namespace gq {

// ---------------------------------------------------------------------------
// JSON graph documents
//
// Canonical form (byte-exact, frozen by the round-trip tests):
//
//   {
//     "vertices": ["v1", "v2"],
//     "edges": [
//       {"id": "e", "src": "v1", "dst": "v2"}
//     ]
//   }
//
// Two-space indentation, fields in the order vertices/edges, edge fields in
// the order id/src/dst, "edges": [] inline when empty, trailing newline.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string json_quote(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
    return out;
}

inline const nlohmann::json& require_field(const nlohmann::json& obj, const char* field)
{
    if (!obj.is_object())
        throw GraphError(ErrorKind::SchemaError, "expected a JSON object");
    auto it = obj.find(field);
    if (it == obj.end())
        throw GraphError(ErrorKind::SchemaError, std::string("missing field '") + field + "'");
    return *it;
}

inline std::string require_string(const nlohmann::json& v, const char* what)
{
    if (!v.is_string())
        throw GraphError(ErrorKind::SchemaError, std::string(what) + " must be a string");
    return v.get<std::string>();
}

inline nlohmann::json parse_json_text(std::string_view text)
{
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw GraphError(ErrorKind::SyntaxError,
                         std::string(e.what()) + " (byte " + std::to_string(e.byte) + ")");
    }
}

} // namespace detail

inline Graph parse_json_graph(std::string_view text)
{
    nlohmann::json doc = detail::parse_json_text(text);
    const auto& jverts = detail::require_field(doc, "vertices");
    const auto& jedges = detail::require_field(doc, "edges");
    if (!jverts.is_array())
        throw GraphError(ErrorKind::SchemaError, "'vertices' must be an array");
    if (!jedges.is_array())
        throw GraphError(ErrorKind::SchemaError, "'edges' must be an array");
    std::vector<std::string> vertices;
    vertices.reserve(jverts.size());
    for (const auto& v : jverts)
        vertices.push_back(detail::require_string(v, "vertex name"));
    std::vector<Edge> edges;
    edges.reserve(jedges.size());
    for (const auto& e : jedges) {
        edges.push_back(Edge{detail::require_string(detail::require_field(e, "id"), "edge id"),
                             detail::require_string(detail::require_field(e, "src"), "edge src"),
                             detail::require_string(detail::require_field(e, "dst"), "edge dst")});
    }
    return Graph::build(std::move(vertices), std::move(edges));
}

inline std::string emit_json_graph(const Graph& g)
{
    std::string out = "{\n  \"vertices\": [";
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (i)
            out += ", ";
        out += detail::json_quote(g.vertices()[i]);
    }
    out += "],\n  \"edges\": [";
    if (g.edge_count() == 0) {
        out += "]\n}\n";
        return out;
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        out += i ? ",\n    " : "\n    ";
        out += "{\"id\": " + detail::json_quote(e.id) + ", \"src\": " + detail::json_quote(e.src) +
               ", \"dst\": " + detail::json_quote(e.dst) + "}";
    }
    out += "\n  ]\n}\n";
    return out;
}

/// Boundary document: {"boundary": ["v1", "v2"]}
inline std::vector<std::string> parse_boundary_doc(std::string_view text)
{
    nlohmann::json doc = detail::parse_json_text(text);
    const auto& jb = detail::require_field(doc, "boundary");
    if (!jb.is_array())
        throw GraphError(ErrorKind::SchemaError, "'boundary' must be an array");
    std::vector<std::string> names;
    for (const auto& v : jb)
        names.push_back(detail::require_string(v, "boundary vertex"));
    return names;
}

/// Chain document, innermost subgraph first:
/// {"chain": [["v1"], ["v1", "v2"]]}
inline std::vector<FullSubgraphSpec> parse_chain_doc(std::string_view text)
{
    nlohmann::json doc = detail::parse_json_text(text);
    const auto& jc = detail::require_field(doc, "chain");
    if (!jc.is_array())
        throw GraphError(ErrorKind::SchemaError, "'chain' must be an array");
    std::vector<FullSubgraphSpec> specs;
    for (const auto& level : jc) {
        if (!level.is_array())
            throw GraphError(ErrorKind::SchemaError, "each chain level must be an array");
        FullSubgraphSpec spec;
        for (const auto& v : level)
            spec.vertex_set.push_back(detail::require_string(v, "chain vertex"));
        specs.push_back(std::move(spec));
    }
    return specs;
}

// ---------------------------------------------------------------------------
// DOT subset
//
//   digraph name? { stmt* }
//   stmt: ID ';'  |  ID '->' ID ('[' 'id' '=' '"' ID '"' ']')? ';'
//
// Vertices appear in first-mention order, edges in statement order. Edges
// without an id attribute are auto-named e1, e2, ... skipping collisions.
// Anything outside the subset is a SyntaxError, never a warning.
// ---------------------------------------------------------------------------

namespace detail {

struct DotLexer {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    struct Token {
        enum Kind { Ident, Quoted, Arrow, Semi, LBrace, RBrace, LBracket, RBracket, Equals, End };
        Kind kind;
        std::string value;
        int line;
        int col;
    };

    static bool ident_char(char c)
    {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '#' ||
               c == '-' || c == '+';
    }

    void advance(char c)
    {
        ++pos;
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }

    [[noreturn]] void fail(const std::string& msg, int l, int c) const
    {
        throw GraphError(ErrorKind::SyntaxError, msg, l, c);
    }

    Token next()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            advance(text[pos]);
        if (pos >= text.size())
            return {Token::End, "", line, col};
        int l = line, c = col;
        char ch = text[pos];
        switch (ch) {
        case ';': advance(ch); return {Token::Semi, ";", l, c};
        case '{': advance(ch); return {Token::LBrace, "{", l, c};
        case '}': advance(ch); return {Token::RBrace, "}", l, c};
        case '[': advance(ch); return {Token::LBracket, "[", l, c};
        case ']': advance(ch); return {Token::RBracket, "]", l, c};
        case '=': advance(ch); return {Token::Equals, "=", l, c};
        case '"': {
            advance(ch);
            std::string value;
            while (pos < text.size() && text[pos] != '"') {
                if (text[pos] == '\n')
                    fail("unterminated string", l, c);
                value += text[pos];
                advance(text[pos]);
            }
            if (pos >= text.size())
                fail("unterminated string", l, c);
            advance('"');
            return {Token::Quoted, value, l, c};
        }
        default: break;
        }
        if (ch == '-' && pos + 1 < text.size() && text[pos + 1] == '>') {
            advance('-');
            advance('>');
            return {Token::Arrow, "->", l, c};
        }
        if (ident_char(ch)) {
            std::string value;
            while (pos < text.size() && ident_char(text[pos])) {
                // stop before an arrow so `v1->v2` lexes as three tokens
                if (text[pos] == '-' && pos + 1 < text.size() && text[pos + 1] == '>')
                    break;
                value += text[pos];
                advance(text[pos]);
            }
            return {Token::Ident, value, l, c};
        }
        fail(std::string("unexpected character '") + ch + "'", l, c);
    }
};

} // namespace detail

inline Graph parse_dot_subset(std::string_view text)
{
    using Token = detail::DotLexer::Token;
    detail::DotLexer lex{text};
    auto expect = [&](Token::Kind kind, const char* what) {
        Token t = lex.next();
        if (t.kind != kind)
            throw GraphError(ErrorKind::SyntaxError,
                             std::string("expected ") + what + ", got '" + t.value + "'", t.line,
                             t.col);
        return t;
    };

    Token t = expect(Token::Ident, "'digraph'");
    if (t.value != "digraph")
        throw GraphError(ErrorKind::SyntaxError, "expected 'digraph'", t.line, t.col);
    t = lex.next();
    if (t.kind == Token::Ident)
        t = lex.next(); // optional graph name
    if (t.kind != Token::LBrace)
        throw GraphError(ErrorKind::SyntaxError, "expected '{'", t.line, t.col);

    std::vector<std::string> vertices;
    std::unordered_set<std::string> seen_vertices;
    auto mention = [&](const std::string& name) {
        if (seen_vertices.insert(name).second)
            vertices.push_back(name);
    };

    struct PendingEdge {
        std::string id; // empty = auto-assign
        std::string src, dst;
    };
    std::vector<PendingEdge> pending;
    std::unordered_set<std::string> used_ids;

    for (;;) {
        t = lex.next();
        if (t.kind == Token::RBrace)
            break;
        if (t.kind == Token::End)
            throw GraphError(ErrorKind::SyntaxError, "expected '}' before end of input", t.line,
                             t.col);
        if (t.kind != Token::Ident)
            throw GraphError(ErrorKind::SyntaxError, "expected a statement", t.line, t.col);
        std::string first = t.value;
        Token t2 = lex.next();
        if (t2.kind == Token::Semi) {
            mention(first);
            continue;
        }
        if (t2.kind != Token::Arrow)
            throw GraphError(ErrorKind::SyntaxError, "expected ';' or '->'", t2.line, t2.col);
        Token dst = expect(Token::Ident, "a vertex name");
        mention(first);
        mention(dst.value);
        PendingEdge edge{"", first, dst.value};
        Token t3 = lex.next();
        if (t3.kind == Token::LBracket) {
            Token key = expect(Token::Ident, "'id'");
            if (key.value != "id")
                throw GraphError(ErrorKind::SyntaxError, "only the 'id' attribute is supported",
                                 key.line, key.col);
            expect(Token::Equals, "'='");
            Token value = expect(Token::Quoted, "a quoted id");
            expect(Token::RBracket, "']'");
            edge.id = value.value;
            if (!used_ids.insert(edge.id).second)
                throw GraphError(ErrorKind::DuplicateEdgeId, "edge id '" + edge.id + "' reused",
                                 value.line, value.col);
            t3 = lex.next();
        }
        if (t3.kind != Token::Semi)
            throw GraphError(ErrorKind::SyntaxError, "expected ';'", t3.line, t3.col);
        pending.push_back(std::move(edge));
    }
    t = lex.next();
    if (t.kind != Token::End)
        throw GraphError(ErrorKind::SyntaxError, "trailing input after '}'", t.line, t.col);

    std::vector<Edge> edges;
    edges.reserve(pending.size());
    std::size_t counter = 1;
    for (auto& pe : pending) {
        if (pe.id.empty()) {
            std::string candidate;
            do {
                candidate = "e" + std::to_string(counter++);
            } while (used_ids.count(candidate));
            used_ids.insert(candidate);
            pe.id = candidate;
        }
        edges.push_back(Edge{std::move(pe.id), std::move(pe.src), std::move(pe.dst)});
    }
    return Graph::build(std::move(vertices), std::move(edges));
}

inline std::string emit_dot(const Graph& g)
{
    std::string out = "digraph {\n";
    for (const auto& v : g.vertices())
        out += "  " + v + ";\n";
    for (const auto& e : g.edges())
        out += "  " + e.src + " -> " + e.dst + " [id=\"" + e.id + "\"];\n";
    out += "}\n";
    return out;
}

} // namespace gq
