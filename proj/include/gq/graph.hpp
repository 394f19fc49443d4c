#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gq/error.hpp"

namespace gq {

/// A directed edge identified by name. `src == dst` is a loop-edge.
struct Edge {
    std::string id;
    std::string src;
    std::string dst;

    friend bool operator==(const Edge&, const Edge&) = default;
};

inline bool is_valid_token(std::string_view name)
{
    if (name.empty())
        return false;
    for (char c : name)
        if (c == ',' || static_cast<unsigned char>(c) <= ' ' || c == 0x7f)
            return false;
    return true;
}

/// Immutable directed multigraph. Vertices are named tokens in a fixed order;
/// edges are a fixed-order list and may include loops and parallel edges.
/// All operations on graphs are pure and return fresh values.
class Graph {
public:
    Graph() = default;

    /// Validates and constructs. Throws GraphError on duplicate names,
    /// invalid tokens, or edge endpoints outside the vertex set.
    static Graph build(std::vector<std::string> vertices, std::vector<Edge> edges)
    {
        Graph g;
        g.vertices_ = std::move(vertices);
        g.edges_ = std::move(edges);
        g.vertex_index_.reserve(g.vertices_.size());
        for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
            const auto& name = g.vertices_[i];
            if (!is_valid_token(name))
                throw GraphError(ErrorKind::InvalidName, "bad vertex name '" + name + "'");
            if (!g.vertex_index_.emplace(name, i).second)
                throw GraphError(ErrorKind::DuplicateVertex, "vertex '" + name + "' listed twice");
        }
        std::unordered_map<std::string, std::size_t> edge_ids;
        edge_ids.reserve(g.edges_.size());
        g.edge_src_.reserve(g.edges_.size());
        g.edge_dst_.reserve(g.edges_.size());
        g.out_.assign(g.vertices_.size(), {});
        g.in_.assign(g.vertices_.size(), {});
        for (std::size_t i = 0; i < g.edges_.size(); ++i) {
            const Edge& e = g.edges_[i];
            if (!is_valid_token(e.id))
                throw GraphError(ErrorKind::InvalidName, "bad edge id '" + e.id + "'");
            if (!edge_ids.emplace(e.id, i).second)
                throw GraphError(ErrorKind::DuplicateEdgeId, "edge id '" + e.id + "' listed twice");
            auto s = g.vertex_index_.find(e.src);
            auto d = g.vertex_index_.find(e.dst);
            if (s == g.vertex_index_.end())
                throw GraphError(ErrorKind::DanglingEndpoint,
                                 "edge '" + e.id + "' has unknown source '" + e.src + "'");
            if (d == g.vertex_index_.end())
                throw GraphError(ErrorKind::DanglingEndpoint,
                                 "edge '" + e.id + "' has unknown target '" + e.dst + "'");
            g.edge_src_.push_back(s->second);
            g.edge_dst_.push_back(d->second);
            g.out_[s->second].push_back(i);
            g.in_[d->second].push_back(i);
        }
        return g;
    }

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    bool has_vertex(std::string_view name) const
    {
        return vertex_index_.find(std::string(name)) != vertex_index_.end();
    }

    std::size_t vertex_index(std::string_view name) const
    {
        auto it = vertex_index_.find(std::string(name));
        if (it == vertex_index_.end())
            throw GraphError(ErrorKind::UnknownVertex, "no vertex named '" + std::string(name) + "'");
        return it->second;
    }

    // Endpoint indices of edge i; out/in incidence lists by vertex index.
    std::size_t edge_src_index(std::size_t i) const { return edge_src_[i]; }
    std::size_t edge_dst_index(std::size_t i) const { return edge_dst_[i]; }
    const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
    const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, std::size_t> vertex_index_;
    std::vector<std::size_t> edge_src_;
    std::vector<std::size_t> edge_dst_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
};

/// A full subgraph is specified by a vertex subset of its host; the subgraph
/// always carries every host edge whose endpoints both lie in the subset.
struct FullSubgraphSpec {
    std::vector<std::string> vertex_set;
};

inline Graph build_graph(std::vector<std::string> vertices, std::vector<Edge> edges)
{
    return Graph::build(std::move(vertices), std::move(edges));
}

/// |V(G)| + |E(G)|.
inline std::size_t size(const Graph& g)
{
    return g.vertex_count() + g.edge_count();
}

namespace detail {

// Resolves a spec against a host: returns vertex membership flags plus the
// member indices in host order. Duplicate names in the spec collapse.
inline std::vector<char> spec_membership(const Graph& g, const FullSubgraphSpec& spec)
{
    std::vector<char> member(g.vertex_count(), 0);
    for (const auto& name : spec.vertex_set)
        member[g.vertex_index(name)] = 1;
    return member;
}

} // namespace detail

/// Vertex-induced subgraph: vertices of `spec` (in host order) plus every
/// host edge with both endpoints inside. Names and ids are preserved.
inline Graph induced_full_subgraph(const Graph& g, const FullSubgraphSpec& spec)
{
    auto member = detail::spec_membership(g, spec);
    std::vector<std::string> verts;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (member[v])
            verts.push_back(g.vertices()[v]);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (member[g.edge_src_index(i)] && member[g.edge_dst_index(i)])
            edges.push_back(g.edges()[i]);
    return Graph::build(std::move(verts), std::move(edges));
}

/// True iff a directed path of length >= 1 leads from u to v. u == v counts
/// only when u lies on a directed cycle.
inline bool has_directed_path(const Graph& g, std::string_view u, std::string_view v)
{
    std::size_t src = g.vertex_index(u);
    std::size_t dst = g.vertex_index(v);
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t e : g.out_edges(src)) {
        std::size_t w = g.edge_dst_index(e);
        if (w == dst)
            return true;
        if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
        }
    }
    while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t e : g.out_edges(x)) {
            std::size_t w = g.edge_dst_index(e);
            if (w == dst)
                return true;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

/// Partition of the vertex set into maximal sets connected when edge
/// direction is ignored. Classes appear in order of their first vertex.
inline std::vector<std::vector<std::string>> weak_components(const Graph& g)
{
    std::vector<std::vector<std::string>> classes;
    std::vector<char> seen(g.vertex_count(), 0);
    for (std::size_t start = 0; start < g.vertex_count(); ++start) {
        if (seen[start])
            continue;
        std::vector<std::size_t> stack{start};
        seen[start] = 1;
        std::vector<std::size_t> members;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            members.push_back(v);
            auto visit = [&](std::size_t w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            };
            for (std::size_t e : g.out_edges(v))
                visit(g.edge_dst_index(e));
            for (std::size_t e : g.in_edges(v))
                visit(g.edge_src_index(e));
        }
        std::sort(members.begin(), members.end());
        std::vector<std::string> names;
        names.reserve(members.size());
        for (std::size_t v : members)
            names.push_back(g.vertices()[v]);
        classes.push_back(std::move(names));
    }
    return classes;
}

/// No loop-edges and no two edges sharing the same ordered (src, dst) pair.
/// An opposite pair v1->v2, v2->v1 is still simplicial.
inline bool is_simplicial(const Graph& g)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        std::size_t s = g.edge_src_index(i), d = g.edge_dst_index(i);
        if (s == d)
            return false;
        pairs.emplace_back(s, d);
    }
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

/// Weakly connected and nonempty (agrees with weak_components yielding
/// exactly one class).
inline bool is_connected(const Graph& g)
{
    std::size_t n = g.vertex_count();
    if (n == 0)
        return false;
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        auto visit = [&](std::size_t w) {
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        };
        for (std::size_t e : g.out_edges(v))
            visit(g.edge_dst_index(e));
        for (std::size_t e : g.in_edges(v))
            visit(g.edge_src_index(e));
    }
    return visited == n;
}

} // namespace gq
