#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "gq/graph.hpp"

namespace gq {

/// A boundary is a vertex subset of a host graph, all of whose members the
/// quotient identifies into a single base point.
struct Boundary {
    std::vector<std::string> vertex_set;
};

/// Quotient graph together with provenance back to the source graph.
/// vertex_map is total; every boundary vertex maps to the base point.
/// edge_map covers every surviving edge (all of them for a boundary
/// quotient, where ids are preserved and an edge with both endpoints in the
/// boundary becomes a loop at the base point).
struct QuotientResult {
    Graph graph;
    std::optional<std::string> base_point;
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> edge_map;
};

namespace detail {

// "b", then "b_", "b__", ... until it collides with none of `taken`.
inline std::string fresh_base_name(const std::vector<char>& keep, const Graph& g)
{
    std::unordered_set<std::string> taken;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (keep[v])
            taken.insert(g.vertices()[v]);
    std::string name = "b";
    while (taken.count(name))
        name += '_';
    return name;
}

} // namespace detail

/// Collapses every boundary vertex to one base point. Every edge of G is
/// kept with boundary endpoints rewritten, so |E| is conserved and an edge
/// inside the boundary becomes a loop at the base point. The empty boundary
/// is the identity quotient (no base point).
inline QuotientResult boundary_quotient(const Graph& g, const Boundary& boundary)
{
    std::vector<char> in_boundary(g.vertex_count(), 0);
    for (const auto& name : boundary.vertex_set)
        in_boundary[g.vertex_index(name)] = 1;

    QuotientResult result;
    bool empty = true;
    for (char f : in_boundary)
        if (f)
            empty = false;
    if (empty) {
        result.graph = g;
        for (const auto& v : g.vertices())
            result.vertex_map[v] = v;
        for (const auto& e : g.edges())
            result.edge_map[e.id] = e.id;
        return result;
    }

    std::vector<char> keep(g.vertex_count(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        keep[v] = !in_boundary[v];
    std::string base = detail::fresh_base_name(keep, g);

    std::vector<std::string> vertices{base};
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (keep[v])
            vertices.push_back(g.vertices()[v]);

    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    auto image = [&](std::size_t v) -> const std::string& {
        return in_boundary[v] ? base : g.vertices()[v];
    };
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        edges.push_back(Edge{e.id, image(g.edge_src_index(i)), image(g.edge_dst_index(i))});
    }

    result.graph = Graph::build(std::move(vertices), std::move(edges));
    result.base_point = base;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        result.vertex_map[g.vertices()[v]] = image(v);
    for (const auto& e : g.edges())
        result.edge_map[e.id] = e.id;
    return result;
}

/// Quotient by the subgraph boundary V(H) u E(H) of a full subgraph H:
/// H's vertices collapse to the base point and H's edges disappear, so
/// |V(Q)| = |V(G)| - |V(H)| + 1 and |E(Q)| = |E(G)| - |E(H)|. Because H is
/// induced, no surviving edge has both endpoints in V(H) and the base point
/// never acquires a loop.
inline QuotientResult subgraph_boundary_quotient(const Graph& g, const FullSubgraphSpec& spec)
{
    if (spec.vertex_set.empty())
        throw GraphError(ErrorKind::EmptySubgraph, "full subgraph needs at least one vertex");
    auto member = detail::spec_membership(g, spec);

    std::vector<char> keep(g.vertex_count(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        keep[v] = !member[v];
    std::string base = detail::fresh_base_name(keep, g);

    std::vector<std::string> vertices{base};
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (keep[v])
            vertices.push_back(g.vertices()[v]);

    QuotientResult result;
    std::vector<Edge> edges;
    auto image = [&](std::size_t v) -> const std::string& {
        return member[v] ? base : g.vertices()[v];
    };
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (member[g.edge_src_index(i)] && member[g.edge_dst_index(i)])
            continue; // edge of H, absorbed into the boundary
        const Edge& e = g.edges()[i];
        edges.push_back(Edge{e.id, image(g.edge_src_index(i)), image(g.edge_dst_index(i))});
        result.edge_map[e.id] = e.id;
    }

    result.graph = Graph::build(std::move(vertices), std::move(edges));
    result.base_point = base;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        result.vertex_map[g.vertices()[v]] = image(v);
    return result;
}

/// Glue instruction: identify left_vertex of the first graph with
/// right_vertex of the second under the name glued_name.
struct GlueSpec {
    std::string left_vertex;
    std::string right_vertex;
    std::string glued_name;
};

/// Vertex-fixed glued graph: one vertex of each operand is identified, all
/// other vertices and all edges of both survive. Name collisions in the
/// second operand are resolved by suffixing "#2" unless `strict`, which
/// raises NameCollision instead. A collision between glued_name and a
/// remaining first-operand name is always an error.
inline Graph glue(const Graph& g1, const Graph& g2, const GlueSpec& spec, bool strict = false)
{
    std::size_t left = g1.vertex_index(spec.left_vertex);
    std::size_t right = g2.vertex_index(spec.right_vertex);
    const std::string& glued = spec.glued_name.empty() ? spec.left_vertex : spec.glued_name;

    std::unordered_set<std::string> used_vertices{glued};
    std::vector<std::string> vertices{glued};
    for (std::size_t v = 0; v < g1.vertex_count(); ++v) {
        if (v == left)
            continue;
        if (!used_vertices.insert(g1.vertices()[v]).second)
            throw GraphError(ErrorKind::NameCollision,
                             "glued name '" + glued + "' collides with vertex of first graph");
        vertices.push_back(g1.vertices()[v]);
    }
    std::map<std::string, std::string> rename2; // second-graph vertex -> final name
    rename2[g2.vertices()[right]] = glued;
    for (std::size_t v = 0; v < g2.vertex_count(); ++v) {
        if (v == right)
            continue;
        std::string name = g2.vertices()[v];
        while (!used_vertices.insert(name).second) {
            if (strict)
                throw GraphError(ErrorKind::NameCollision, "vertex '" + name + "' in both graphs");
            name += "#2";
        }
        rename2[g2.vertices()[v]] = name;
        vertices.push_back(name);
    }

    std::unordered_set<std::string> used_ids;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < g1.edge_count(); ++i) {
        const Edge& e = g1.edges()[i];
        used_ids.insert(e.id);
        auto name1 = [&](std::size_t v) -> const std::string& {
            return v == left ? glued : g1.vertices()[v];
        };
        edges.push_back(Edge{e.id, name1(g1.edge_src_index(i)), name1(g1.edge_dst_index(i))});
    }
    for (std::size_t i = 0; i < g2.edge_count(); ++i) {
        const Edge& e = g2.edges()[i];
        std::string id = e.id;
        while (!used_ids.insert(id).second) {
            if (strict)
                throw GraphError(ErrorKind::NameCollision, "edge id '" + id + "' in both graphs");
            id += "#2";
        }
        edges.push_back(Edge{std::move(id), rename2.at(e.src), rename2.at(e.dst)});
    }
    return Graph::build(std::move(vertices), std::move(edges));
}

/// One gluing step: a new graph attached on the left of the accumulated one.
struct GlueStep {
    Graph graph;
    GlueSpec spec; // left_vertex in `graph`, right_vertex in the accumulated graph
};

/// Right-associative iterated gluing G_1 # (G_2 # (... # initial)): steps are
/// listed innermost-first and each step glues its graph onto the accumulated
/// result so far.
inline Graph iterated_glue(Graph initial, const std::vector<GlueStep>& steps, bool strict = false)
{
    Graph acc = std::move(initial);
    for (const auto& step : steps)
        acc = glue(step.graph, acc, step.spec, strict);
    return acc;
}

} // namespace gq
