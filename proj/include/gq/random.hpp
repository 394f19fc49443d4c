#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gq/classify.hpp"
#include "gq/graph.hpp"
#include "gq/quotient.hpp"

namespace gq {

/// Deterministic, platform-independent random stream (splitmix64). Child
/// streams derived by name are independent, so trials can run concurrently
/// and still aggregate deterministically.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    Rng child(std::string_view label) const
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        return Rng(state ^ h ^ 0x6a09e667f3bcc909ull);
    }

    Rng child(std::uint64_t index) const
    {
        return Rng(state ^ (index * 0x9e3779b97f4a7c15ull) ^ 0xbb67ae8584caa73bull);
    }
};

enum class RandomGraphKind { SimplicialConnected, Circulant, GrowingTree, MixedMaximal };

namespace detail {

inline std::vector<std::size_t> shuffled_indices(std::size_t n, Rng& rng)
{
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i)
        idx[i] = i;
    for (std::size_t i = n; i > 1; --i)
        std::swap(idx[i - 1], idx[rng.below(i)]);
    return idx;
}

inline Graph random_circulant(std::size_t n, Rng& rng)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("v" + std::to_string(i));
    auto around = detail::shuffled_indices(n, rng); // cycle visits names in this order
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back(Edge{"e" + std::to_string(i + 1), names[around[i]],
                             names[around[(i + 1) % n]]});
    return Graph::build(std::move(names), std::move(edges));
}

inline Graph random_growing_tree(std::size_t n, Rng& rng)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("v" + std::to_string(i));
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t parent = rng.below(i);
        edges.push_back(Edge{"e" + std::to_string(i), names[parent], names[i]});
    }
    return Graph::build(std::move(names), std::move(edges));
}

inline Graph random_simplicial_connected(std::size_t n, Rng& rng)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("v" + std::to_string(i));
    std::vector<Edge> edges;
    std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
    std::size_t id = 1;
    // random spanning tree with random orientations guarantees connectivity
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t other = rng.below(i);
        std::size_t src = i, dst = other;
        if (rng.below(2))
            std::swap(src, dst);
        used[src][dst] = 1;
        edges.push_back(Edge{"e" + std::to_string(id++), names[src], names[dst]});
    }
    if (n >= 2) {
        std::size_t extra_attempts = rng.below(2 * n + 1);
        for (std::size_t t = 0; t < extra_attempts; ++t) {
            std::size_t src = rng.below(n), dst = rng.below(n);
            if (src == dst || used[src][dst])
                continue;
            used[src][dst] = 1;
            edges.push_back(Edge{"e" + std::to_string(id++), names[src], names[dst]});
        }
    }
    return Graph::build(std::move(names), std::move(edges));
}

} // namespace detail

/// Deterministic generator for the graph classes the toolkit works with.
/// Identical (kind, n, seed) always produces an identical graph, and the
/// output satisfies the class predicate (connected simplicial, Circulant(n),
/// growing tree, or mixed maximal type respectively).
inline Graph random_graph(RandomGraphKind kind, std::size_t n, std::uint64_t seed)
{
    Rng rng = Rng(seed).child("random_graph").child(static_cast<std::uint64_t>(kind)).child(n);
    switch (kind) {
    case RandomGraphKind::Circulant:
        if (n < 2)
            throw GraphError(ErrorKind::Unsatisfiable, "circulant graphs need >= 2 vertices");
        return detail::random_circulant(n, rng);
    case RandomGraphKind::GrowingTree:
        if (n < 1)
            throw GraphError(ErrorKind::Unsatisfiable, "growing trees need >= 1 vertex");
        return detail::random_growing_tree(n, rng);
    case RandomGraphKind::SimplicialConnected:
        if (n < 1)
            throw GraphError(ErrorKind::Unsatisfiable, "graphs need >= 1 vertex");
        return detail::random_simplicial_connected(n, rng);
    case RandomGraphKind::MixedMaximal: {
        if (n < 3)
            throw GraphError(ErrorKind::Unsatisfiable,
                             "mixed maximal type needs >= 3 vertices (a 2-cycle plus an edge)");
        // circulant component of c vertices and a tree of n - c + 1 sharing one
        std::size_t c = 2 + rng.below(n - 2);
        std::size_t t = n - c + 1;
        Graph circ = detail::random_circulant(c, rng);
        Rng tree_rng = rng.child("tree");
        std::vector<std::string> tnames;
        for (std::size_t i = 1; i <= t; ++i)
            tnames.push_back("w" + std::to_string(i));
        std::vector<Edge> tedges;
        for (std::size_t i = 1; i < t; ++i)
            tedges.push_back(
                Edge{"f" + std::to_string(i), tnames[tree_rng.below(i)], tnames[i]});
        Graph tree = Graph::build(tnames, std::move(tedges));
        std::string at = circ.vertices()[rng.below(c)];
        std::string tree_at = tnames[rng.below(t)];
        return glue(circ, tree, GlueSpec{at, tree_at, at});
    }
    }
    throw GraphError(ErrorKind::Unsatisfiable, "unknown graph kind");
}

/// Arbitrary finite directed multigraph: loops and parallel edges allowed,
/// not necessarily connected or simplicial.
inline Graph random_multigraph(std::size_t max_vertices, std::size_t max_edges, Rng& rng)
{
    std::size_t n = 1 + rng.below(max_vertices);
    std::size_t m = rng.below(max_edges + 1);
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("v" + std::to_string(i));
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= m; ++i)
        edges.push_back(
            Edge{"e" + std::to_string(i), names[rng.below(n)], names[rng.below(n)]});
    return Graph::build(std::move(names), std::move(edges));
}

/// A structure-preserving relabeling of g: fresh vertex names and edge ids,
/// shuffled vertex and edge order. `vertex_names` maps old names to new.
struct Relabeled {
    Graph graph;
    std::map<std::string, std::string> vertex_names;
};

inline Relabeled random_relabel(const Graph& g, Rng& rng)
{
    std::size_t n = g.vertex_count(), m = g.edge_count();
    auto vperm = detail::shuffled_indices(n, rng); // position -> original vertex
    auto eperm = detail::shuffled_indices(m, rng);
    Relabeled result;
    std::vector<std::string> names(n);
    std::vector<std::string> new_of(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        std::string nm = "r" + std::to_string(pos + 1);
        names[pos] = nm;
        new_of[vperm[pos]] = nm;
        result.vertex_names[g.vertices()[vperm[pos]]] = nm;
    }
    std::vector<Edge> edges;
    for (std::size_t pos = 0; pos < m; ++pos) {
        std::size_t e = eperm[pos];
        edges.push_back(Edge{"s" + std::to_string(pos + 1), new_of[g.edge_src_index(e)],
                             new_of[g.edge_dst_index(e)]});
    }
    result.graph = Graph::build(std::move(names), std::move(edges));
    return result;
}

} // namespace gq
