#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gq/graph.hpp"
#include "gq/iso.hpp"

namespace gq {

inline constexpr int kEnumerateVertexLimit = 6;

namespace detail {

// Simplicial digraphs on up to 8 vertices packed into a word: arc i->j at
// bit i*8 + j. Only off-diagonal bits are ever set.
inline bool arc(std::uint64_t bits, int i, int j)
{
    return bits >> (i * 8 + j) & 1u;
}

inline std::uint64_t with_arc(std::uint64_t bits, int i, int j)
{
    return bits | (1ull << (i * 8 + j));
}

inline std::uint64_t canonical_bits(int n, std::uint64_t bits)
{
    canon::Mat mat;
    mat.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && arc(bits, i, j))
                mat.at(i, j) = 1;
    auto order = canon::canonical_order(mat);
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && arc(bits, order[i], order[j]))
                out = with_arc(out, i, j);
    return out;
}

inline bool bits_connected(int n, std::uint64_t bits)
{
    if (n == 0)
        return false;
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v) {
            if (!(frontier >> v & 1u))
                continue;
            for (int w = 0; w < n; ++w)
                if (w != v && (arc(bits, v, w) || arc(bits, w, v)) && !(seen >> w & 1u))
                    next |= 1u << w;
        }
        seen |= next;
        frontier = next;
    }
    return seen == (n == 32 ? ~0u : (1u << n) - 1);
}

} // namespace detail

/// One isomorphism-class representative per simplicial digraph, built level
/// by level: every class on k vertices arises from a class on k-1 vertices
/// by attaching one new vertex with an arbitrary arc pattern, and the
/// candidates are deduplicated by canonical labeling. Representatives are
/// stored compactly; `graph_of` materializes them with names v1, v2, ...
class EnumUniverse {
public:
    static EnumUniverse build(int max_vertices)
    {
        if (max_vertices < 1 || max_vertices > kEnumerateVertexLimit)
            throw GraphError(ErrorKind::SizeLimit,
                             "exhaustive enumeration limited to " +
                                 std::to_string(kEnumerateVertexLimit) + " vertices");
        EnumUniverse u;
        u.reps_.resize(max_vertices + 1);
        u.reps_[1] = {0};
        for (int n = 2; n <= max_vertices; ++n) {
            std::vector<std::uint64_t> candidates;
            const int patterns = 1 << (2 * (n - 1));
            candidates.reserve(u.reps_[n - 1].size() * static_cast<std::size_t>(patterns));
            for (std::uint64_t base : u.reps_[n - 1]) {
                for (int pattern = 0; pattern < patterns; ++pattern) {
                    std::uint64_t bits = base;
                    for (int j = 0; j < n - 1; ++j) {
                        int rel = pattern >> (2 * j) & 3;
                        if (rel & 1)
                            bits = detail::with_arc(bits, n - 1, j);
                        if (rel & 2)
                            bits = detail::with_arc(bits, j, n - 1);
                    }
                    candidates.push_back(detail::canonical_bits(n, bits));
                }
            }
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()),
                             candidates.end());
            u.reps_[n] = std::move(candidates);
        }
        return u;
    }

    int max_vertices() const { return static_cast<int>(reps_.size()) - 1; }

    const std::vector<std::uint64_t>& reps(int n) const { return reps_[n]; }

    std::size_t class_count(int n) const { return reps_[n].size(); }

    static Graph graph_of(int n, std::uint64_t bits)
    {
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i)
            names.push_back("v" + std::to_string(i));
        std::vector<Edge> edges;
        std::size_t id = 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && detail::arc(bits, i, j))
                    edges.push_back(Edge{"e" + std::to_string(id++), names[i], names[j]});
        return Graph::build(std::move(names), std::move(edges));
    }

    static bool connected(int n, std::uint64_t bits) { return detail::bits_connected(n, bits); }

    /// Every representative with 1..max vertices, in deterministic order.
    template <typename Fn>
    void for_each(Fn&& fn) const // fn(n, bits)
    {
        for (int n = 1; n < static_cast<int>(reps_.size()); ++n)
            for (std::uint64_t bits : reps_[n])
                fn(n, bits);
    }

private:
    std::vector<std::vector<std::uint64_t>> reps_; // reps_[n] sorted canonical codes
};

/// Streams one representative per isomorphism class of simplicial digraphs
/// on up to `max_vertices` labeled vertices that satisfy `predicate`.
inline void enumerate_graphs(int max_vertices, const std::function<bool(const Graph&)>& predicate,
                             const std::function<void(const Graph&)>& sink)
{
    EnumUniverse universe = EnumUniverse::build(max_vertices);
    universe.for_each([&](int n, std::uint64_t bits) {
        Graph g = EnumUniverse::graph_of(n, bits);
        if (!predicate || predicate(g))
            sink(g);
    });
}

inline std::vector<Graph> enumerate_graphs_list(int max_vertices,
                                                const std::function<bool(const Graph&)>& predicate)
{
    std::vector<Graph> out;
    enumerate_graphs(max_vertices, predicate, [&](const Graph& g) { out.push_back(g); });
    return out;
}

} // namespace gq
