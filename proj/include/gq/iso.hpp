#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gq/graph.hpp"

namespace gq {

/// Structure-preserving injective correspondence between two graphs: both
/// maps are injective, and every edge maps to an edge with the mapped
/// endpoints. For an isomorphism both maps are bijections.
struct GraphMapping {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> edge_map;
};

namespace canon {

// Compact multiplicity-matrix form used by the canonical-labeling search.
// mult(i, j) counts arcs i->j; the diagonal counts loops.
constexpr int kMaxCanonVertices = 16;

struct Mat {
    int n = 0;
    std::array<std::uint16_t, kMaxCanonVertices * kMaxCanonVertices> m{};

    std::uint16_t& at(int i, int j) { return m[i * kMaxCanonVertices + j]; }
    std::uint16_t at(int i, int j) const { return m[i * kMaxCanonVertices + j]; }
};

inline Mat to_mat(const Graph& g)
{
    if (g.vertex_count() > kMaxCanonVertices)
        throw GraphError(ErrorKind::SizeLimit, "canonical labeling supports at most " +
                                                   std::to_string(kMaxCanonVertices) +
                                                   " vertices");
    Mat mat;
    mat.n = static_cast<int>(g.vertex_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto& cell =
            mat.at(static_cast<int>(g.edge_src_index(e)), static_cast<int>(g.edge_dst_index(e)));
        if (cell == std::numeric_limits<std::uint16_t>::max())
            throw GraphError(ErrorKind::SizeLimit, "too many parallel edges for canonical form");
        ++cell;
    }
    return mat;
}

namespace detail {

using Colors = std::array<int, kMaxCanonVertices>;

// One refinement pass: recolor vertices by (old color, loop count, arc
// counts to and from every color class). Returns the number of colors.
inline int refine(const Mat& g, Colors& color)
{
    int n = g.n;
    for (;;) {
        // signature per vertex, keyed so that comparison is deterministic
        std::array<std::array<std::uint32_t, 2 * kMaxCanonVertices + 2>, kMaxCanonVertices> sig{};
        for (int v = 0; v < n; ++v) {
            sig[v][0] = static_cast<std::uint32_t>(color[v]);
            sig[v][1] = g.at(v, v);
            for (int w = 0; w < n; ++w) {
                if (w == v)
                    continue;
                sig[v][2 + 2 * color[w]] += g.at(v, w);
                sig[v][3 + 2 * color[w]] += g.at(w, v);
            }
        }
        std::array<int, kMaxCanonVertices> order;
        for (int v = 0; v < n; ++v)
            order[v] = v;
        std::sort(order.begin(), order.begin() + n,
                  [&](int a, int b) { return sig[a] < sig[b]; });
        Colors next{};
        int classes = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]])
                ++classes;
            next[order[i]] = classes;
        }
        ++classes;
        bool changed = false;
        for (int v = 0; v < n; ++v)
            changed |= next[v] != color[v];
        color = next;
        if (!changed)
            return classes;
    }
}

// Swapping u and w (all else fixed) is an automorphism of g.
inline bool twin_transposition(const Mat& g, int u, int w)
{
    if (g.at(u, u) != g.at(w, w) || g.at(u, w) != g.at(w, u))
        return false;
    for (int k = 0; k < g.n; ++k) {
        if (k == u || k == w)
            continue;
        if (g.at(u, k) != g.at(w, k) || g.at(k, u) != g.at(k, w))
            return false;
    }
    return true;
}

struct CanonSearch {
    const Mat& g;
    std::vector<std::uint16_t> best; // recoded matrix, row-major n*n
    bool have_best = false;
    std::array<int, kMaxCanonVertices> best_order{};

    explicit CanonSearch(const Mat& graph) : g(graph) {}

    void leaf(const Colors& color)
    {
        int n = g.n;
        std::array<int, kMaxCanonVertices> order;
        for (int v = 0; v < n; ++v)
            order[color[v]] = v;
        std::vector<std::uint16_t> code(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                code[i * n + j] = g.at(order[i], order[j]);
        if (!have_best || code < best) {
            best = std::move(code);
            best_order = order;
            have_best = true;
        }
    }

    void run(Colors color, int classes)
    {
        int n = g.n;
        if (classes == n) {
            leaf(color);
            return;
        }
        // first non-singleton class in color order
        int target = -1;
        for (int c = 0; c < classes && target < 0; ++c) {
            int count = 0;
            for (int v = 0; v < n; ++v)
                count += color[v] == c;
            if (count >= 2)
                target = c;
        }
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (color[v] == target)
                members.push_back(v);
        std::vector<int> tried;
        for (int v : members) {
            bool redundant = false;
            for (int u : tried)
                if (twin_transposition(g, u, v)) {
                    redundant = true;
                    break;
                }
            if (redundant)
                continue;
            tried.push_back(v);
            // individualize: v becomes its own class just before the rest
            Colors child = color;
            for (int w = 0; w < n; ++w)
                if (child[w] > target || (child[w] == target && w != v))
                    ++child[w];
            run_refined(child);
        }
    }

    void run_refined(Colors color)
    {
        int classes = refine(g, color);
        run(color, classes);
    }
};

} // namespace detail

/// Canonical vertex order of a multiplicity matrix: position -> vertex. Two
/// graphs are isomorphic iff their recoded matrices under this order agree.
inline std::array<int, kMaxCanonVertices> canonical_order(const Mat& g)
{
    detail::Colors color{};
    detail::CanonSearch search(g);
    search.run_refined(color);
    if (!search.have_best) // n == 0
        return {};
    return search.best_order;
}

} // namespace canon

namespace detail {

struct VertexSignature {
    std::size_t out = 0, in = 0, loops = 0;
    friend auto operator<=>(const VertexSignature&, const VertexSignature&) = default;
};

inline VertexSignature signature_of(const Graph& g, std::size_t v)
{
    VertexSignature s;
    for (std::size_t e : g.out_edges(v)) {
        if (g.edge_dst_index(e) == v)
            ++s.loops;
        else
            ++s.out;
    }
    for (std::size_t e : g.in_edges(v))
        if (g.edge_src_index(e) != v)
            ++s.in;
    return s;
}

// Vertices ordered by (out-degree, in-degree, loop-count), then name.
inline std::vector<std::size_t> signature_order(const Graph& g)
{
    std::vector<std::size_t> order(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::vector<VertexSignature> sig(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        sig[v] = signature_of(g, v);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (sig[a] != sig[b])
            return sig[a] < sig[b];
        return g.vertices()[a] < g.vertices()[b];
    });
    return order;
}

inline std::vector<std::vector<std::size_t>> multiplicity(const Graph& g)
{
    std::vector<std::vector<std::size_t>> m(g.vertex_count(),
                                            std::vector<std::size_t>(g.vertex_count(), 0));
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        ++m[g.edge_src_index(e)][g.edge_dst_index(e)];
    return m;
}

// Backtracking mapper shared by isomorphism and induced-embedding search.
// Both require exact multiplicity agreement on mapped pairs; isomorphism
// additionally requires a bijection.
struct MappingSearch {
    const Graph& g1;
    const Graph& g2;
    bool bijective;
    std::vector<std::vector<std::size_t>> m1, m2;
    std::vector<std::size_t> order1, order2;
    std::vector<std::size_t> assigned; // g1 index -> g2 index
    std::vector<char> used;            // g2 index taken
    std::vector<VertexSignature> sig1, sig2;

    MappingSearch(const Graph& a, const Graph& b, bool bij)
        : g1(a), g2(b), bijective(bij), m1(multiplicity(a)), m2(multiplicity(b)),
          order1(signature_order(a)), order2(signature_order(b)),
          assigned(a.vertex_count(), SIZE_MAX), used(b.vertex_count(), 0),
          sig1(a.vertex_count()), sig2(b.vertex_count())
    {
        for (std::size_t v = 0; v < a.vertex_count(); ++v)
            sig1[v] = signature_of(a, v);
        for (std::size_t v = 0; v < b.vertex_count(); ++v)
            sig2[v] = signature_of(b, v);
    }

    bool candidate_ok(std::size_t u, std::size_t w) const
    {
        if (bijective) {
            if (sig1[u] != sig2[w])
                return false;
        } else {
            if (sig2[w].out < sig1[u].out || sig2[w].in < sig1[u].in ||
                sig2[w].loops != sig1[u].loops)
                return false;
        }
        if (m1[u][u] != m2[w][w])
            return false;
        for (std::size_t prev = 0; prev < assigned.size(); ++prev) {
            std::size_t pw = assigned[prev];
            if (pw == SIZE_MAX || prev == u)
                continue;
            if (m1[u][prev] != m2[w][pw] || m1[prev][u] != m2[pw][w])
                return false;
        }
        return true;
    }

    bool search(std::size_t depth)
    {
        if (depth == order1.size())
            return true;
        std::size_t u = order1[depth];
        for (std::size_t w : order2) {
            if (used[w] || !candidate_ok(u, w))
                continue;
            assigned[u] = w;
            used[w] = 1;
            if (search(depth + 1))
                return true;
            assigned[u] = SIZE_MAX;
            used[w] = 0;
        }
        return false;
    }

    GraphMapping extract() const
    {
        GraphMapping mapping;
        for (std::size_t v = 0; v < g1.vertex_count(); ++v)
            mapping.vertex_map[g1.vertices()[v]] = g2.vertices()[assigned[v]];
        // pair up edges per ordered endpoint pair, in edge-list order
        std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> pool;
        for (std::size_t e = 0; e < g2.edge_count(); ++e)
            pool[{g2.edge_src_index(e), g2.edge_dst_index(e)}].push_back(e);
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> cursor;
        for (std::size_t e = 0; e < g1.edge_count(); ++e) {
            std::pair<std::size_t, std::size_t> key{assigned[g1.edge_src_index(e)],
                                                    assigned[g1.edge_dst_index(e)]};
            auto& bucket = pool[key];
            std::size_t& next = cursor[key];
            mapping.edge_map[g1.edges()[e].id] = g2.edges()[bucket[next++]].id;
        }
        return mapping;
    }
};

} // namespace detail

/// Full bijective structure match, or absent. Deterministic: the first
/// mapping in signature-then-name search order is returned. Throws SizeLimit
/// when either graph exceeds `size_limit` vertices.
inline std::optional<GraphMapping> are_isomorphic(const Graph& g1, const Graph& g2,
                                                  std::size_t size_limit = 12)
{
    if (g1.vertex_count() > size_limit || g2.vertex_count() > size_limit)
        throw GraphError(ErrorKind::SizeLimit,
                         "isomorphism search limited to " + std::to_string(size_limit) +
                             " vertices");
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    {
        auto s1 = detail::signature_order(g1);
        auto s2 = detail::signature_order(g2);
        for (std::size_t i = 0; i < s1.size(); ++i)
            if (detail::signature_of(g1, s1[i]) != detail::signature_of(g2, s2[i]))
                return std::nullopt;
    }
    detail::MappingSearch search(g1, g2, true);
    if (!search.search(0))
        return std::nullopt;
    return search.extract();
}

/// Injective mapping whose vertex image induces a subgraph of `host`
/// isomorphic to `pattern` (exact arc multiplicities on every image pair).
inline std::optional<GraphMapping> find_induced_embedding(const Graph& pattern, const Graph& host,
                                                          std::size_t pattern_limit = 10,
                                                          std::size_t host_limit = 12)
{
    if (pattern.vertex_count() > pattern_limit)
        throw GraphError(ErrorKind::SizeLimit, "embedding pattern limited to " +
                                                   std::to_string(pattern_limit) + " vertices");
    if (host.vertex_count() > host_limit)
        throw GraphError(ErrorKind::SizeLimit,
                         "embedding host limited to " + std::to_string(host_limit) + " vertices");
    if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count())
        return std::nullopt;
    detail::MappingSearch search(pattern, host, false);
    if (!search.search(0))
        return std::nullopt;
    return search.extract();
}

/// Iso-invariant fingerprint: equal strings iff isomorphic graphs. Edge ids
/// never participate. Computed from the lexicographically minimal adjacency
/// code over canonical-labeling search.
inline std::string canonical_form(const Graph& g, std::size_t size_limit = 12)
{
    if (g.vertex_count() > size_limit)
        throw GraphError(ErrorKind::SizeLimit,
                         "canonical form limited to " + std::to_string(size_limit) + " vertices");
    canon::Mat mat = canon::to_mat(g);
    auto order = canon::canonical_order(mat);
    std::string out = std::to_string(mat.n) + ":";
    bool first = true;
    for (int i = 0; i < mat.n; ++i) {
        for (int j = 0; j < mat.n; ++j) {
            std::uint16_t count = mat.at(order[i], order[j]);
            for (std::uint16_t k = 0; k < count; ++k) {
                if (!first)
                    out += ',';
                first = false;
                out += std::to_string(i) + ">" + std::to_string(j);
            }
        }
    }
    return out;
}

} // namespace gq
