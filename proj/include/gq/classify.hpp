#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gq/graph.hpp"
#include "gq/quotient.hpp"

namespace gq {

/// Recognized shapes. Circulant(N) is the one-flow directed N-cycle,
/// LoopGraph(m) one vertex with m loops, Tree any directed tree on >= 2
/// vertices, Trivial the one-vertex-no-edge graph.
struct TypeTag {
    enum Kind { Trivial, Circulant, LoopGraph, Tree, Unclassified };
    Kind kind = Unclassified;
    std::size_t n = 0; // cycle length or loop count

    static TypeTag trivial() { return {Trivial, 0}; }
    static TypeTag circulant(std::size_t n) { return {Circulant, n}; }
    static TypeTag loop_graph(std::size_t m) { return {LoopGraph, m}; }
    static TypeTag tree() { return {Tree, 0}; }
    static TypeTag unclassified() { return {Unclassified, 0}; }

    friend bool operator==(const TypeTag&, const TypeTag&) = default;

    std::string str() const
    {
        switch (kind) {
        case Trivial: return "1";
        case Circulant: return "C" + std::to_string(n);
        case LoopGraph: return "L" + std::to_string(n);
        case Tree: return "T";
        case Unclassified: return "?";
        }
        return "?";
    }
};

inline std::string format_type_tuple(const std::vector<TypeTag>& tags)
{
    std::string out = "(";
    for (std::size_t i = 0; i < tags.size(); ++i) {
        if (i)
            out += ", ";
        out += tags[i].str();
    }
    out += ")";
    return out;
}

inline TypeTag classify_type(const Graph& g)
{
    std::size_t n = g.vertex_count(), m = g.edge_count();
    if (n == 1)
        return m == 0 ? TypeTag::trivial() : TypeTag::loop_graph(m); // 1-vertex edges are loops
    if (n == 0)
        return TypeTag::unclassified();
    if (n >= 2 && m == n) {
        // one directed cycle through all vertices: in/out degree 1, no loops, connected
        bool circ = true;
        for (std::size_t v = 0; v < n && circ; ++v)
            circ = g.out_edges(v).size() == 1 && g.in_edges(v).size() == 1;
        for (std::size_t e = 0; e < m && circ; ++e)
            circ = g.edge_src_index(e) != g.edge_dst_index(e);
        if (circ && is_connected(g))
            return TypeTag::circulant(n);
    }
    if (m + 1 == n && is_connected(g))
        return TypeTag::tree();
    return TypeTag::unclassified();
}

/// True for trees (or the trivial graph) with a root that reaches every
/// other vertex by exactly one directed path.
inline bool is_growing_tree(const Graph& g)
{
    TypeTag tag = classify_type(g);
    if (tag.kind == TypeTag::Trivial)
        return true;
    if (tag.kind != TypeTag::Tree)
        return false;
    // In a tree the undirected path between two vertices is unique, so a
    // root reaching everyone forward gives unique directed paths for free.
    for (std::size_t r = 0; r < g.vertex_count(); ++r) {
        if (!g.in_edges(r).empty())
            continue;
        std::size_t reached = 1;
        std::vector<char> seen(g.vertex_count(), 0);
        seen[r] = 1;
        std::vector<std::size_t> stack{r};
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t e : g.out_edges(v)) {
                std::size_t w = g.edge_dst_index(e);
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached == g.vertex_count())
            return true;
    }
    return false;
}

/// Gluing components of the maximal CT decomposition, each a full subgraph
/// tagged Circulant, Tree or Trivial. cut_vertices are the vertices shared
/// by at least two components; components partition the edge set.
struct Decomposition {
    struct Component {
        FullSubgraphSpec spec;
        TypeTag tag;
        std::vector<std::size_t> edge_indices; // into the host edge list
    };
    std::vector<Component> components;
    std::vector<std::string> cut_vertices;
    std::vector<TypeTag> maximal_type;
};

namespace detail {

// Biconnected components of the underlying undirected multigraph: each block
// is a set of edge indices. Parallel directed edges count separately, so an
// antiparallel pair forms a 2-edge block (a coherent 2-cycle).
inline std::vector<std::vector<std::size_t>> biconnected_blocks(const Graph& g)
{
    std::size_t n = g.vertex_count(), m = g.edge_count();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n); // (other, edge)
    for (std::size_t e = 0; e < m; ++e) {
        std::size_t s = g.edge_src_index(e), d = g.edge_dst_index(e);
        adj[s].emplace_back(d, e);
        if (s != d)
            adj[d].emplace_back(s, e);
    }

    std::vector<std::vector<std::size_t>> blocks;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::size_t> edge_stack;
    std::vector<char> edge_seen(m, 0);
    int timer = 0;

    struct Frame {
        std::size_t v;
        std::size_t parent_edge;
        std::size_t next = 0;
    };

    for (std::size_t root = 0; root < n; ++root) {
        if (disc[root] != -1)
            continue;
        std::vector<Frame> stack{{root, m, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                auto [w, e] = adj[f.v][f.next++];
                if (e == f.parent_edge || w == f.v)
                    continue; // tree edge back up, or a loop (never in simplicial input)
                if (!edge_seen[e]) {
                    edge_seen[e] = 1;
                    edge_stack.push_back(e);
                }
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                std::size_t child = f.v;
                std::size_t via = f.parent_edge;
                stack.pop_back();
                if (stack.empty())
                    continue;
                Frame& p = stack.back();
                low[p.v] = std::min(low[p.v], low[child]);
                if (low[child] >= disc[p.v]) {
                    // pop one block ending with the tree edge into `child`
                    std::vector<std::size_t> block;
                    for (;;) {
                        std::size_t e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == via)
                            break;
                    }
                    std::sort(block.begin(), block.end());
                    blocks.push_back(std::move(block));
                }
            }
        }
    }
    return blocks;
}

inline std::vector<std::size_t> block_vertices(const Graph& g, const std::vector<std::size_t>& block)
{
    std::vector<std::size_t> verts;
    for (std::size_t e : block) {
        verts.push_back(g.edge_src_index(e));
        verts.push_back(g.edge_dst_index(e));
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

// A block is a coherent cycle when its edges form one directed cycle
// visiting every block vertex exactly once.
inline bool is_coherent_cycle(const Graph& g, const std::vector<std::size_t>& block,
                              const std::vector<std::size_t>& verts)
{
    if (block.size() != verts.size() || verts.size() < 2)
        return false;
    std::vector<int> out_deg(g.vertex_count(), 0), in_deg(g.vertex_count(), 0);
    for (std::size_t e : block) {
        ++out_deg[g.edge_src_index(e)];
        ++in_deg[g.edge_dst_index(e)];
    }
    for (std::size_t v : verts)
        if (out_deg[v] != 1 || in_deg[v] != 1)
            return false;
    return true; // block is connected, so degree-1 everywhere means one cycle
}

} // namespace detail

/// Outcome of a decomposition attempt; `error_kind` is meaningful only when
/// `ok` is false, and `detail` carries the offending block's vertices for
/// NotCTDecomposable.
struct DecomposeOutcome {
    bool ok = false;
    Decomposition decomposition;
    ErrorKind error_kind = ErrorKind::NotCTDecomposable;
    std::string message;
    std::vector<std::string> detail;
};

/// Decomposes a connected simplicial graph into its maximal CT components:
/// biconnected blocks that are coherently-directed cycles become Circulant
/// components, bridge edges merge into maximal weakly-connected Tree
/// components, and the trivial graph is its own Trivial component. Any other
/// block makes the graph non-decomposable. This variant reports failure in
/// the outcome instead of throwing, which the exhaustive sweeps rely on.
inline DecomposeOutcome try_ct_decompose(const Graph& g)
{
    DecomposeOutcome outcome;
    if (!is_simplicial(g)) {
        outcome.error_kind = ErrorKind::NotSimplicial;
        outcome.message = "graph has loops or parallel edges";
        return outcome;
    }
    if (!is_connected(g)) {
        outcome.error_kind = ErrorKind::NotConnected;
        outcome.message = "graph is not weakly connected";
        return outcome;
    }

    Decomposition& result = outcome.decomposition;
    if (g.vertex_count() == 1) {
        result.components.push_back(
            {FullSubgraphSpec{{g.vertices()[0]}}, TypeTag::trivial(), {}});
        result.maximal_type = {TypeTag::trivial()};
        outcome.ok = true;
        return outcome;
    }

    auto blocks = detail::biconnected_blocks(g);
    std::vector<std::size_t> bridge_edges;
    std::vector<Decomposition::Component> circulants;
    for (auto& block : blocks) {
        if (block.size() == 1) {
            bridge_edges.push_back(block[0]);
            continue;
        }
        auto verts = detail::block_vertices(g, block);
        if (!detail::is_coherent_cycle(g, block, verts)) {
            outcome.error_kind = ErrorKind::NotCTDecomposable;
            outcome.message = "block is not a coherently directed cycle";
            for (std::size_t v : verts)
                outcome.detail.push_back(g.vertices()[v]);
            return outcome;
        }
        Decomposition::Component comp;
        for (std::size_t v : verts)
            comp.spec.vertex_set.push_back(g.vertices()[v]);
        comp.tag = TypeTag::circulant(verts.size());
        comp.edge_indices = block;
        circulants.push_back(std::move(comp));
    }

    // Merge bridges into maximal weakly-connected forests; each is a tree.
    std::vector<Decomposition::Component> trees;
    if (!bridge_edges.empty()) {
        std::vector<std::vector<std::size_t>> touch(g.vertex_count());
        for (std::size_t e : bridge_edges) {
            touch[g.edge_src_index(e)].push_back(e);
            touch[g.edge_dst_index(e)].push_back(e);
        }
        std::vector<char> edge_used(g.edge_count(), 0);
        std::vector<char> vertex_seen(g.vertex_count(), 0);
        for (std::size_t seed : bridge_edges) {
            if (edge_used[seed])
                continue;
            std::vector<std::size_t> verts, edges;
            std::vector<std::size_t> stack{g.edge_src_index(seed)};
            vertex_seen[g.edge_src_index(seed)] = 1;
            while (!stack.empty()) {
                std::size_t v = stack.back();
                stack.pop_back();
                verts.push_back(v);
                for (std::size_t e : touch[v]) {
                    if (edge_used[e])
                        continue;
                    edge_used[e] = 1;
                    edges.push_back(e);
                    std::size_t s = g.edge_src_index(e), d = g.edge_dst_index(e);
                    for (std::size_t w : {s, d}) {
                        if (!vertex_seen[w]) {
                            vertex_seen[w] = 1;
                            stack.push_back(w);
                        }
                    }
                }
            }
            std::sort(verts.begin(), verts.end());
            std::sort(edges.begin(), edges.end());
            Decomposition::Component comp;
            for (std::size_t v : verts)
                comp.spec.vertex_set.push_back(g.vertices()[v]);
            comp.tag = TypeTag::tree();
            comp.edge_indices = std::move(edges);
            trees.push_back(std::move(comp));
        }
    }

    // Deterministic order: circulants by descending N then vertex names,
    // then trees by vertex names.
    std::sort(circulants.begin(), circulants.end(), [](const auto& a, const auto& b) {
        if (a.tag.n != b.tag.n)
            return a.tag.n > b.tag.n;
        return a.spec.vertex_set < b.spec.vertex_set;
    });
    std::sort(trees.begin(), trees.end(),
              [](const auto& a, const auto& b) { return a.spec.vertex_set < b.spec.vertex_set; });
    for (auto& c : circulants)
        result.components.push_back(std::move(c));
    for (auto& t : trees)
        result.components.push_back(std::move(t));

    std::vector<int> membership(g.vertex_count(), 0);
    for (const auto& comp : result.components)
        for (const auto& name : comp.spec.vertex_set)
            ++membership[g.vertex_index(name)];
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (membership[v] >= 2)
            result.cut_vertices.push_back(g.vertices()[v]);

    for (const auto& comp : result.components)
        result.maximal_type.push_back(comp.tag);
    outcome.ok = true;
    return outcome;
}

inline Decomposition ct_decompose(const Graph& g)
{
    DecomposeOutcome outcome = try_ct_decompose(g);
    if (!outcome.ok)
        throw GraphError(outcome.error_kind, outcome.message, outcome.detail);
    return std::move(outcome.decomposition);
}

inline std::vector<TypeTag> maximal_type(const Graph& g)
{
    return ct_decompose(g).maximal_type;
}

/// Mixed maximal type: the decomposition has both a Circulant and a Tree
/// component.
inline bool is_mixed_maximal_type(const Graph& g)
{
    auto type = maximal_type(g);
    bool has_circulant = false, has_tree = false;
    for (const auto& t : type) {
        has_circulant |= t.kind == TypeTag::Circulant;
        has_tree |= t.kind == TypeTag::Tree;
    }
    return has_circulant && has_tree;
}

} // namespace gq
