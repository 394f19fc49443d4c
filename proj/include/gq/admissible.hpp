#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "gq/classify.hpp"
#include "gq/graph.hpp"
#include "gq/iso.hpp"
#include "gq/quotient.hpp"

namespace gq {

/// Maximum-cardinality vertex set with no directed path between any two
/// distinct members in either direction, coerced to empty when the maximum
/// has fewer than two members.
struct AdmissibleBoundary {
    std::vector<std::string> vertex_set; // sorted by name
};

namespace detail {

// reach_any[v] = vertices u (as bits) with a directed path v->u or u->v.
inline std::vector<std::uint32_t> mutual_reach_masks(const Graph& g)
{
    std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> fwd(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> stack;
        auto push = [&](std::size_t w) {
            if (!(fwd[s] >> w & 1u)) {
                fwd[s] |= 1u << w;
                stack.push_back(w);
            }
        };
        for (std::size_t e : g.out_edges(s))
            push(g.edge_dst_index(e));
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t e : g.out_edges(v))
                push(g.edge_dst_index(e));
        }
    }
    std::vector<std::uint32_t> any(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            if (u != v && ((fwd[v] >> u & 1u) || (fwd[u] >> v & 1u)))
                any[v] |= 1u << u;
    return any;
}

} // namespace detail

inline constexpr std::size_t kAdmissibleVertexLimit = 20;

/// Exact maximum antichain under mutual unreachability; exhaustive subset
/// sweep with memoized reachability, so inputs above 20 vertices are
/// rejected rather than answered heuristically.
///
/// A graph can have several maximum antichains whose quotients are not even
/// isomorphic, so a name-based tie-break would make the admissible quotient
/// depend on labeling. Ties are therefore broken by the lexicographically
/// smallest canonical form of the candidate's quotient graph (which makes
/// the quotient's isomorphism class independent of vertex names), and only
/// then by the smallest sorted name sequence. When the quotient exceeds the
/// canonical-form size limit the name tie-break applies directly.
inline AdmissibleBoundary admissible_boundary(const Graph& g)
{
    std::size_t n = g.vertex_count();
    if (n > kAdmissibleVertexLimit)
        throw GraphError(ErrorKind::SizeLimit,
                         "admissible boundary search limited to " +
                             std::to_string(kAdmissibleVertexLimit) + " vertices");
    if (n == 0)
        return {};

    // Vertices reindexed in name order, so that comparing membership masks
    // from the least significant differing bit compares sorted name
    // sequences.
    std::vector<std::size_t> by_name(n);
    for (std::size_t i = 0; i < n; ++i)
        by_name[i] = i;
    std::sort(by_name.begin(), by_name.end(),
              [&](std::size_t a, std::size_t b) { return g.vertices()[a] < g.vertices()[b]; });

    auto any = detail::mutual_reach_masks(g);
    std::vector<std::uint32_t> conflict(n, 0); // in name-order indexing
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (any[by_name[i]] >> by_name[j] & 1u)
                conflict[i] |= 1u << j;

    std::uint32_t total = (1u << n) - 1;
    std::vector<char> valid(static_cast<std::size_t>(total) + 1, 0);
    valid[0] = 1;
    int best_size = 0;
    for (std::uint32_t mask = 1; mask <= total; ++mask) {
        std::uint32_t low = mask & (~mask + 1);
        std::uint32_t rest = mask ^ low;
        int v = std::countr_zero(low);
        if (!valid[rest] || (conflict[v] & rest))
            continue;
        valid[mask] = 1;
        best_size = std::max(best_size, std::popcount(mask));
    }
    if (best_size < 2)
        return {};

    std::vector<std::uint32_t> candidates;
    for (std::uint32_t mask = 1; mask <= total; ++mask)
        if (valid[mask] && std::popcount(mask) == best_size)
            candidates.push_back(mask);

    auto names_of = [&](std::uint32_t mask) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u)
                names.push_back(g.vertices()[by_name[i]]);
        return names; // sorted, by construction of by_name
    };
    auto name_lex_smaller = [](std::uint32_t a, std::uint32_t b) {
        std::uint32_t diff = a ^ b;
        return diff && (a & (diff & (~diff + 1)));
    };

    std::uint32_t best_mask = candidates[0];
    std::size_t quotient_vertices = n - static_cast<std::size_t>(best_size) + 1;
    if (candidates.size() > 1 && quotient_vertices <= 12) {
        std::string best_canon =
            canonical_form(boundary_quotient(g, Boundary{names_of(best_mask)}).graph);
        for (std::size_t i = 1; i < candidates.size(); ++i) {
            std::string canon = canonical_form(
                boundary_quotient(g, Boundary{names_of(candidates[i])}).graph);
            if (canon < best_canon ||
                (canon == best_canon && name_lex_smaller(candidates[i], best_mask))) {
                best_canon = std::move(canon);
                best_mask = candidates[i];
            }
        }
    } else {
        for (std::size_t i = 1; i < candidates.size(); ++i)
            if (name_lex_smaller(candidates[i], best_mask))
                best_mask = candidates[i];
    }

    return AdmissibleBoundary{names_of(best_mask)};
}

/// boundary_quotient by the admissible boundary (identity when empty).
inline QuotientResult admissible_quotient(const Graph& g)
{
    auto boundary = admissible_boundary(g);
    return boundary_quotient(g, Boundary{boundary.vertex_set});
}

/// Every admissible-boundary vertex lies in the vertex set of some Tree
/// component of the CT decomposition.
inline bool admissible_in_tree_components(const Graph& g)
{
    auto decomposition = ct_decompose(g);
    auto boundary = admissible_boundary(g);
    for (const auto& name : boundary.vertex_set) {
        bool covered = false;
        for (const auto& comp : decomposition.components) {
            if (comp.tag.kind != TypeTag::Tree)
                continue;
            if (std::find(comp.spec.vertex_set.begin(), comp.spec.vertex_set.end(), name) !=
                comp.spec.vertex_set.end()) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return false;
    }
    return true;
}

} // namespace gq
