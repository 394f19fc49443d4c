#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gq/graph.hpp"
#include "gq/iso.hpp"
#include "gq/quotient.hpp"

namespace gq {

/// Exact index value: zero, or e^k for a nonnegative integer exponent k.
/// All identities are laws of exponents, so e is never evaluated except for
/// display. Multiplication adds exponents and zero absorbs.
class LogIndex {
public:
    static LogIndex zero() { return LogIndex(); }
    static LogIndex exp(std::uint64_t k)
    {
        LogIndex x;
        x.exponent_ = k;
        return x;
    }

    bool is_zero() const { return !exponent_.has_value(); }
    std::uint64_t exponent() const
    {
        if (is_zero())
            throw GraphError(ErrorKind::InternalMismatch, "zero index has no exponent");
        return *exponent_;
    }

    friend LogIndex operator*(const LogIndex& a, const LogIndex& b)
    {
        if (a.is_zero() || b.is_zero())
            return zero();
        return exp(*a.exponent_ + *b.exponent_);
    }

    friend bool operator==(const LogIndex&, const LogIndex&) = default;

    friend bool operator<(const LogIndex& a, const LogIndex& b)
    {
        if (a.is_zero())
            return !b.is_zero();
        if (b.is_zero())
            return false;
        return *a.exponent_ < *b.exponent_;
    }

    std::string str() const
    {
        if (is_zero())
            return "0";
        return "e^" + std::to_string(*exponent_) + " (log=" + std::to_string(*exponent_) + ")";
    }

private:
    std::optional<std::uint64_t> exponent_;
};

/// 0.0 for zero, otherwise exp(k) in double precision. Exponents above 700
/// overflow double range and are rejected.
inline double to_float(const LogIndex& x)
{
    if (x.is_zero())
        return 0.0;
    if (x.exponent() > 700)
        throw GraphError(ErrorKind::Overflow, "exp(" + std::to_string(x.exponent()) +
                                                  ") exceeds double range");
    return std::exp(static_cast<double>(x.exponent()));
}

/// Subgraph boundary index Ind_G(H) = e^(size(G) - size(H)). The value is
/// recomputed as e^(size(G/boundary(H)) - 1) through the quotient module and
/// the two routes must agree; a mismatch reports an internal defect rather
/// than a value.
inline LogIndex ind_subgraph(const Graph& g, const FullSubgraphSpec& spec)
{
    if (spec.vertex_set.empty())
        throw GraphError(ErrorKind::EmptySubgraph, "full subgraph needs at least one vertex");
    Graph h = induced_full_subgraph(g, spec);
    std::uint64_t direct = size(g) - size(h);
    QuotientResult q = subgraph_boundary_quotient(g, spec);
    std::uint64_t via_quotient = size(q.graph) - 1;
    if (direct != via_quotient)
        throw GraphError(ErrorKind::InternalMismatch,
                         "size arithmetic and quotient construction disagree: " +
                             std::to_string(direct) + " vs " + std::to_string(via_quotient));
    return LogIndex::exp(direct);
}

/// Inter-graph index Ind_{g2}(g1): e^(size(g2) - size(g1)) when g1 embeds
/// into g2 as a full subgraph, zero otherwise. Independent of the particular
/// embedding because injective images preserve size.
inline LogIndex ind_between(const Graph& g1, const Graph& g2, std::size_t pattern_limit = 10,
                            std::size_t host_limit = 12)
{
    if (!find_induced_embedding(g1, g2, pattern_limit, host_limit))
        return LogIndex::zero();
    return LogIndex::exp(size(g2) - size(g1));
}

/// Nested sequence of full-subgraph specs over one host, innermost first.
struct Chain {
    std::vector<FullSubgraphSpec> specs;
};

namespace detail {

inline bool subset_of(const std::vector<std::string>& a, const std::vector<std::string>& b)
{
    for (const auto& name : a)
        if (std::find(b.begin(), b.end(), name) == b.end())
            return false;
    return true;
}

} // namespace detail

inline void validate_chain(const Graph& g, const Chain& chain)
{
    if (chain.specs.empty())
        throw GraphError(ErrorKind::InvalidChain, "chain has no subgraphs");
    for (const auto& spec : chain.specs) {
        if (spec.vertex_set.empty())
            throw GraphError(ErrorKind::InvalidChain, "chain level is empty");
        for (const auto& name : spec.vertex_set)
            g.vertex_index(name); // UnknownVertex on failure
    }
    for (std::size_t i = 0; i + 1 < chain.specs.size(); ++i)
        if (!detail::subset_of(chain.specs[i].vertex_set, chain.specs[i + 1].vertex_set))
            throw GraphError(ErrorKind::InvalidChain,
                             "chain level " + std::to_string(i + 1) + " is not nested in level " +
                                 std::to_string(i + 2));
}

/// Chain-rule report: the index of each step Ind_{K_{j+1}}(K_j) (with
/// K_{n+1} = G), their telescoped product, and the direct index Ind_G(K_1).
/// The chain rule asserts product == direct, exactly in the log domain.
struct ChainReport {
    std::vector<LogIndex> step_indices;
    LogIndex product;
    LogIndex direct;
    bool ok = false;
};

inline ChainReport verify_chain(const Graph& g, const Chain& chain)
{
    validate_chain(g, chain);
    ChainReport report;
    report.product = LogIndex::exp(0);
    for (std::size_t j = 0; j + 1 < chain.specs.size(); ++j) {
        Graph outer = induced_full_subgraph(g, chain.specs[j + 1]);
        LogIndex step = ind_subgraph(outer, chain.specs[j]);
        report.product = report.product * step;
        report.step_indices.push_back(step);
    }
    LogIndex last = ind_subgraph(g, chain.specs.back());
    report.product = report.product * last;
    report.step_indices.push_back(last);
    report.direct = ind_subgraph(g, chain.specs.front());
    report.ok = report.product == report.direct;
    return report;
}

/// Dual chain: the subgraph quotients of the chain in reversed order,
/// together with the per-step containment and duality checks. Step i records
/// whether G/∂_{K_{j+1}} embeds into G/∂_{K_j} as a full subgraph and
/// whether the embedding-based index equals Ind_{K_{j+1}}(K_j) exactly.
struct DualChainResult {
    struct StepCheck {
        bool embedding_found = false;
        bool duality_ok = false;
        LogIndex quotient_index; // Ind_{G/∂_K}(G/∂_H), zero when no embedding
        LogIndex expected;       // Ind_H(K)
    };
    std::vector<QuotientResult> quotients; // outermost subgraph's quotient first
    std::vector<StepCheck> checks;
    bool all_ok = true;
};

inline DualChainResult dual_chain(const Graph& g, const Chain& chain,
                                  std::size_t pattern_limit = 10, std::size_t host_limit = 12)
{
    validate_chain(g, chain);
    DualChainResult result;
    for (auto it = chain.specs.rbegin(); it != chain.specs.rend(); ++it)
        result.quotients.push_back(subgraph_boundary_quotient(g, *it));
    // quotients[i] = G/∂_{K_{n-i}}; step i checks quotients[i] < quotients[i+1]
    for (std::size_t i = 0; i + 1 < result.quotients.size(); ++i) {
        const Graph& inner = result.quotients[i].graph;      // G/∂_H, H larger
        const Graph& outer = result.quotients[i + 1].graph;  // G/∂_K, K smaller
        std::size_t h = chain.specs.size() - 1 - i;
        std::size_t k = h - 1;
        Graph hg = induced_full_subgraph(g, chain.specs[h]);
        DualChainResult::StepCheck check;
        check.expected = ind_subgraph(hg, chain.specs[k]);
        check.quotient_index = ind_between(inner, outer, pattern_limit, host_limit);
        check.embedding_found = !check.quotient_index.is_zero();
        check.duality_ok = check.quotient_index == check.expected;
        result.all_ok = result.all_ok && check.embedding_found && check.duality_ok;
        result.checks.push_back(check);
    }
    return result;
}

inline constexpr std::size_t kIndexRangeSizeLimit = 14;

/// The set {Ind_G(H) : H a full subgraph of G}, by exhaustive enumeration of
/// nonempty vertex subsets. Guaranteed (and asserted by the range theorem
/// tests) to lie inside {e^(|G|-k) : 1 <= k <= |G|}.
inline std::set<LogIndex> index_range(const Graph& g)
{
    if (size(g) > kIndexRangeSizeLimit)
        throw GraphError(ErrorKind::SizeLimit, "index range enumeration limited to size " +
                                                   std::to_string(kIndexRangeSizeLimit));
    std::set<LogIndex> values;
    std::size_t n = g.vertex_count();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        FullSubgraphSpec spec;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1u)
                spec.vertex_set.push_back(g.vertices()[v]);
        values.insert(ind_subgraph(g, spec));
    }
    return values;
}

} // namespace gq
