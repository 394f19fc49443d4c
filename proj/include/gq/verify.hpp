#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gq/admissible.hpp"
#include "gq/classify.hpp"
#include "gq/enumerate.hpp"
#include "gq/graph.hpp"
#include "gq/index.hpp"
#include "gq/io.hpp"
#include "gq/iso.hpp"
#include "gq/quotient.hpp"
#include "gq/random.hpp"

namespace gq {

// Small named graphs used by the fixture checks and the test suites.
namespace fixtures {

inline Graph trivial_graph()
{
    return Graph::build({"v"}, {});
}

/// v1 -> v2.
inline Graph single_arrow()
{
    return Graph::build({"v1", "v2"}, {{"e", "v1", "v2"}});
}

/// One vertex carrying m loops.
inline Graph loop_graph(std::size_t m)
{
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= m; ++i)
        edges.push_back({"l" + std::to_string(i), "v", "v"});
    return Graph::build({"v"}, std::move(edges));
}

/// One-flow circulant cycle v1 -> v2 -> ... -> vn -> v1.
inline Graph circulant(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("v" + std::to_string(i));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back({"e" + std::to_string(i + 1), names[i], names[(i + 1) % n]});
    return Graph::build(std::move(names), std::move(edges));
}

/// Directed path v3 -> v1 -> v2 (a tree whose vertices are all comparable).
inline Graph path3()
{
    return Graph::build({"v1", "v2", "v3"}, {{"e1", "v1", "v2"}, {"e2", "v3", "v1"}});
}

/// Out-fork v1 -> v2, v1 -> v3.
inline Graph fork_out()
{
    return Graph::build({"v1", "v2", "v3"}, {{"e1", "v1", "v2"}, {"e2", "v1", "v3"}});
}

/// In-fork v2 -> v1, v3 -> v1.
inline Graph fork_in()
{
    return Graph::build({"v1", "v2", "v3"}, {{"e1", "v2", "v1"}, {"e2", "v3", "v1"}});
}

/// Eight vertices: the 5-cycle v1,v2,v3,v5,v4 with a tree hanging off v5
/// (v5 -> v6, v6 -> v7, v6 -> v8).
inline Graph five_cycle_with_tree()
{
    return Graph::build({"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"},
                        {{"e1", "v1", "v2"},
                         {"e2", "v2", "v3"},
                         {"e3", "v3", "v5"},
                         {"e4", "v5", "v4"},
                         {"e5", "v4", "v1"},
                         {"e6", "v5", "v6"},
                         {"e7", "v6", "v7"},
                         {"e8", "v6", "v8"}});
}

/// C_3 on v1..v3 with two pendant arcs v3 -> v4 and v3 -> v5.
inline Graph cycle3_with_fork()
{
    return Graph::build({"v1", "v2", "v3", "v4", "v5"},
                        {{"e1", "v1", "v2"},
                         {"e2", "v2", "v3"},
                         {"e3", "v3", "v1"},
                         {"e4", "v3", "v4"},
                         {"e5", "v3", "v5"}});
}

/// 2-connected block that is not a coherently directed cycle.
inline Graph triangle_dag()
{
    return Graph::build({"v1", "v2", "v3"},
                        {{"e1", "v1", "v2"}, {"e2", "v1", "v3"}, {"e3", "v2", "v3"}});
}

} // namespace fixtures

// ---------------------------------------------------------------------------
// Trial reports
// ---------------------------------------------------------------------------

struct ClaimFailure {
    std::string note;
    std::uint64_t replay_seed = 0;
    std::vector<std::string> inputs; // serialized graph/chain documents
};

struct ClaimResult {
    std::string id;
    std::string title;
    bool asserted = true; // experimental claims report findings without failing the suite
    long instances = 0;
    long failure_count = 0;
    std::vector<ClaimFailure> failures; // sampled details, capped by report_sample
    nlohmann::ordered_json info;        // claim-specific findings
    double wall_ms = 0;

    ClaimResult() = default;
    ClaimResult(std::string claim_id, std::string claim_title)
        : id(std::move(claim_id)), title(std::move(claim_title))
    {
    }
};

struct SuiteParams {
    std::uint64_t seed = 1;
    long total_quotient_graphs = 500;
    long index_random_graphs = 200;
    long chains = 200;
    long relabelings = 200;
    long iso_pairs = 2000;
    int identity_sweep_vertices = 5;
    int pair_sweep_vertices = 4;
    int universe_vertices = 6;
    int max_random_vertices = 8;
    int report_sample = 5;
};

struct TrialReport {
    SuiteParams params;
    std::vector<ClaimResult> claims;

    long asserted_failures() const
    {
        long total = 0;
        for (const auto& claim : claims)
            if (claim.asserted)
                total += claim.failure_count;
        return total;
    }

    nlohmann::ordered_json to_json(bool include_timings = false) const
    {
        nlohmann::ordered_json doc;
        doc["seed"] = params.seed;
        doc["params"] = {{"total_quotient_graphs", params.total_quotient_graphs},
                         {"index_random_graphs", params.index_random_graphs},
                         {"chains", params.chains},
                         {"relabelings", params.relabelings},
                         {"iso_pairs", params.iso_pairs},
                         {"identity_sweep_vertices", params.identity_sweep_vertices},
                         {"pair_sweep_vertices", params.pair_sweep_vertices},
                         {"universe_vertices", params.universe_vertices},
                         {"max_random_vertices", params.max_random_vertices}};
        doc["claims"] = nlohmann::ordered_json::array();
        for (const auto& claim : claims) {
            nlohmann::ordered_json jc;
            jc["id"] = claim.id;
            jc["title"] = claim.title;
            jc["asserted"] = claim.asserted;
            jc["instances"] = claim.instances;
            jc["failure_count"] = claim.failure_count;
            jc["failures"] = nlohmann::ordered_json::array();
            for (const auto& failure : claim.failures) {
                nlohmann::ordered_json jf;
                jf["note"] = failure.note;
                jf["replay_seed"] = failure.replay_seed;
                jf["inputs"] = failure.inputs;
                jc["failures"].push_back(jf);
            }
            if (!claim.info.is_null())
                jc["info"] = claim.info;
            if (include_timings)
                jc["wall_ms"] = claim.wall_ms;
            doc["claims"].push_back(jc);
        }
        doc["asserted_failures"] = asserted_failures();
        return doc;
    }
};

// ---------------------------------------------------------------------------
// Counterexample minimization: greedily delete edges, then vertices, while
// the failure predicate keeps holding.
// ---------------------------------------------------------------------------

inline Graph minimize_counterexample(Graph g, const std::function<bool(const Graph&)>& fails)
{
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            std::vector<Edge> edges = g.edges();
            edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
            Graph candidate = Graph::build(g.vertices(), std::move(edges));
            if (fails(candidate)) {
                g = std::move(candidate);
                shrunk = true;
                break;
            }
        }
    }
    shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            std::vector<std::string> vertices = g.vertices();
            std::string dropped = vertices[v];
            vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(v));
            std::vector<Edge> edges;
            for (const Edge& e : g.edges())
                if (e.src != dropped && e.dst != dropped)
                    edges.push_back(e);
            Graph candidate = Graph::build(std::move(vertices), std::move(edges));
            if (fails(candidate)) {
                g = std::move(candidate);
                shrunk = true;
                break;
            }
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Claims. One per acceptance check; ids are stable strings used in reports.
// ---------------------------------------------------------------------------

namespace detail {

inline void record_failure(ClaimResult& claim, const SuiteParams& params, std::string note,
                           std::uint64_t replay_seed, std::vector<std::string> inputs)
{
    ++claim.failure_count;
    if (static_cast<int>(claim.failures.size()) < params.report_sample)
        claim.failures.push_back({std::move(note), replay_seed, std::move(inputs)});
}

template <typename Fn>
inline void timed(ClaimResult& claim, Fn&& body)
{
    auto start = std::chrono::steady_clock::now();
    body();
    claim.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
}

// Exhaustive nonempty vertex subsets of g, as specs.
template <typename Fn>
inline void for_each_full_subgraph(const Graph& g, Fn&& fn)
{
    std::size_t n = g.vertex_count();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        FullSubgraphSpec spec;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1u)
                spec.vertex_set.push_back(g.vertices()[v]);
        fn(spec);
    }
}

// First vertex without a loop, if any: the anchor for a trivial full subgraph.
inline std::optional<std::string> loop_free_vertex(const Graph& g)
{
    std::vector<char> has_loop(g.vertex_count(), 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (g.edge_src_index(e) == g.edge_dst_index(e))
            has_loop[g.edge_src_index(e)] = 1;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!has_loop[v])
            return g.vertices()[v];
    return std::nullopt;
}

// Deterministic random nested chain over g, innermost spec first.
inline Chain random_chain(const Graph& g, Rng& rng)
{
    std::size_t depth = 1 + rng.below(4);
    std::vector<std::vector<std::string>> levels;
    std::vector<std::string> current = g.vertices();
    for (std::size_t d = 0; d < depth && !current.empty(); ++d) {
        std::vector<std::string> subset;
        for (const auto& name : current)
            if (rng.below(2))
                subset.push_back(name);
        if (subset.empty())
            subset.push_back(current[rng.below(current.size())]);
        levels.push_back(subset);
        current = subset;
    }
    Chain chain;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it)
        chain.specs.push_back(FullSubgraphSpec{*it});
    return chain;
}

inline std::string chain_doc(const Chain& chain)
{
    nlohmann::ordered_json doc;
    doc["chain"] = nlohmann::ordered_json::array();
    for (const auto& spec : chain.specs)
        doc["chain"].push_back(spec.vertex_set);
    return doc.dump() + "\n";
}

// Permutation-search isomorphism oracle, independent of the backtracking
// mapper in iso.hpp. Only for small graphs.
inline bool brute_force_isomorphic(const Graph& a, const Graph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::size_t n = a.vertex_count();
    auto mult = [](const Graph& g) {
        std::vector<std::vector<int>> m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            ++m[g.edge_src_index(e)][g.edge_dst_index(e)];
        return m;
    };
    auto ma = mult(a), mb = mult(b);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                ok = ma[i][j] == mb[perm[i]][perm[j]];
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n == 0;
}

} // namespace detail

using QuotientFn = std::function<QuotientResult(const Graph&, const Boundary&)>;

/// Criterion 1: the total boundary quotient of any finite directed graph is
/// the one-vertex graph with |E(G)| loops. The quotient implementation is
/// injectable so that the mutation test can verify this claim catches a
/// broken quotient.
inline ClaimResult claim_total_quotient_type(const SuiteParams& params, QuotientFn quotient_fn = {})
{
    if (!quotient_fn)
        quotient_fn = [](const Graph& g, const Boundary& b) { return boundary_quotient(g, b); };
    ClaimResult claim{"total-quotient-type",
                      "total boundary quotient is the |E|-loop one-vertex graph"};
    detail::timed(claim, [&] {
        Rng rng = Rng(params.seed).child("total-quotient");
        for (long t = 0; t < params.total_quotient_graphs; ++t) {
            Rng trial = rng.child(static_cast<std::uint64_t>(t));
            std::size_t cap = static_cast<std::size_t>(std::max(1, params.max_random_vertices));
            Graph g = (t % 2 == 0)
                          ? random_multigraph(cap, 16, trial)
                          : random_graph(RandomGraphKind::SimplicialConnected,
                                         1 + trial.below(cap), trial.next());
            ++claim.instances;
            auto fails = [&](const Graph& candidate) {
                if (candidate.vertex_count() == 0)
                    return false; // not in the population; minimization floor
                QuotientResult q =
                    quotient_fn(candidate, Boundary{candidate.vertices()});
                TypeTag tag = classify_type(q.graph);
                TypeTag expect = candidate.edge_count() == 0
                                     ? TypeTag::trivial()
                                     : TypeTag::loop_graph(candidate.edge_count());
                return !(tag == expect);
            };
            if (fails(g)) {
                Graph small = minimize_counterexample(g, fails);
                detail::record_failure(claim, params,
                                       "total quotient not of loop type L_" +
                                           std::to_string(small.edge_count()),
                                       trial.state, {emit_json_graph(small)});
            }
        }
    });
    return claim;
}

/// Criterion 2: the worked examples reproduce exactly (up to isomorphism
/// where the construction renames vertices).
inline ClaimResult claim_fixtures(const SuiteParams& params)
{
    ClaimResult claim{"fixtures", "worked examples reproduce"};
    detail::timed(claim, [&] {
        auto expect = [&](bool ok, const std::string& what) {
            ++claim.instances;
            if (!ok)
                detail::record_failure(claim, params, what, params.seed, {});
        };

        // two-vertex arrow, total boundary -> one loop
        {
            Graph g = fixtures::single_arrow();
            QuotientResult q = boundary_quotient(g, Boundary{g.vertices()});
            expect(classify_type(q.graph) == TypeTag::loop_graph(1), "arrow/total is not L_1");
        }
        // out-fork under {v1,v2}, {v1,v3} and the total boundary
        {
            Graph g = fixtures::fork_out();
            QuotientResult q12 = boundary_quotient(g, Boundary{{"v1", "v2"}});
            expect(q12.graph.vertices() == std::vector<std::string>{"b", "v3"} &&
                       q12.graph.edges() ==
                           std::vector<Edge>{{"e1", "b", "b"}, {"e2", "b", "v3"}},
                   "fork/{v1,v2} mismatch");
            QuotientResult q13 = boundary_quotient(g, Boundary{{"v1", "v3"}});
            expect(q13.graph.vertices() == std::vector<std::string>{"b", "v2"} &&
                       q13.graph.edges() ==
                           std::vector<Edge>{{"e1", "b", "v2"}, {"e2", "b", "b"}},
                   "fork/{v1,v3} mismatch");
            QuotientResult qt = boundary_quotient(g, Boundary{g.vertices()});
            expect(classify_type(qt.graph) == TypeTag::loop_graph(2), "fork/total is not L_2");
        }
        // C_3 total -> L_3
        {
            Graph g = fixtures::circulant(3);
            QuotientResult q = boundary_quotient(g, Boundary{g.vertices()});
            expect(classify_type(q.graph) == TypeTag::loop_graph(3), "C_3/total is not L_3");
        }
        // C_4 / {v1,v2} is the loop glued onto C_3
        {
            Graph q = boundary_quotient(fixtures::circulant(4), Boundary{{"v1", "v2"}}).graph;
            Graph glued = glue(fixtures::loop_graph(1), fixtures::circulant(3),
                               GlueSpec{"v", "v1", "g"});
            expect(are_isomorphic(q, glued).has_value(), "C_4/{v1,v2} is not L_1 # C_3");
        }
        // the 8-vertex example decomposes as (C5, T) glued at v5
        {
            Decomposition d = ct_decompose(fixtures::five_cycle_with_tree());
            bool ok = d.components.size() == 2 &&
                      d.components[0].tag == TypeTag::circulant(5) &&
                      d.components[0].spec.vertex_set ==
                          std::vector<std::string>{"v1", "v2", "v3", "v4", "v5"} &&
                      d.components[1].tag == TypeTag::tree() &&
                      d.components[1].spec.vertex_set ==
                          std::vector<std::string>{"v5", "v6", "v7", "v8"} &&
                      d.cut_vertices == std::vector<std::string>{"v5"};
            expect(ok, "8-vertex decomposition mismatch");
            expect(format_type_tuple(maximal_type(fixtures::five_cycle_with_tree())) ==
                       "(C5, T)",
                   "8-vertex maximal type mismatch");
        }
        // admissible boundaries of the three small trees, and the quotient
        // isomorphism between the two forks (which are not isomorphic)
        {
            expect(admissible_boundary(fixtures::path3()).vertex_set.empty(),
                   "path admissible boundary not empty");
            expect(admissible_boundary(fixtures::fork_out()).vertex_set ==
                       std::vector<std::string>{"v2", "v3"},
                   "out-fork admissible boundary mismatch");
            expect(admissible_boundary(fixtures::fork_in()).vertex_set ==
                       std::vector<std::string>{"v2", "v3"},
                   "in-fork admissible boundary mismatch");
            Graph q2 = admissible_quotient(fixtures::fork_out()).graph;
            Graph q3 = admissible_quotient(fixtures::fork_in()).graph;
            expect(are_isomorphic(q2, q3).has_value(), "fork quotients not isomorphic");
            expect(!are_isomorphic(fixtures::fork_out(), fixtures::fork_in()).has_value(),
                   "forks unexpectedly isomorphic");
        }
    });
    return claim;
}

/// Criteria 3 and 4 share the sweep population: every connected class up to
/// `identity_sweep_vertices`, plus seeded random connected graphs.
namespace detail {

template <typename Fn>
inline void identity_sweep(const SuiteParams& params, const EnumUniverse& universe, Fn&& fn)
{
    int max_n = std::min(params.identity_sweep_vertices, universe.max_vertices());
    for (int n = 1; n <= max_n; ++n)
        for (std::uint64_t bits : universe.reps(n)) {
            if (!EnumUniverse::connected(n, bits))
                continue;
            fn(EnumUniverse::graph_of(n, bits), 0);
        }
    Rng rng = Rng(params.seed).child("identity-random");
    for (long t = 0; t < params.index_random_graphs; ++t) {
        Rng trial = rng.child(static_cast<std::uint64_t>(t));
        std::size_t n = 1 + trial.below(static_cast<std::size_t>(params.max_random_vertices));
        fn(random_graph(RandomGraphKind::SimplicialConnected, n, trial.next()), trial.state);
    }
}

} // namespace detail

/// Criterion 3: Ind_G(H) agrees exactly with Ind_G(1)/Ind_H(1) for every
/// full subgraph, and the internal cross-check between size arithmetic and
/// quotient construction never trips.
inline ClaimResult claim_index_identity(const SuiteParams& params, const EnumUniverse& universe)
{
    ClaimResult claim{"index-identity", "Ind_G(H) = Ind_G(1)/Ind_H(1), exact exponents"};
    detail::timed(claim, [&] {
        detail::identity_sweep(params, universe, [&](const Graph& g, std::uint64_t replay) {
            auto g_anchor = detail::loop_free_vertex(g);
            detail::for_each_full_subgraph(g, [&](const FullSubgraphSpec& spec) {
                ++claim.instances;
                try {
                    LogIndex direct = ind_subgraph(g, spec);
                    Graph h = induced_full_subgraph(g, spec);
                    auto h_anchor = detail::loop_free_vertex(h);
                    if (!g_anchor || !h_anchor)
                        return; // no trivial full subgraph exists
                    LogIndex ind_g1 = ind_subgraph(g, FullSubgraphSpec{{*g_anchor}});
                    LogIndex ind_h1 = ind_subgraph(h, FullSubgraphSpec{{*h_anchor}});
                    bool ok = ind_g1.exponent() >= ind_h1.exponent() &&
                              direct == LogIndex::exp(ind_g1.exponent() - ind_h1.exponent());
                    if (!ok)
                        detail::record_failure(claim, params, "identity violated", replay,
                                               {emit_json_graph(g)});
                } catch (const GraphError& e) {
                    detail::record_failure(claim, params, e.what(), replay,
                                           {emit_json_graph(g)});
                }
            });
        });
    });
    return claim;
}

/// Criterion 4: Ind_G(H) = 1 iff H = G, and > 1 iff H is proper.
inline ClaimResult claim_index_corollaries(const SuiteParams& params, const EnumUniverse& universe)
{
    ClaimResult claim{"index-corollaries", "Ind_G(H) = 1 iff H = G; > 1 iff proper"};
    detail::timed(claim, [&] {
        detail::identity_sweep(params, universe, [&](const Graph& g, std::uint64_t replay) {
            detail::for_each_full_subgraph(g, [&](const FullSubgraphSpec& spec) {
                ++claim.instances;
                LogIndex value = ind_subgraph(g, spec);
                bool is_whole = spec.vertex_set.size() == g.vertex_count();
                bool unit = value == LogIndex::exp(0);
                bool greater = !value.is_zero() && !unit;
                if (unit != is_whole || greater != !is_whole)
                    detail::record_failure(claim, params, "corollary violated", replay,
                                           {emit_json_graph(g)});
            });
        });
    });
    return claim;
}

/// Criterion 5: chain rule and its telescoped product, exact.
inline ClaimResult claim_chain_rule(const SuiteParams& params)
{
    ClaimResult claim{"chain-rule", "Ind_G(K) = Ind_G(H) * Ind_H(K), telescoped"};
    detail::timed(claim, [&] {
        Rng rng = Rng(params.seed).child("chains");
        for (long t = 0; t < params.chains; ++t) {
            Rng trial = rng.child(static_cast<std::uint64_t>(t));
            std::size_t n = 1 + trial.below(static_cast<std::size_t>(params.max_random_vertices));
            Graph g = random_graph(RandomGraphKind::SimplicialConnected, n, trial.next());
            Chain chain = detail::random_chain(g, trial);
            ++claim.instances;
            ChainReport report = verify_chain(g, chain);
            if (!report.ok)
                detail::record_failure(claim, params, "chain product != direct index", trial.state,
                                       {emit_json_graph(g), detail::chain_doc(chain)});
        }
    });
    return claim;
}

/// Criterion 6: along the dual chain, each quotient embeds into the next and
/// the duality identity holds exactly. The embedding half fails on ordinary
/// chains (collapsing part of a cycle creates a shorter cycle that cannot be
/// an induced subgraph of the less-collapsed quotient), so this claim also
/// reports the two halves separately in `info`.
inline ClaimResult claim_dual_chain(const SuiteParams& params)
{
    ClaimResult claim{"dual-chain", "dual chain embeds stepwise with exact duality"};
    detail::timed(claim, [&] {
        long embedding_failures = 0;
        long duality_failures_given_embedding = 0;
        long steps = 0;
        Rng rng = Rng(params.seed).child("chains"); // same chains as the chain-rule claim
        for (long t = 0; t < params.chains; ++t) {
            Rng trial = rng.child(static_cast<std::uint64_t>(t));
            std::size_t n = 1 + trial.below(static_cast<std::size_t>(params.max_random_vertices));
            Graph g = random_graph(RandomGraphKind::SimplicialConnected, n, trial.next());
            Chain chain = detail::random_chain(g, trial);
            ++claim.instances;
            DualChainResult dual = dual_chain(g, chain);
            bool failed = false;
            for (const auto& check : dual.checks) {
                ++steps;
                if (!check.embedding_found) {
                    ++embedding_failures;
                    failed = true;
                } else if (!check.duality_ok) {
                    ++duality_failures_given_embedding;
                    failed = true;
                }
            }
            if (failed)
                detail::record_failure(claim, params, "dual-chain step without induced embedding",
                                       trial.state,
                                       {emit_json_graph(g), detail::chain_doc(chain)});
        }
        claim.info = {{"steps", steps},
                      {"embedding_failures", embedding_failures},
                      {"duality_failures_given_embedding", duality_failures_given_embedding}};
    });
    return claim;
}

/// Criterion 7: the index range of every swept graph of size <= 12 lies in
/// {e^(|G|-k) : k = 1..|G|}.
inline ClaimResult claim_range_theorem(const SuiteParams& params, const EnumUniverse& universe)
{
    ClaimResult claim{"range-theorem", "index range within {e^(|G|-k)}"};
    detail::timed(claim, [&] {
        auto check = [&](const Graph& g, std::uint64_t replay) {
            if (size(g) > kIndexRangeSizeLimit || g.vertex_count() == 0)
                return;
            ++claim.instances;
            for (const LogIndex& value : index_range(g)) {
                if (value.is_zero() || value.exponent() + 1 > size(g)) {
                    detail::record_failure(claim, params, "index outside the range bound", replay,
                                           {emit_json_graph(g)});
                    break;
                }
            }
        };
        for (int n = 1; n <= universe.max_vertices(); ++n)
            for (std::uint64_t bits : universe.reps(n)) {
                if (!EnumUniverse::connected(n, bits))
                    continue;
                check(EnumUniverse::graph_of(n, bits), 0);
            }
        Rng rng = Rng(params.seed).child("range-random");
        for (long t = 0; t < params.index_random_graphs; ++t) {
            Rng trial = rng.child(static_cast<std::uint64_t>(t));
            check(random_multigraph(6, 6, trial), trial.state);
        }
    });
    return claim;
}

/// Criterion 8: over class pairs of small connected graphs, the inter-graph
/// index is 1 in both directions exactly for isomorphic pairs.
inline ClaimResult claim_inter_graph_index(const SuiteParams& params, const EnumUniverse& universe)
{
    ClaimResult claim{"inter-graph-index", "Ind 1 both ways iff isomorphic"};
    detail::timed(claim, [&] {
        std::vector<Graph> classes;
        int max_n = std::min(params.pair_sweep_vertices, universe.max_vertices());
        for (int n = 1; n <= max_n; ++n)
            for (std::uint64_t bits : universe.reps(n))
                if (EnumUniverse::connected(n, bits))
                    classes.push_back(EnumUniverse::graph_of(n, bits));
        Rng rng = Rng(params.seed).child("inter-graph");
        for (std::size_t i = 0; i < classes.size(); ++i) {
            for (std::size_t j = i; j < classes.size(); ++j) {
                ++claim.instances;
                const Graph& a = classes[i];
                Graph b = classes[j];
                if (i == j)
                    b = random_relabel(b, rng).graph;
                LogIndex ab = ind_between(a, b);
                LogIndex ba = ind_between(b, a);
                bool unit_both = ab == LogIndex::exp(0) && ba == LogIndex::exp(0);
                if (unit_both != (i == j))
                    detail::record_failure(claim, params, "inter-graph index mismatch", rng.state,
                                           {emit_json_graph(a), emit_json_graph(b)});
            }
        }
    });
    return claim;
}

/// Criterion 9: indices and admissible quotients are invariant under random
/// relabelings.
inline ClaimResult claim_iso_invariance(const SuiteParams& params)
{
    ClaimResult claim{"iso-invariance", "indices and admissible quotients survive relabeling"};
    detail::timed(claim, [&] {
        Rng rng = Rng(params.seed).child("relabel");
        for (long t = 0; t < params.relabelings; ++t) {
            Rng trial = rng.child(static_cast<std::uint64_t>(t));
            std::size_t n = 1 + trial.below(static_cast<std::size_t>(params.max_random_vertices));
            Graph g = random_graph(RandomGraphKind::SimplicialConnected, n, trial.next());
            Relabeled sigma = random_relabel(g, trial);
            ++claim.instances;
            bool ok = true;
            detail::for_each_full_subgraph(g, [&](const FullSubgraphSpec& spec) {
                FullSubgraphSpec mapped;
                for (const auto& name : spec.vertex_set)
                    mapped.vertex_set.push_back(sigma.vertex_names.at(name));
                ok = ok && ind_subgraph(g, spec) == ind_subgraph(sigma.graph, mapped);
            });
            Graph q1 = admissible_quotient(g).graph;
            Graph q2 = admissible_quotient(sigma.graph).graph;
            ok = ok && are_isomorphic(q1, q2).has_value();
            if (!ok)
                detail::record_failure(claim, params, "relabeling changed an invariant",
                                       trial.state,
                                       {emit_json_graph(g), emit_json_graph(sigma.graph)});
        }
    });
    return claim;
}

/// Criterion 10: the isomorphism search agrees with brute-force permutation
/// search on sampled class pairs.
inline ClaimResult claim_oracle_equivalence(const SuiteParams& params,
                                            const EnumUniverse& universe)
{
    ClaimResult claim{"oracle-equivalence", "are_isomorphic matches permutation search"};
    detail::timed(claim, [&] {
        Rng rng = Rng(params.seed).child("oracle-pairs");
        int max_n = universe.max_vertices();
        for (long t = 0; t < params.iso_pairs; ++t) {
            Rng trial = rng.child(static_cast<std::uint64_t>(t));
            int n1 = 1 + static_cast<int>(trial.below(static_cast<std::uint64_t>(max_n)));
            const auto& reps1 = universe.reps(n1);
            Graph a = EnumUniverse::graph_of(n1, reps1[trial.below(reps1.size())]);
            Graph b;
            if (trial.below(2)) {
                b = random_relabel(a, trial).graph;
            } else {
                int n2 = 1 + static_cast<int>(trial.below(static_cast<std::uint64_t>(max_n)));
                const auto& reps2 = universe.reps(n2);
                b = EnumUniverse::graph_of(n2, reps2[trial.below(reps2.size())]);
            }
            ++claim.instances;
            bool fast = are_isomorphic(a, b).has_value();
            bool brute = detail::brute_force_isomorphic(a, b);
            if (fast != brute)
                detail::record_failure(claim, params, "search and oracle disagree", trial.state,
                                       {emit_json_graph(a), emit_json_graph(b)});
        }
    });
    return claim;
}

/// Criterion 11 (experimental, reported but never asserted):
/// (a) search for non-isomorphic connected mixed-maximal-type graphs with
///     isomorphic admissible quotients;
/// (b) catalog of connected simplicial digraphs that are not
///     CT-decomposable.
/// Both sweep the same enumeration pass.
inline ClaimResult claim_experimental_reports(const SuiteParams& params,
                                              const EnumUniverse& universe)
{
    ClaimResult claim{"experimental-reports",
                      "converse invariance search and CT-decomposability catalog"};
    claim.asserted = false;
    detail::timed(claim, [&] {
        long connected_count = 0, decomposable = 0, mixed = 0;
        std::vector<long> non_decomposable_by_n(universe.max_vertices() + 1, 0);
        std::vector<std::string> non_decomposable_samples;
        std::map<std::string, std::vector<std::string>> quotient_buckets; // canon -> graph canons
        std::map<std::string, std::string> doc_of;                        // graph canon -> doc
        long violating_pairs = 0;
        std::vector<std::string> violating_samples;

        for (int n = 1; n <= universe.max_vertices(); ++n) {
            for (std::uint64_t bits : universe.reps(n)) {
                if (!EnumUniverse::connected(n, bits))
                    continue;
                ++connected_count;
                ++claim.instances;
                Graph g = EnumUniverse::graph_of(n, bits);
                DecomposeOutcome outcome = try_ct_decompose(g);
                if (!outcome.ok) {
                    ++non_decomposable_by_n[n];
                    if (static_cast<int>(non_decomposable_samples.size()) < params.report_sample)
                        non_decomposable_samples.push_back(emit_json_graph(g));
                    continue;
                }
                ++decomposable;
                bool has_circulant = false, has_tree = false;
                for (const auto& tag : outcome.decomposition.maximal_type) {
                    has_circulant |= tag.kind == TypeTag::Circulant;
                    has_tree |= tag.kind == TypeTag::Tree;
                }
                if (!has_circulant || !has_tree)
                    continue;
                ++mixed;
                std::string graph_canon = canonical_form(g);
                std::string quotient_canon = canonical_form(admissible_quotient(g).graph);
                auto& bucket = quotient_buckets[quotient_canon];
                for (const auto& other : bucket) {
                    if (other != graph_canon) {
                        ++violating_pairs;
                        if (static_cast<int>(violating_samples.size()) < params.report_sample) {
                            violating_samples.push_back(doc_of[other]);
                            violating_samples.push_back(emit_json_graph(g));
                        }
                    }
                }
                bucket.push_back(graph_canon);
                doc_of.emplace(graph_canon, emit_json_graph(g));
            }
        }

        nlohmann::ordered_json catalog;
        for (int n = 1; n <= universe.max_vertices(); ++n)
            catalog["n" + std::to_string(n)] = non_decomposable_by_n[n];
        claim.info = {{"connected_classes", connected_count},
                      {"decomposable", decomposable},
                      {"mixed_maximal", mixed},
                      {"converse_violating_pairs", violating_pairs},
                      {"converse_violation_samples", violating_samples},
                      {"not_ct_decomposable_by_vertices", catalog},
                      {"not_ct_decomposable_samples", non_decomposable_samples}};
    });
    return claim;
}

// ---------------------------------------------------------------------------
// Suite runners
// ---------------------------------------------------------------------------

inline TrialReport run_suite(const SuiteParams& params)
{
    TrialReport report;
    report.params = params;
    EnumUniverse universe = EnumUniverse::build(params.universe_vertices);
    report.claims.push_back(claim_total_quotient_type(params));
    report.claims.push_back(claim_fixtures(params));
    report.claims.push_back(claim_index_identity(params, universe));
    report.claims.push_back(claim_index_corollaries(params, universe));
    report.claims.push_back(claim_chain_rule(params));
    report.claims.push_back(claim_dual_chain(params));
    report.claims.push_back(claim_range_theorem(params, universe));
    report.claims.push_back(claim_inter_graph_index(params, universe));
    report.claims.push_back(claim_iso_invariance(params));
    report.claims.push_back(claim_oracle_equivalence(params, universe));
    report.claims.push_back(claim_experimental_reports(params, universe));
    return report;
}

/// Parameter mapping for the CLI: `trials` is the instance count for every
/// randomized claim, `max_vertices` caps both random graph sizes and the
/// enumeration sweeps.
inline SuiteParams verify_params(std::uint64_t seed, long trials, int max_vertices)
{
    SuiteParams params;
    params.seed = seed;
    params.total_quotient_graphs = trials;
    params.index_random_graphs = trials;
    params.chains = trials;
    params.relabelings = trials;
    params.iso_pairs = trials;
    params.max_random_vertices = std::max(1, max_vertices);
    params.identity_sweep_vertices = std::min(5, max_vertices);
    params.pair_sweep_vertices = std::min(4, max_vertices);
    params.universe_vertices = std::max(1, std::min(6, max_vertices));
    return params;
}

inline TrialReport run_suite(std::uint64_t seed, long trials, int max_vertices)
{
    return run_suite(verify_params(seed, trials, max_vertices));
}

} // namespace gq
