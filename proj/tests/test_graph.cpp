#include <catch2/catch.hpp>

#include "gq/graph.hpp"
#include "gq/random.hpp"
#include "gq/verify.hpp"
#include "test_util.hpp"

using namespace gq;

namespace {

// Reachability oracle by transitive closure, independent of the BFS path.
bool closure_reaches(const Graph& g, std::size_t u, std::size_t v)
{
    std::size_t n = g.vertex_count();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        reach[g.edge_src_index(e)][g.edge_dst_index(e)] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j])
                    reach[i][j] = 1;
    return reach[u][v];
}

} // namespace

TEST_CASE("build_graph validates its input")
{
    Graph g = build_graph({"v1", "v2"}, {{"e", "v1", "v2"}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);

    Graph trivial = build_graph({"v"}, {});
    CHECK(size(trivial) == 1);

    CHECK(thrown_kind([] { build_graph({"v1"}, {{"e", "v1", "v2"}}); }) ==
          ErrorKind::DanglingEndpoint);
    CHECK(thrown_kind([] { build_graph({"v1", "v1"}, {}); }) == ErrorKind::DuplicateVertex);
    CHECK(thrown_kind([] {
              build_graph({"v1", "v2"}, {{"e", "v1", "v2"}, {"e", "v2", "v1"}});
          }) == ErrorKind::DuplicateEdgeId);
    CHECK(thrown_kind([] { build_graph({"has space"}, {}); }) == ErrorKind::InvalidName);
    CHECK(thrown_kind([] { build_graph({"a,b"}, {}); }) == ErrorKind::InvalidName);
}

TEST_CASE("size counts vertices plus edges")
{
    CHECK(size(fixtures::trivial_graph()) == 1);
    CHECK(size(fixtures::circulant(4)) == 8);
    CHECK(size(fixtures::loop_graph(1)) == 2);
}

TEST_CASE("induced full subgraph keeps internal edges only")
{
    Graph c4 = fixtures::circulant(4);
    Graph sub = induced_full_subgraph(c4, {{"v3", "v4"}});
    CHECK(sub.vertices() == std::vector<std::string>{"v3", "v4"});
    REQUIRE(sub.edge_count() == 1);
    CHECK(sub.edges()[0] == Edge{"e3", "v3", "v4"});

    CHECK(induced_full_subgraph(c4, {c4.vertices()}) == c4);
    CHECK(induced_full_subgraph(c4, {{"v2"}}).edge_count() == 0);
    CHECK(thrown_kind([&] { induced_full_subgraph(c4, {{"nope"}}); }) ==
          ErrorKind::UnknownVertex);
}

TEST_CASE("induced full subgraph is idempotent")
{
    Rng rng(7);
    for (int t = 0; t < 40; ++t) {
        Rng trial = rng.child(static_cast<std::uint64_t>(t));
        Graph g = random_multigraph(8, 12, trial);
        FullSubgraphSpec spec;
        for (const auto& v : g.vertices())
            if (trial.below(2))
                spec.vertex_set.push_back(v);
        if (spec.vertex_set.empty())
            spec.vertex_set.push_back(g.vertices()[0]);
        Graph once = induced_full_subgraph(g, spec);
        Graph twice = induced_full_subgraph(once, spec);
        CHECK(once == twice);
    }
}

TEST_CASE("has_directed_path fixtures")
{
    CHECK(has_directed_path(fixtures::circulant(3), "v1", "v3"));
    CHECK(has_directed_path(fixtures::circulant(3), "v1", "v1")); // around the cycle
    Graph isolated = build_graph({"a", "b"}, {});
    CHECK(!has_directed_path(isolated, "a", "b"));
    CHECK(!has_directed_path(fixtures::fork_out(), "v2", "v3"));
    CHECK_THROWS_AS(has_directed_path(isolated, "a", "zz"), GraphError);
}

TEST_CASE("has_directed_path agrees with a transitive-closure oracle")
{
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        Rng trial = rng.child(static_cast<std::uint64_t>(t));
        Graph g = random_multigraph(8, 14, trial);
        for (std::size_t u = 0; u < g.vertex_count(); ++u)
            for (std::size_t v = 0; v < g.vertex_count(); ++v)
                CHECK(has_directed_path(g, g.vertices()[u], g.vertices()[v]) ==
                      closure_reaches(g, u, v));
    }
}

TEST_CASE("weak components")
{
    CHECK(weak_components(fixtures::circulant(4)).size() == 1);
    Graph two = build_graph({"v1", "v2", "v3", "w"},
                            {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}, {"e3", "v3", "v1"}});
    auto classes = weak_components(two);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0] == std::vector<std::string>{"v1", "v2", "v3"});
    CHECK(classes[1] == std::vector<std::string>{"w"});
    CHECK(weak_components(build_graph({}, {})).empty());
}

TEST_CASE("is_simplicial")
{
    CHECK(is_simplicial(fixtures::circulant(5)));
    CHECK(!is_simplicial(fixtures::loop_graph(1)));
    CHECK(!is_simplicial(build_graph({"v1", "v2"}, {{"e1", "v1", "v2"}, {"e2", "v1", "v2"}})));
    // an antiparallel pair is fine
    CHECK(is_simplicial(build_graph({"v1", "v2"}, {{"e1", "v1", "v2"}, {"e2", "v2", "v1"}})));
}

TEST_CASE("simpliciality is hereditary under induced subgraphs")
{
    Rng rng(13);
    for (int t = 0; t < 40; ++t) {
        Rng trial = rng.child(static_cast<std::uint64_t>(t));
        Graph g = random_graph(RandomGraphKind::SimplicialConnected, 1 + trial.below(8),
                               trial.next());
        REQUIRE(is_simplicial(g));
        FullSubgraphSpec spec;
        for (const auto& v : g.vertices())
            if (trial.below(2))
                spec.vertex_set.push_back(v);
        if (spec.vertex_set.empty())
            spec.vertex_set.push_back(g.vertices()[0]);
        CHECK(is_simplicial(induced_full_subgraph(g, spec)));
    }
}

TEST_CASE("is_connected")
{
    CHECK(is_connected(fixtures::trivial_graph()));
    CHECK(!is_connected(build_graph({"a", "b"}, {})));
    CHECK(is_connected(fixtures::five_cycle_with_tree()));
    CHECK(!is_connected(build_graph({}, {})));
}
