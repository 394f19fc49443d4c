#include <catch2/catch.hpp>

#include <functional>
#include <map>
#include <set>

#include "gq/enumerate.hpp"
#include "gq/iso.hpp"
#include "gq/random.hpp"
#include "gq/verify.hpp"
#include "test_util.hpp"

using namespace gq;

namespace {

// Checks that a mapping is a genuine structure-preserving injection.
void check_mapping_valid(const Graph& g1, const Graph& g2, const GraphMapping& m,
                         bool bijective)
{
    REQUIRE(m.vertex_map.size() == g1.vertex_count());
    REQUIRE(m.edge_map.size() == g1.edge_count());
    std::set<std::string> vertex_images, edge_images;
    for (const auto& [from, to] : m.vertex_map) {
        CHECK(g2.has_vertex(to));
        vertex_images.insert(to);
    }
    CHECK(vertex_images.size() == g1.vertex_count()); // injective
    std::map<std::string, Edge> g2_edges;
    for (const Edge& e : g2.edges())
        g2_edges[e.id] = e;
    for (const Edge& e : g1.edges()) {
        REQUIRE(m.edge_map.count(e.id));
        const Edge& image = g2_edges.at(m.edge_map.at(e.id));
        CHECK(image.src == m.vertex_map.at(e.src));
        CHECK(image.dst == m.vertex_map.at(e.dst));
        edge_images.insert(image.id);
    }
    CHECK(edge_images.size() == g1.edge_count());
    if (bijective) {
        CHECK(g1.vertex_count() == g2.vertex_count());
        CHECK(g1.edge_count() == g2.edge_count());
    }
}

// Exhaustive injective-map oracle for induced embeddings: try every
// assignment of pattern vertices to distinct host vertices and demand exact
// arc multiplicities on every mapped pair.
bool brute_induced_embedding(const Graph& pattern, const Graph& host)
{
    std::size_t np = pattern.vertex_count(), nh = host.vertex_count();
    if (np > nh)
        return false;
    auto mult = [](const Graph& g) {
        std::vector<std::vector<int>> m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            ++m[g.edge_src_index(e)][g.edge_dst_index(e)];
        return m;
    };
    auto mp = mult(pattern), mh = mult(host);
    std::vector<std::size_t> image(np, 0);
    std::vector<char> used(nh, 0);
    std::function<bool(std::size_t)> place = [&](std::size_t u) -> bool {
        if (u == np) {
            for (std::size_t i = 0; i < np; ++i)
                for (std::size_t j = 0; j < np; ++j)
                    if (mp[i][j] != mh[image[i]][image[j]])
                        return false;
            return true;
        }
        for (std::size_t w = 0; w < nh; ++w) {
            if (used[w])
                continue;
            image[u] = w;
            used[w] = 1;
            if (place(u + 1))
                return true;
            used[w] = 0;
        }
        return false;
    };
    return place(0);
}

bool brute_iso(const Graph& a, const Graph& b)
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

} // namespace

TEST_CASE("isomorphism fixtures")
{
    Rng rng(83);
    Graph c3 = fixtures::circulant(3);
    auto mapping = are_isomorphic(c3, random_relabel(c3, rng).graph);
    REQUIRE(mapping.has_value());

    CHECK(!are_isomorphic(fixtures::circulant(3), fixtures::circulant(4)).has_value());
    CHECK(!are_isomorphic(fixtures::fork_out(), fixtures::fork_in()).has_value());

    // multiplicities matter: a double edge is not a 2-cycle
    Graph doubled = build_graph({"v1", "v2"}, {{"e1", "v1", "v2"}, {"e2", "v1", "v2"}});
    CHECK(!are_isomorphic(doubled, fixtures::circulant(2)).has_value());

    // loop graphs compare by loop count
    CHECK(are_isomorphic(fixtures::loop_graph(2), fixtures::loop_graph(2)).has_value());
    CHECK(!are_isomorphic(fixtures::loop_graph(2), fixtures::loop_graph(3)).has_value());
}

TEST_CASE("returned mappings are valid and deterministic")
{
    Rng rng(89);
    for (int t = 0; t < 30; ++t) {
        Rng trial = rng.child(static_cast<std::uint64_t>(t));
        Graph g = random_multigraph(7, 12, trial);
        Graph sigma = random_relabel(g, trial).graph;
        auto first = are_isomorphic(g, sigma);
        REQUIRE(first.has_value());
        check_mapping_valid(g, sigma, *first, true);
        auto second = are_isomorphic(g, sigma);
        REQUIRE(second.has_value());
        CHECK(first->vertex_map == second->vertex_map);
        CHECK(first->edge_map == second->edge_map);
    }
}

TEST_CASE("canonical form laws")
{
    Rng rng(97);
    for (int t = 0; t < 30; ++t) {
        Rng trial = rng.child(static_cast<std::uint64_t>(t));
        Graph g = random_multigraph(8, 12, trial);
        CHECK(canonical_form(g) == canonical_form(random_relabel(g, trial).graph));
    }
    CHECK(canonical_form(fixtures::circulant(3)) != canonical_form(fixtures::path3()));
    CHECK(canonical_form(fixtures::trivial_graph()) == "1:");
}

TEST_CASE("canonical form handles large automorphism groups")
{
    Rng rng(149);
    // edgeless and complete graphs: every permutation is an automorphism
    std::vector<std::string> names;
    for (int i = 1; i <= 12; ++i)
        names.push_back("v" + std::to_string(i));
    Graph edgeless = build_graph(names, {});
    CHECK(canonical_form(edgeless) == canonical_form(random_relabel(edgeless, rng).graph));

    std::vector<Edge> all_arcs;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (i != j)
                all_arcs.push_back(Edge{"e" + std::to_string(all_arcs.size() + 1), names[i],
                                        names[j]});
    Graph complete = build_graph({names.begin(), names.begin() + 8}, all_arcs);
    CHECK(canonical_form(complete) == canonical_form(random_relabel(complete, rng).graph));

    // unions of identical cycles: automorphisms swap whole components
    auto two_cycles = [](std::size_t a, std::size_t b) {
        Graph ga = fixtures::circulant(a);
        std::vector<std::string> verts = ga.vertices();
        std::vector<Edge> edges = ga.edges();
        Graph gb = fixtures::circulant(b);
        for (const auto& v : gb.vertices())
            verts.push_back("w" + v);
        for (const Edge& e : gb.edges())
            edges.push_back(Edge{"f" + e.id, "w" + e.src, "w" + e.dst});
        return build_graph(verts, edges);
    };
    Graph c33 = two_cycles(3, 3);
    CHECK(canonical_form(c33) == canonical_form(random_relabel(c33, rng).graph));
    CHECK(canonical_form(two_cycles(3, 4)) == canonical_form(two_cycles(4, 3)));
    CHECK(canonical_form(c33) != canonical_form(two_cycles(3, 4)));
    CHECK(canonical_form(two_cycles(2, 4)) != canonical_form(two_cycles(3, 3)));
}

TEST_CASE("canonical equality tracks isomorphism exactly")
{
    EnumUniverse u = EnumUniverse::build(4);
    std::vector<Graph> graphs;
    u.for_each([&](int n, std::uint64_t bits) {
        if (n <= 3 || bits % 17 == 0) // all small classes plus a deterministic 4-vertex sample
            graphs.push_back(EnumUniverse::graph_of(n, bits));
    });
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i; j < graphs.size(); ++j) {
            bool canon_equal = canonical_form(graphs[i]) == canonical_form(graphs[j]);
            bool iso = are_isomorphic(graphs[i], graphs[j]).has_value();
            CHECK(canon_equal == iso);
        }
}

TEST_CASE("isomorphism search agrees with brute force on small graphs")
{
    Rng rng(101);
    EnumUniverse u = EnumUniverse::build(4);
    std::vector<std::pair<int, std::uint64_t>> reps;
    u.for_each([&](int n, std::uint64_t bits) { reps.emplace_back(n, bits); });
    for (int t = 0; t < 400; ++t) {
        Rng trial = rng.child(static_cast<std::uint64_t>(t));
        auto [n1, b1] = reps[trial.below(reps.size())];
        Graph a = EnumUniverse::graph_of(n1, b1);
        Graph b;
        if (trial.below(2)) {
            b = random_relabel(a, trial).graph;
        } else {
            auto [n2, b2] = reps[trial.below(reps.size())];
            b = EnumUniverse::graph_of(n2, b2);
        }
        CHECK(are_isomorphic(a, b).has_value() == brute_iso(a, b));
    }
}

TEST_CASE("induced embedding fixtures")
{
    Graph c4 = fixtures::circulant(4);
    SECTION("a single arrow embeds into C_4")
    {
        auto m = find_induced_embedding(fixtures::single_arrow(), c4);
        REQUIRE(m.has_value());
        check_mapping_valid(fixtures::single_arrow(), c4, *m, false);
    }
    SECTION("a parallel pair does not")
    {
        Graph doubled = build_graph({"v1", "v2"}, {{"e1", "v1", "v2"}, {"e2", "v1", "v2"}});
        CHECK(!find_induced_embedding(doubled, c4).has_value());
    }
    SECTION("two isolated vertices embed onto a nonadjacent pair")
    {
        Graph pair = build_graph({"a", "b"}, {});
        auto m = find_induced_embedding(pair, c4);
        REQUIRE(m.has_value());
        // the image must be one of the two nonadjacent pairs of C_4
        std::set<std::string> image{m->vertex_map.at("a"), m->vertex_map.at("b")};
        bool nonadjacent = image == std::set<std::string>{"v1", "v3"} ||
                           image == std::set<std::string>{"v2", "v4"};
        CHECK(nonadjacent);
    }
    SECTION("exhaustive pair enumeration is the oracle for the pair case")
    {
        Graph pair = build_graph({"a", "b"}, {});
        long induced_empty_pairs = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                Graph sub = induced_full_subgraph(
                    c4, {{c4.vertices()[i], c4.vertices()[j]}});
                if (sub.edge_count() == 0)
                    ++induced_empty_pairs;
            }
        CHECK(induced_empty_pairs == 2);
        CHECK(find_induced_embedding(pair, c4).has_value() == (induced_empty_pairs > 0));
    }
    SECTION("no directed 3-cycle inside a tree")
    {
        CHECK(!find_induced_embedding(fixtures::circulant(3), fixtures::fork_out()).has_value());
    }
}

TEST_CASE("embedding search agrees with the exhaustive injection oracle")
{
    Rng rng(151);
    EnumUniverse u = EnumUniverse::build(4);
    std::vector<std::pair<int, std::uint64_t>> reps;
    u.for_each([&](int n, std::uint64_t bits) { reps.emplace_back(n, bits); });
    for (int t = 0; t < 300; ++t) {
        Rng trial = rng.child(static_cast<std::uint64_t>(t));
        auto [np, bp] = reps[trial.below(reps.size())];
        auto [nh, bh] = reps[trial.below(reps.size())];
        Graph pattern = EnumUniverse::graph_of(np, bp);
        Graph host = EnumUniverse::graph_of(nh, bh);
        bool fast = find_induced_embedding(pattern, host).has_value();
        CHECK(fast == brute_induced_embedding(pattern, host));
    }
    // a few multigraph pairs: loops and parallel edges must match exactly
    for (int t = 0; t < 60; ++t) {
        Rng trial = rng.child(1000 + static_cast<std::uint64_t>(t));
        Graph pattern = random_multigraph(3, 4, trial);
        Graph host = random_multigraph(5, 8, trial);
        CHECK(find_induced_embedding(pattern, host).has_value() ==
              brute_induced_embedding(pattern, host));
    }
}

TEST_CASE("every graph embeds into itself")
{
    Rng rng(103);
    for (int t = 0; t < 20; ++t) {
        Rng trial = rng.child(static_cast<std::uint64_t>(t));
        Graph g = random_multigraph(8, 12, trial);
        auto m = find_induced_embedding(g, g);
        REQUIRE(m.has_value());
        check_mapping_valid(g, g, *m, false);
    }
}

TEST_CASE("embeddings compose")
{
    Rng rng(107);
    for (int t = 0; t < 20; ++t) {
        Rng trial = rng.child(static_cast<std::uint64_t>(t));
        Graph g3 = random_multigraph(8, 10, trial);
        FullSubgraphSpec spec2;
        for (const auto& v : g3.vertices())
            if (trial.below(3) != 0)
                spec2.vertex_set.push_back(v);
        if (spec2.vertex_set.empty())
            spec2.vertex_set.push_back(g3.vertices()[0]);
        Graph g2 = induced_full_subgraph(g3, spec2);
        FullSubgraphSpec spec1;
        for (const auto& v : g2.vertices())
            if (trial.below(2))
                spec1.vertex_set.push_back(v);
        if (spec1.vertex_set.empty())
            spec1.vertex_set.push_back(g2.vertices()[0]);
        Graph g1 = induced_full_subgraph(g2, spec1);

        auto e12 = find_induced_embedding(g1, g2);
        auto e23 = find_induced_embedding(g2, g3);
        REQUIRE(e12.has_value());
        REQUIRE(e23.has_value());
        GraphMapping composed;
        for (const auto& [from, mid] : e12->vertex_map)
            composed.vertex_map[from] = e23->vertex_map.at(mid);
        for (const auto& [from, mid] : e12->edge_map)
            composed.edge_map[from] = e23->edge_map.at(mid);
        check_mapping_valid(g1, g3, composed, false);
    }
}

TEST_CASE("size limits")
{
    std::vector<std::string> names;
    for (int i = 0; i < 13; ++i)
        names.push_back("v" + std::to_string(i));
    Graph big = build_graph(names, {});
    CHECK(thrown_kind([&] { are_isomorphic(big, big); }) == ErrorKind::SizeLimit);
    CHECK(thrown_kind([&] { canonical_form(big); }) == ErrorKind::SizeLimit);
    CHECK(thrown_kind([&] { find_induced_embedding(big, big); }) == ErrorKind::SizeLimit);
    CHECK(are_isomorphic(big, big, 16).has_value()); // raised limit
}
