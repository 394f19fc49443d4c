#include <catch2/catch.hpp>

#include "gq/io.hpp"
#include "gq/random.hpp"
#include "gq/verify.hpp"
#include "test_util.hpp"

using namespace gq;

TEST_CASE("json graph parsing")
{
    Graph g = parse_json_graph(
        R"({"vertices":["v1","v2"],"edges":[{"id":"e","src":"v1","dst":"v2"}]})");
    CHECK(g.vertices() == std::vector<std::string>{"v1", "v2"});
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edges()[0] == Edge{"e", "v1", "v2"});

    CHECK(parse_json_graph(R"({"vertices":["v"],"edges":[]})") == fixtures::trivial_graph());

    CHECK(thrown_kind([] { parse_json_graph(R"({"vertices":["v1","v1"],"edges":[]})"); }) ==
          ErrorKind::DuplicateVertex);
    CHECK(thrown_kind([] { parse_json_graph("{"); }) == ErrorKind::SyntaxError);
    CHECK(thrown_kind([] { parse_json_graph(R"({"vertices":[]})"); }) == ErrorKind::SchemaError);
    CHECK(thrown_kind([] { parse_json_graph(R"([1, 2])"); }) == ErrorKind::SchemaError);
    CHECK(thrown_kind([] { parse_json_graph(R"({"vertices":[3],"edges":[]})"); }) ==
          ErrorKind::SchemaError);
    CHECK(thrown_kind([] {
              parse_json_graph(R"({"vertices":["v"],"edges":[{"id":"e","src":"v"}]})");
          }) == ErrorKind::SchemaError);
}

TEST_CASE("json emission is canonical")
{
    CHECK(emit_json_graph(fixtures::trivial_graph()) ==
          "{\n  \"vertices\": [\"v\"],\n  \"edges\": []\n}\n");
    CHECK(emit_json_graph(fixtures::single_arrow()) ==
          "{\n"
          "  \"vertices\": [\"v1\", \"v2\"],\n"
          "  \"edges\": [\n"
          "    {\"id\": \"e\", \"src\": \"v1\", \"dst\": \"v2\"}\n"
          "  ]\n"
          "}\n");
}

TEST_CASE("json round trips both ways")
{
    Graph c4 = fixtures::circulant(4);
    CHECK(parse_json_graph(emit_json_graph(c4)) == c4);
    std::string canonical = emit_json_graph(fixtures::five_cycle_with_tree());
    CHECK(emit_json_graph(parse_json_graph(canonical)) == canonical);
}

TEST_CASE("round trips hold for random graphs in both formats")
{
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        Rng trial = rng.child(static_cast<std::uint64_t>(t));
        Graph g = random_multigraph(10, 16, trial);
        CHECK(parse_json_graph(emit_json_graph(g)) == g);
        CHECK(parse_dot_subset(emit_dot(g)) == g);
        std::string doc = emit_json_graph(g);
        CHECK(emit_json_graph(parse_json_graph(doc)) == doc);
        std::string dot = emit_dot(g);
        CHECK(emit_dot(parse_dot_subset(dot)) == dot);
    }
}

TEST_CASE("dot parsing")
{
    Graph g = parse_dot_subset(R"(digraph { v1 -> v2 [id="e"]; })");
    CHECK(g.vertices() == std::vector<std::string>{"v1", "v2"});
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edges()[0] == Edge{"e", "v1", "v2"});

    CHECK(parse_dot_subset("digraph { v; }") == fixtures::trivial_graph());
    CHECK(parse_dot_subset("digraph named { a -> b; }").edges()[0].id == "e1");
    CHECK(parse_dot_subset("digraph{v1->v2;}").vertex_count() == 2); // whitespace-free

    SECTION("auto ids skip explicit collisions")
    {
        Graph h = parse_dot_subset(R"(digraph { a -> b; b -> c [id="e1"]; c -> a; })");
        REQUIRE(h.edge_count() == 3);
        CHECK(h.edges()[0].id == "e2"); // e1 is taken by the second statement
        CHECK(h.edges()[1].id == "e1");
        CHECK(h.edges()[2].id == "e3");
    }

    SECTION("syntax errors carry position")
    {
        try {
            parse_dot_subset("digraph {\n  v1 -> ;\n}");
            FAIL("expected SyntaxError");
        } catch (const GraphError& e) {
            CHECK(e.kind() == ErrorKind::SyntaxError);
            CHECK(e.line() == 2);
        }
        CHECK(thrown_kind([] { parse_dot_subset("graph { v; }"); }) == ErrorKind::SyntaxError);
        CHECK(thrown_kind([] { parse_dot_subset("digraph { v1 -> v2 [color=\"red\"]; }"); }) ==
              ErrorKind::SyntaxError);
        CHECK(thrown_kind([] { parse_dot_subset("digraph { v; } trailing"); }) ==
              ErrorKind::SyntaxError);
    }

    SECTION("parsers never construct an invalid graph")
    {
        CHECK(thrown_kind([] {
                  parse_dot_subset(R"(digraph { a -> b [id="e"]; b -> a [id="e"]; })");
              }) == ErrorKind::DuplicateEdgeId);
        CHECK(thrown_kind([] {
                  parse_json_graph(
                      R"({"vertices":["v1"],"edges":[{"id":"e","src":"v1","dst":"v9"}]})");
              }) == ErrorKind::DanglingEndpoint);
    }
}

TEST_CASE("dot emission")
{
    CHECK(emit_dot(fixtures::trivial_graph()) == "digraph {\n  v;\n}\n");
    CHECK(emit_dot(fixtures::loop_graph(1)) == "digraph {\n  v;\n  v -> v [id=\"l1\"];\n}\n");
    Graph c3 = fixtures::circulant(3);
    CHECK(parse_dot_subset(emit_dot(c3)) == c3);
}

TEST_CASE("boundary and chain documents")
{
    auto boundary = parse_boundary_doc(R"({"boundary":["v1","v2"]})");
    CHECK(boundary == std::vector<std::string>{"v1", "v2"});

    auto chain = parse_chain_doc(R"({"chain":[["v1"],["v1","v2"]]})");
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].vertex_set == std::vector<std::string>{"v1"});
    CHECK(chain[1].vertex_set == std::vector<std::string>{"v1", "v2"});

    CHECK(thrown_kind([] { parse_boundary_doc(R"({"nope":[]})"); }) == ErrorKind::SchemaError);
    CHECK(thrown_kind([] { parse_chain_doc(R"({"chain":["v1"]})"); }) == ErrorKind::SchemaError);
}
