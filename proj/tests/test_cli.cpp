#include <catch2/catch.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gq/cli.hpp"
#include "gq/verify.hpp"

using namespace gq;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path data_dir()
{
    // tests run from the build tree; data lives next to the sources
    return std::filesystem::path(GQ_TEST_DATA_DIR);
}

std::string data(const std::string& name)
{
    return (data_dir() / name).string();
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name, const std::string& contents = "")
        : path(std::filesystem::temp_directory_path() / name)
    {
        if (!contents.empty()) {
            std::ofstream f(path);
            f << contents;
        }
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("cli quotient")
{
    SECTION("total boundary of C_3 prints the three-loop graph")
    {
        CliRun r = run_cli({"quotient", "--graph", data("c3.json"), "--total"});
        REQUIRE(r.code == 0);
        CHECK(r.out == "{\n"
                       "  \"vertices\": [\"b\"],\n"
                       "  \"edges\": [\n"
                       "    {\"id\": \"e1\", \"src\": \"b\", \"dst\": \"b\"},\n"
                       "    {\"id\": \"e2\", \"src\": \"b\", \"dst\": \"b\"},\n"
                       "    {\"id\": \"e3\", \"src\": \"b\", \"dst\": \"b\"}\n"
                       "  ]\n"
                       "}\n");
    }
    SECTION("explicit boundary")
    {
        CliRun r = run_cli({"quotient", "--graph", data("c4.json"), "--boundary", "v1,v2"});
        REQUIRE(r.code == 0);
        Graph g = parse_json_graph(r.out);
        CHECK(g.vertices() == std::vector<std::string>{"b", "v3", "v4"});
    }
    SECTION("empty boundary must be requested explicitly")
    {
        CliRun r = run_cli({"quotient", "--graph", data("c3.json"), "--boundary", ""});
        REQUIRE(r.code == 0);
        CHECK(parse_json_graph(r.out) == parse_json_graph(
                                             cli::detail::read_file(data("c3.json"))));
    }
    SECTION("boundary and total are mutually exclusive")
    {
        CliRun r = run_cli(
            {"quotient", "--graph", data("c3.json"), "--boundary", "v1", "--total"});
        CHECK(r.code == 2);
        CliRun r2 = run_cli({"quotient", "--graph", data("c3.json")});
        CHECK(r2.code == 2);
    }
    SECTION("outputs are byte-deterministic")
    {
        CliRun a = run_cli({"quotient", "--graph", data("c4.json"), "--total"});
        CliRun b = run_cli({"quotient", "--graph", data("c4.json"), "--total"});
        CHECK(a.out == b.out);
    }
}

TEST_CASE("cli subquotient and glue")
{
    CliRun r = run_cli({"subquotient", "--graph", data("c4.json"), "--subgraph", "v3,v4"});
    REQUIRE(r.code == 0);
    Graph q = parse_json_graph(r.out);
    CHECK(q.vertex_count() == 3);
    CHECK(q.edge_count() == 3);

    TempFile loop_file("gq_loop.json", emit_json_graph(fixtures::loop_graph(1)));
    CliRun g = run_cli({"glue", "--left", loop_file.path.string(), "--right", data("c3.json"),
                        "--at", "v=v1", "--name", "g"});
    REQUIRE(g.code == 0);
    Graph glued = parse_json_graph(g.out);
    CHECK(glued.vertex_count() == 3);
    CHECK(glued.edge_count() == 4);

    CliRun bad = run_cli({"glue", "--left", loop_file.path.string(), "--right",
                          data("c3.json"), "--at", "v"});
    CHECK(bad.code == 2);
}

TEST_CASE("cli decompose and admissible")
{
    CliRun r = run_cli({"decompose", "--graph", data("eight.json")});
    REQUIRE(r.code == 0);
    CHECK(r.out == "type: (C5, T)\n"
                   "component C5: v1 v2 v3 v4 v5\n"
                   "component T: v5 v6 v7 v8\n"
                   "cut-vertices: v5\n");

    TempFile dag("gq_dag.json", emit_json_graph(fixtures::triangle_dag()));
    CliRun neg = run_cli({"decompose", "--graph", dag.path.string()});
    CHECK(neg.code == 1);
    CHECK(neg.out == "not-decomposable: v1 v2 v3\n");

    CliRun a = run_cli({"admissible", "--graph", data("fork_out.json")});
    REQUIRE(a.code == 0);
    CHECK(a.out == "v2,v3\n");

    CliRun empty = run_cli({"admissible", "--graph", data("c3.json")});
    REQUIRE(empty.code == 0);
    CHECK(empty.out == "\n");

    TempFile out_file("gq_adm_quotient.json");
    CliRun with_quotient = run_cli({"admissible", "--graph", data("fork_out.json"),
                                    "--quotient", out_file.path.string()});
    REQUIRE(with_quotient.code == 0);
    Graph q = parse_json_graph(cli::detail::read_file(out_file.path.string()));
    CHECK(q.vertex_count() == 2);
    CHECK(q.edge_count() == 2);
}

TEST_CASE("cli index commands")
{
    CliRun r = run_cli({"index", "--graph", data("c4.json"), "--subgraph", "v3,v4"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "e^5 (log=5)\n");

    TempFile arrow("gq_arrow.json", emit_json_graph(fixtures::single_arrow()));
    CliRun between = run_cli({"index-between", "--g1", arrow.path.string(), "--g2",
                              data("c4.json")});
    CHECK(between.code == 0);
    CHECK(between.out == "e^5 (log=5)\n");

    CliRun zero = run_cli({"index-between", "--g1", data("c3.json"), "--g2",
                           data("fork_out.json")});
    CHECK(zero.code == 1);
    CHECK(zero.out == "0\n");
}

TEST_CASE("cli iso")
{
    CliRun different = run_cli({"iso", data("fork_out.json"), data("fork_in.json")});
    CHECK(different.code == 1);
    CHECK(different.out.empty());

    TempFile relabeled("gq_relabel.json", [] {
        Rng rng(3);
        return emit_json_graph(random_relabel(fixtures::circulant(3), rng).graph);
    }());
    CliRun same = run_cli({"iso", data("c3.json"), relabeled.path.string()});
    CHECK(same.code == 0);
    CHECK(same.out.find("v v1 -> ") != std::string::npos);
    CHECK(same.out.find("e e1 -> ") != std::string::npos);

    CliRun missing = run_cli({"iso", data("c3.json"), "/nonexistent.json"});
    CHECK(missing.code == 2);

    TempFile txt("gq_graph.txt", "not a graph format");
    CliRun bad_ext = run_cli({"iso", data("c3.json"), txt.path.string()});
    CHECK(bad_ext.code == 2);
}

TEST_CASE("cli chain")
{
    CliRun r = run_cli({"chain", "--graph", data("c4.json"), "--chain", data("chain_c4.json")});
    REQUIRE(r.code == 0);
    CHECK(r.out == "step 1: e^2 (log=2)\n"
                   "step 2: e^5 (log=5)\n"
                   "product: e^7 (log=7)\n"
                   "direct:  e^7 (log=7)\n"
                   "chain rule: ok\n");

    // the dual chain fails on this chain: collapsing {v3,v4} leaves a
    // 3-cycle with no induced image in C_4
    CliRun dual = run_cli({"chain", "--graph", data("c4.json"), "--chain",
                           data("chain_c4.json"), "--dual"});
    CHECK(dual.code == 1);
    CHECK(dual.out.find("no induced embedding") != std::string::npos);
}

TEST_CASE("cli verify is deterministic")
{
    CliRun a = run_cli({"verify", "--seed", "1", "--trials", "4", "--max-vertices", "4"});
    CliRun b = run_cli({"verify", "--seed", "1", "--trials", "4", "--max-vertices", "4"});
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"claims\"") != std::string::npos);

    TempFile report("gq_report.json");
    CliRun c = run_cli({"verify", "--seed", "1", "--trials", "4", "--max-vertices", "4",
                        "--report", report.path.string()});
    CHECK(cli::detail::read_file(report.path.string()) == a.out);
    CHECK(c.code == a.code);

    CHECK(a.out.find("wall_ms") == std::string::npos);
    CliRun timed = run_cli({"verify", "--seed", "1", "--trials", "2", "--max-vertices", "3",
                            "--timings"});
    CHECK(timed.out.find("wall_ms") != std::string::npos);
}

TEST_CASE("cli dot output and size limit override")
{
    TempFile dot_out("gq_out.dot");
    CliRun r = run_cli({"quotient", "--graph", data("c3.json"), "--total", "-o",
                        dot_out.path.string()});
    REQUIRE(r.code == 0);
    Graph g = parse_dot_subset(cli::detail::read_file(dot_out.path.string()));
    CHECK(classify_type(g) == TypeTag::loop_graph(3));

    // GQ_SIZE_LIMIT lowers the isomorphism cap
    setenv("GQ_SIZE_LIMIT", "2", 1);
    CliRun limited = run_cli({"iso", data("c3.json"), data("c3.json")});
    unsetenv("GQ_SIZE_LIMIT");
    CHECK(limited.code == 2);
    CHECK(limited.err.find("SizeLimit") != std::string::npos);

    CliRun forced = run_cli({"iso", data("c3.json"), data("c3.json"), "--force"});
    CHECK(forced.code == 0);

    // ... and raises it
    TempFile wide("gq_wide.json", emit_json_graph(fixtures::circulant(13)));
    CliRun too_big = run_cli({"iso", wide.path.string(), wide.path.string()});
    CHECK(too_big.code == 2);
    setenv("GQ_SIZE_LIMIT", "16", 1);
    CliRun raised = run_cli({"iso", wide.path.string(), wide.path.string()});
    unsetenv("GQ_SIZE_LIMIT");
    CHECK(raised.code == 0);
}

TEST_CASE("cli usage errors")
{
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"index", "--graph", data("c4.json")}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}
