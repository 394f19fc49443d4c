#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gq/admissible.hpp"
#include "gq/classify.hpp"
#include "gq/graph.hpp"
#include "gq/index.hpp"
#include "gq/io.hpp"
#include "gq/iso.hpp"
#include "gq/quotient.hpp"
#include "gq/verify.hpp"

namespace gq::cli {

// Exit codes: 0 success, 1 negative answer (no isomorphism/embedding, failed
// verification, non-decomposable input), 2 usage or input error, 3 internal.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

namespace detail {

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw GraphError(ErrorKind::SyntaxError, "cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Format is chosen by extension, never sniffed. Parse diagnostics are
// re-raised with the file name in front (file:line:col for DOT errors).
inline Graph load_graph(const std::string& path)
{
    std::string text = read_file(path);
    try {
        if (ends_with(path, ".json"))
            return parse_json_graph(text);
        if (ends_with(path, ".dot"))
            return parse_dot_subset(text);
    } catch (const GraphError& e) {
        if (e.line() >= 0)
            throw GraphError(e.kind(), path + ":" + std::to_string(e.line()) + ":" +
                                           std::to_string(e.col()) + ": " + e.message());
        throw GraphError(e.kind(), path + ": " + e.message(), e.detail());
    }
    throw GraphError(ErrorKind::SyntaxError, "'" + path + "': expected a .json or .dot file");
}

inline void write_graph(const Graph& g, const std::string& out_path, std::ostream& out)
{
    std::string text;
    if (out_path.empty() || ends_with(out_path, ".json"))
        text = emit_json_graph(g);
    else if (ends_with(out_path, ".dot"))
        text = emit_dot(g);
    else
        throw GraphError(ErrorKind::SyntaxError, "'" + out_path + "': expected a .json or .dot file");
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw GraphError(ErrorKind::SyntaxError, "cannot write '" + out_path + "'");
    file << text;
}

inline std::vector<std::string> split_commas(const std::string& csv)
{
    std::vector<std::string> out;
    std::string current;
    for (char c : csv) {
        if (c == ',') {
            if (!current.empty())
                out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty())
        out.push_back(current);
    return out;
}

struct SizeLimits {
    std::size_t iso = 12;
    std::size_t pattern = 10;
    std::size_t host = 12;
};

inline SizeLimits resolve_limits(bool force)
{
    SizeLimits limits;
    if (const char* env = std::getenv("GQ_SIZE_LIMIT")) {
        std::size_t value = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
        if (value > 0)
            limits = {value, value, value};
    }
    if (force)
        limits = {SIZE_MAX, SIZE_MAX, SIZE_MAX};
    return limits;
}

inline void print_mapping(const GraphMapping& mapping, std::ostream& out)
{
    for (const auto& [from, to] : mapping.vertex_map)
        out << "v " << from << " -> " << to << "\n";
    for (const auto& [from, to] : mapping.edge_map)
        out << "e " << from << " -> " << to << "\n";
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"directed multigraph boundary quotients, gluing, CT decomposition and indices"};
    app.require_subcommand(1);

    // quotient
    std::string q_graph, q_boundary, q_out;
    bool q_total = false, q_boundary_given = false;
    auto* quotient_cmd = app.add_subcommand("quotient", "boundary quotient of a graph");
    quotient_cmd->add_option("--graph", q_graph, "input graph (.json/.dot)")->required();
    quotient_cmd->add_option("--boundary", q_boundary, "comma-separated boundary vertices")
        ->expected(1)
        ->each([&](const std::string&) { q_boundary_given = true; });
    quotient_cmd->add_flag("--total", q_total, "use the total boundary V(G)");
    quotient_cmd->add_option("-o,--output", q_out, "write result here (.json/.dot)");

    // subquotient
    std::string sq_graph, sq_subgraph, sq_out;
    auto* subquotient_cmd =
        app.add_subcommand("subquotient", "quotient by the boundary of a full subgraph");
    subquotient_cmd->add_option("--graph", sq_graph)->required();
    subquotient_cmd->add_option("--subgraph", sq_subgraph, "comma-separated vertex set")
        ->required();
    subquotient_cmd->add_option("-o,--output", sq_out);

    // glue
    std::string g_left, g_right, g_at, g_name, g_out;
    bool g_strict = false;
    auto* glue_cmd = app.add_subcommand("glue", "vertex-fixed glued graph");
    glue_cmd->add_option("--left", g_left, "first graph file")->required();
    glue_cmd->add_option("--right", g_right, "second graph file")->required();
    glue_cmd->add_option("--at", g_at, "vLEFT=vRIGHT vertices to identify")->required();
    glue_cmd->add_option("--name", g_name, "name of the glued vertex");
    glue_cmd->add_flag("--strict", g_strict, "fail on name collisions instead of renaming");
    glue_cmd->add_option("-o,--output", g_out);

    // decompose
    std::string d_graph;
    auto* decompose_cmd = app.add_subcommand("decompose", "maximal CT decomposition");
    decompose_cmd->add_option("--graph", d_graph)->required();

    // admissible
    std::string a_graph, a_quotient_out;
    auto* admissible_cmd = app.add_subcommand("admissible", "admissible boundary");
    admissible_cmd->add_option("--graph", a_graph)->required();
    admissible_cmd->add_option("--quotient", a_quotient_out,
                               "also write the admissible quotient graph");

    // index
    std::string i_graph, i_subgraph;
    auto* index_cmd = app.add_subcommand("index", "subgraph boundary index");
    index_cmd->add_option("--graph", i_graph)->required();
    index_cmd->add_option("--subgraph", i_subgraph)->required();

    // index-between
    std::string ib_g1, ib_g2;
    auto* between_cmd = app.add_subcommand("index-between", "inter-graph boundary index");
    between_cmd->add_option("--g1", ib_g1)->required();
    between_cmd->add_option("--g2", ib_g2)->required();

    // iso
    std::string iso_a, iso_b;
    bool iso_force = false;
    auto* iso_cmd = app.add_subcommand("iso", "graph isomorphism test");
    iso_cmd->add_option("a", iso_a, "first graph")->required();
    iso_cmd->add_option("b", iso_b, "second graph")->required();
    iso_cmd->add_flag("--force", iso_force, "ignore the size limit");

    // chain
    std::string c_graph, c_chain;
    bool c_dual = false;
    auto* chain_cmd = app.add_subcommand("chain", "verify a chain of full subgraphs");
    chain_cmd->add_option("--graph", c_graph)->required();
    chain_cmd->add_option("--chain", c_chain, "chain document (innermost first)")->required();
    chain_cmd->add_flag("--dual", c_dual, "also check the dual chain");

    // verify
    std::uint64_t v_seed = 1;
    long v_trials = 50;
    int v_max_vertices = 6;
    std::string v_report;
    bool v_timings = false;
    auto* verify_cmd = app.add_subcommand("verify", "run the randomized verification suite");
    verify_cmd->add_option("--seed", v_seed);
    verify_cmd->add_option("--trials", v_trials);
    verify_cmd->add_option("--max-vertices", v_max_vertices);
    verify_cmd->add_option("--report", v_report, "write the JSON report here");
    verify_cmd->add_flag("--timings", v_timings, "include wall times (report no longer "
                                                 "byte-reproducible)");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kExitSuccess;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (quotient_cmd->parsed()) {
            if (q_total == q_boundary_given) {
                err << "error: exactly one of --boundary and --total is required\n";
                return kExitUsage;
            }
            Graph g = detail::load_graph(q_graph);
            Boundary boundary{q_total ? g.vertices() : detail::split_commas(q_boundary)};
            detail::write_graph(boundary_quotient(g, boundary).graph, q_out, out);
            return kExitSuccess;
        }
        if (subquotient_cmd->parsed()) {
            Graph g = detail::load_graph(sq_graph);
            FullSubgraphSpec spec{detail::split_commas(sq_subgraph)};
            detail::write_graph(subgraph_boundary_quotient(g, spec).graph, sq_out, out);
            return kExitSuccess;
        }
        if (glue_cmd->parsed()) {
            auto eq = g_at.find('=');
            if (eq == std::string::npos) {
                err << "error: --at expects vLEFT=vRIGHT\n";
                return kExitUsage;
            }
            Graph left = detail::load_graph(g_left);
            Graph right = detail::load_graph(g_right);
            GlueSpec spec{g_at.substr(0, eq), g_at.substr(eq + 1), g_name};
            detail::write_graph(glue(left, right, spec, g_strict), g_out, out);
            return kExitSuccess;
        }
        if (decompose_cmd->parsed()) {
            Graph g = detail::load_graph(d_graph);
            Decomposition decomposition;
            try {
                decomposition = ct_decompose(g);
            } catch (const GraphError& e) {
                if (e.kind() != ErrorKind::NotCTDecomposable)
                    throw;
                out << "not-decomposable:";
                for (const auto& name : e.detail())
                    out << " " << name;
                out << "\n";
                return kExitNegative;
            }
            out << "type: " << format_type_tuple(decomposition.maximal_type) << "\n";
            for (const auto& comp : decomposition.components) {
                out << "component " << comp.tag.str() << ":";
                for (const auto& name : comp.spec.vertex_set)
                    out << " " << name;
                out << "\n";
            }
            out << "cut-vertices:";
            for (const auto& name : decomposition.cut_vertices)
                out << " " << name;
            out << "\n";
            return kExitSuccess;
        }
        if (admissible_cmd->parsed()) {
            Graph g = detail::load_graph(a_graph);
            AdmissibleBoundary boundary = admissible_boundary(g);
            for (std::size_t i = 0; i < boundary.vertex_set.size(); ++i)
                out << (i ? "," : "") << boundary.vertex_set[i];
            out << "\n";
            if (!a_quotient_out.empty())
                detail::write_graph(boundary_quotient(g, Boundary{boundary.vertex_set}).graph,
                                    a_quotient_out, out);
            return kExitSuccess;
        }
        if (index_cmd->parsed()) {
            Graph g = detail::load_graph(i_graph);
            out << ind_subgraph(g, FullSubgraphSpec{detail::split_commas(i_subgraph)}).str()
                << "\n";
            return kExitSuccess;
        }
        if (between_cmd->parsed()) {
            auto limits = detail::resolve_limits(false);
            Graph g1 = detail::load_graph(ib_g1);
            Graph g2 = detail::load_graph(ib_g2);
            LogIndex value = ind_between(g1, g2, limits.pattern, limits.host);
            out << value.str() << "\n";
            return value.is_zero() ? kExitNegative : kExitSuccess;
        }
        if (iso_cmd->parsed()) {
            auto limits = detail::resolve_limits(iso_force);
            Graph a = detail::load_graph(iso_a);
            Graph b = detail::load_graph(iso_b);
            auto mapping = are_isomorphic(a, b, limits.iso);
            if (!mapping)
                return kExitNegative;
            detail::print_mapping(*mapping, out);
            return kExitSuccess;
        }
        if (chain_cmd->parsed()) {
            Graph g = detail::load_graph(c_graph);
            Chain chain{parse_chain_doc(detail::read_file(c_chain))};
            ChainReport report = verify_chain(g, chain);
            for (std::size_t i = 0; i < report.step_indices.size(); ++i)
                out << "step " << i + 1 << ": " << report.step_indices[i].str() << "\n";
            out << "product: " << report.product.str() << "\n";
            out << "direct:  " << report.direct.str() << "\n";
            out << "chain rule: " << (report.ok ? "ok" : "FAILED") << "\n";
            bool ok = report.ok;
            if (c_dual) {
                DualChainResult dual = dual_chain(g, chain);
                for (std::size_t i = 0; i < dual.checks.size(); ++i) {
                    const auto& check = dual.checks[i];
                    out << "dual step " << i + 1 << ": "
                        << (check.embedding_found ? "embedding found" : "no induced embedding")
                        << ", duality "
                        << (check.duality_ok ? "ok" : "FAILED (expected " + check.expected.str() +
                                                          ", got " + check.quotient_index.str() +
                                                          ")")
                        << "\n";
                }
                ok = ok && dual.all_ok;
            }
            return ok ? kExitSuccess : kExitNegative;
        }
        if (verify_cmd->parsed()) {
            TrialReport report = run_suite(v_seed, v_trials, v_max_vertices);
            std::string text = report.to_json(v_timings).dump(2) + "\n";
            if (v_report.empty()) {
                out << text;
            } else {
                std::ofstream file(v_report, std::ios::binary);
                if (!file)
                    throw GraphError(ErrorKind::SyntaxError, "cannot write '" + v_report + "'");
                file << text;
            }
            return report.asserted_failures() == 0 ? kExitSuccess : kExitNegative;
        }
        err << "error: no subcommand\n";
        return kExitUsage;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << "\n";
        if (e.kind() == ErrorKind::InternalMismatch || e.kind() == ErrorKind::Overflow)
            return kExitInternal;
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

inline int run_main(int argc, char** argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

} // namespace gq::cli
