#include "zsramsey/cli.hpp"

#include "zsramsey/coloring.hpp"
#include "zsramsey/embedder.hpp"
#include "zsramsey/error.hpp"
#include "zsramsey/graph.hpp"
#include "zsramsey/oracle.hpp"
#include "zsramsey/stress.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <ostream>
#include <vector>

namespace zsramsey {

namespace
{
    using json = nlohmann::ordered_json;

    auto open_output(const std::string & path) -> std::ofstream
    {
        std::ofstream file(path);
        if (! file)
            throw Error(ErrorKind::ParseError, "cannot write " + path);
        return file;
    }

    auto checked_modulus(std::uint32_t p) -> Modulus
    {
        try {
            return Modulus(p);
        }
        catch (const Error & e) {
            throw Error(ErrorKind::ParseError, std::string("--p: ") + e.what());
        }
    }

    struct Options
    {
        std::string graph, coloring, embedding, out, mode = "strict", format = "text", coloring_mode = "uniform";
        std::uint32_t p = 0;
        std::size_t n = 0, d = 1, m = 0, ell = 0, ell_max = 0, trials = 1, n_slack = 8, jobs = 1;
        std::vector<std::size_t> m_values;
        std::uint64_t seed = 0;
        bool timing = false;
    };

    auto do_embed(const Options & o, std::ostream & out) -> int
    {
        auto g = read_graph_file(o.graph);
        auto c = read_coloring_file(o.coloring);
        auto p = checked_modulus(o.p);
        auto result = zero_sum_embed(g, p, c, o.mode == "permissive" ? Mode::Permissive : Mode::Strict);
        auto verdict = verify_zero_sum(g, result.embedding, c, p);

        auto file = open_output(o.out);
        write_embedding(file, result.embedding, verdict.edge_sum);

        if (o.format == "json") {
            json summary { { "zero_sum", verdict.passed() }, { "path", std::string(to_string(result.path)) } };
            summary["tau"] = result.tau ? json(*result.tau) : json(nullptr);
            summary["warnings"] = result.hypothesis_warnings;
            out << summary.dump(2) << '\n';
        }
        else {
            out << std::boolalpha << "zero_sum: " << verdict.passed() << '\n' << "path: " << to_string(result.path) << '\n';
            if (result.tau)
                out << "tau: " << *result.tau << '\n';
            for (const auto & w : result.hypothesis_warnings)
                out << "warning: " << w << '\n';
        }
        return verdict.passed() ? 0 : 1;
    }

    auto do_verify(const Options & o, std::ostream & out) -> int
    {
        auto g = read_graph_file(o.graph);
        auto c = read_coloring_file(o.coloring);
        auto e = read_embedding_file(o.embedding);
        auto p = checked_modulus(o.p);
        if (c.modulus() != p)
            throw Error(ErrorKind::ModulusMismatch, "coloring is over Z_" + std::to_string(c.modulus().value()));
        auto report = verify_zero_sum(g, e, c, p);
        if (o.format == "json")
            out << json { { "injective", report.injective }, { "in_range", report.in_range }, { "edge_sum", report.edge_sum },
                { "zero_sum", report.zero_sum }, { "passed", report.passed() } }.dump(2) << '\n';
        else
            out << report_to_text(report);
        return report.passed() ? 0 : 1;
    }

    auto do_exact_r(const Options & o, std::ostream & out) -> int
    {
        auto g = read_graph_file(o.graph);
        auto value = exact_R(g, checked_modulus(o.p), o.ell_max);
        if (o.format == "json")
            out << json { { "exact_r", value ? json(*value) : json(nullptr) } }.dump() << '\n';
        else
            out << "exact_r: " << (value ? std::to_string(*value) : std::string("none")) << '\n';
        return 0;
    }

    auto do_stress(const Options & o, std::ostream & out) -> int
    {
        StressConfig config;
        config.d = o.d;
        config.p = o.p;
        config.m_values = o.m_values;
        config.trials = o.trials;
        config.seed = o.seed;
        config.coloring = o.coloring_mode;
        config.n_slack = o.n_slack;
        config.jobs = o.jobs;
        checked_modulus(o.p);

        auto report = stress(config);
        auto document = to_json(report, o.timing);
        if (! o.out.empty()) {
            auto file = open_output(o.out);
            file << document.dump(2) << '\n';
        }
        if (o.format == "json")
            out << document.dump(2) << '\n';
        else
            out << "trials: " << report.trials << '\n' << "successes: " << report.successes << '\n'
                << "failures: " << report.failures.size() << '\n';
        return report.failures.empty() ? 0 : 1;
    }
}

auto run_cli(std::span<const std::string> args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app { "Zero-sum embeddings of degenerate graphs into Z_p edge-colorings", "zsramsey" };
    app.require_subcommand(1);
    Options o;

    auto format_option = [&] (CLI::App * sub) {
        sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({ "text", "json" }));
    };

    auto * embed = app.add_subcommand("embed", "find a zero-sum copy of a graph in a coloring");
    embed->add_option("--graph", o.graph)->required();
    embed->add_option("--coloring", o.coloring)->required();
    embed->add_option("--p", o.p)->required();
    embed->add_option("--out", o.out)->required();
    embed->add_option("--mode", o.mode)->check(CLI::IsMember({ "strict", "permissive" }));
    format_option(embed);

    auto * verify = app.add_subcommand("verify", "check an embedding independently");
    verify->add_option("--graph", o.graph)->required();
    verify->add_option("--coloring", o.coloring)->required();
    verify->add_option("--embedding", o.embedding)->required();
    verify->add_option("--p", o.p)->required();
    format_option(verify);

    auto * gen_graph = app.add_subcommand("gen-graph", "random d-degenerate graph");
    gen_graph->add_option("--n", o.n)->required();
    gen_graph->add_option("--d", o.d)->required();
    gen_graph->add_option("--m", o.m)->required();
    gen_graph->add_option("--seed", o.seed);
    gen_graph->add_option("--out", o.out)->required();

    auto * gen_coloring = app.add_subcommand("gen-coloring", "edge-coloring of a complete host");
    gen_coloring->add_option("--ell", o.ell)->required();
    gen_coloring->add_option("--p", o.p)->required();
    gen_coloring->add_option("--mode", o.coloring_mode, "uniform | constant:g | affine | two-block:size | planted:count");
    gen_coloring->add_option("--seed", o.seed);
    gen_coloring->add_option("--out", o.out)->required();

    auto * exact = app.add_subcommand("oracle-exact-r", "exhaustive zero-sum Ramsey number for tiny graphs");
    exact->add_option("--graph", o.graph)->required();
    exact->add_option("--p", o.p)->required();
    exact->add_option("--ell-max", o.ell_max)->required();
    format_option(exact);

    auto * stress_cmd = app.add_subcommand("stress", "seeded end-to-end trials checked by the verifier");
    stress_cmd->add_option("--d", o.d)->required();
    stress_cmd->add_option("--p", o.p)->required();
    stress_cmd->add_option("--m", o.m_values)->required()->expected(1, -1);
    stress_cmd->add_option("--trials", o.trials);
    stress_cmd->add_option("--seed", o.seed);
    stress_cmd->add_option("--coloring", o.coloring_mode, "generator mode, or adversarial");
    stress_cmd->add_option("--n-slack", o.n_slack);
    stress_cmd->add_option("--jobs", o.jobs);
    stress_cmd->add_option("--out", o.out, "write the JSON report here");
    stress_cmd->add_flag("--timing", o.timing, "include wall-clock timing in the report");
    format_option(stress_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (! reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    }
    catch (const CLI::ParseError & e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (embed->parsed())
            return do_embed(o, out);
        if (verify->parsed())
            return do_verify(o, out);
        if (gen_graph->parsed()) {
            auto g = gen_degenerate_graph(o.n, o.d, o.m, o.seed);
            auto file = open_output(o.out);
            write_graph(file, g);
            return 0;
        }
        if (gen_coloring->parsed()) {
            auto c = make_coloring(o.coloring_mode, o.ell, checked_modulus(o.p), o.seed);
            auto file = open_output(o.out);
            write_coloring(file, c);
            return 0;
        }
        if (exact->parsed())
            return do_exact_r(o, out);
        return do_stress(o, out);
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        if (! e.witness().empty())
            err << "witness: " << e.witness() << '\n';
        return e.kind() == ErrorKind::ParseError ? 2 : 1;
    }
}

}
