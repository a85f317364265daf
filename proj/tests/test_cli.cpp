#include "support.hpp"

#include "zsramsey/cli.hpp"
#include "zsramsey/coloring.hpp"
#include "zsramsey/embedder.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace zsramsey;
using namespace zsramsey::test;
namespace fs = std::filesystem;

namespace
{
    struct Run
    {
        int code;
        std::string out, err;
    };

    auto run(std::vector<std::string> args) -> Run
    {
        args.insert(args.begin(), "zsramsey");
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return { code, out.str(), err.str() };
    }

    auto slurp(const fs::path & path) -> std::string
    {
        std::ifstream in(path);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    struct Scratch
    {
        fs::path dir;
        Scratch() : dir(fs::temp_directory_path() / ("zsramsey-cli-" + std::to_string(::getpid())))
        {
            fs::create_directories(dir);
        }
        ~Scratch() { fs::remove_all(dir); }
        auto operator()(const std::string & name) const -> std::string { return (dir / name).string(); }
    };
}

TEST_CASE("cli: generate, embed, verify")
{
    Scratch tmp;
    REQUIRE(run({ "gen-graph", "--n", "30", "--d", "1", "--m", "24", "--seed", "3", "--out", tmp("g.txt") }).code == 0);
    REQUIRE(run({ "gen-coloring", "--ell", "48", "--p", "3", "--mode", "uniform", "--seed", "4", "--out", tmp("c.txt") }).code == 0);

    auto embed = run({ "embed", "--graph", tmp("g.txt"), "--coloring", tmp("c.txt"), "--p", "3", "--out", tmp("e.txt") });
    CHECK(embed.code == 0);
    CHECK(embed.out.find("zero_sum: true") != std::string::npos);
    CHECK(slurp(tmp("e.txt")).rfind("sum_mod_p 0\n", 0) == 0);

    auto verify = run({ "verify", "--graph", tmp("g.txt"), "--coloring", tmp("c.txt"), "--embedding", tmp("e.txt"), "--p", "3" });
    CHECK(verify.code == 0);
    CHECK(verify.out.find("zero_sum: true") != std::string::npos);

    // Moving one vertex onto an unused host vertex usually breaks the sum;
    // whatever happens, the exit code must agree with a direct recomputation.
    auto g = read_graph_file(tmp("g.txt"));
    auto c = read_coloring_file(tmp("c.txt"));
    auto e = read_embedding_file(tmp("e.txt"));
    for (HostVertex spare = 0; spare < c.order(); ++spare) {
        if (std::find(e.map.begin(), e.map.end(), spare) != e.map.end())
            continue;
        auto moved = e;
        moved.map[g.edges().front().first] = spare;
        {
            std::ofstream f(tmp("moved.txt"));
            write_embedding(f, moved, 0);
        }
        auto again = run({ "verify", "--graph", tmp("g.txt"), "--coloring", tmp("c.txt"), "--embedding", tmp("moved.txt"), "--p", "3" });
        REQUIRE((again.code == 0) == is_zero_sum(g, moved.map, c));
    }

    {
        auto dup = e;
        dup.map[1] = dup.map[0];
        std::ofstream f(tmp("dup.txt"));
        write_embedding(f, dup, 0);
    }
    CHECK(run({ "verify", "--graph", tmp("g.txt"), "--coloring", tmp("c.txt"), "--embedding", tmp("dup.txt"), "--p", "3" }).code == 1);
}

TEST_CASE("cli: constant coloring file")
{
    Scratch tmp;
    REQUIRE(run({ "gen-coloring", "--ell", "43", "--p", "3", "--mode", "constant:1", "--seed", "0", "--out", tmp("c.txt") }).code == 0);
    auto c = read_coloring_file(tmp("c.txt"));
    CHECK(c.order() == 43);
    for (HostVertex x = 0; x < 43; ++x)
        for (HostVertex y = x + 1; y < 43; ++y)
            REQUIRE(c(x, y) == 1);
}

TEST_CASE("cli: errors and exit codes")
{
    Scratch tmp;
    CHECK(run({}).code == 2);
    CHECK(run({ "embed", "--graph", tmp("missing.txt") }).code == 2);
    CHECK(run({ "frobnicate" }).code == 2);
    CHECK(run({ "gen-graph", "--n", "3", "--d", "1", "--m", "5", "--out", tmp("g.txt") }).code == 1);
    CHECK(run({ "gen-coloring", "--ell", "5", "--p", "4", "--out", tmp("c.txt") }).code == 2);

    {
        std::ofstream f(tmp("bad.txt"));
        f << "3 1\n0 zero\n";
    }
    REQUIRE(run({ "gen-coloring", "--ell", "10", "--p", "3", "--out", tmp("c.txt") }).code == 0);
    auto bad = run({ "embed", "--graph", tmp("bad.txt"), "--coloring", tmp("c.txt"), "--p", "3", "--out", tmp("e.txt") });
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 2") != std::string::npos);

    REQUIRE(run({ "gen-graph", "--n", "26", "--d", "1", "--m", "24", "--seed", "1", "--out", tmp("g.txt") }).code == 0);
    auto strict = run({ "embed", "--graph", tmp("g.txt"), "--coloring", tmp("c.txt"), "--p", "3", "--out", tmp("e.txt") });
    CHECK(strict.code == 1);
    CHECK(strict.err.find("HypothesisViolation") != std::string::npos);
}

TEST_CASE("cli: exact R and stress")
{
    Scratch tmp;
    {
        std::ofstream f(tmp("p3.txt"));
        f << "3 2\n0 1\n1 2\n";
    }
    auto exact = run({ "oracle-exact-r", "--graph", tmp("p3.txt"), "--p", "2", "--ell-max", "5" });
    CHECK(exact.code == 0);
    CHECK(exact.out == "exact_r: 3\n");

    std::vector<std::string> args { "stress", "--d", "1", "--p", "3", "--m", "24", "27", "--trials", "12", "--seed", "5",
        "--coloring", "adversarial", "--format", "json" };
    auto first = run(args);
    CHECK(first.code == 0);
    args.insert(args.end(), { "--jobs", "3" });
    CHECK(run(args).out == first.out);
}
