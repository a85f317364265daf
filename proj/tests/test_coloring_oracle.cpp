#include "support.hpp"

#include "zsramsey/coloring.hpp"
#include "zsramsey/oracle.hpp"

#include <doctest.h>

#include <sstream>

using namespace zsramsey;
using namespace zsramsey::test;

TEST_CASE("edge sums")
{
    Modulus p5(5), p3(3);
    auto c = constant_coloring(6, p5, 2);
    CHECK(edge_sum(c, 0, {}).value() == 0);
    std::vector<HostVertex> X { 1, 2, 3 };
    CHECK(edge_sum(c, 0, X).value() == 1);

    EdgeColoring e(4, p3);
    e.set(0, 1, 1);
    e.set(0, 2, 2);
    std::vector<HostVertex> Y { 1, 2 };
    CHECK(edge_sum(e, 0, Y).value() == 0);
    CHECK(e(2, 0) == 2);
    CHECK(kind_of([&] { edge_sum(e, 1, Y); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("coloring generators")
{
    Modulus p(3);
    auto c = make_coloring("constant:1", 43, p, 0);
    for (HostVertex x = 0; x < 43; ++x)
        for (HostVertex y = x + 1; y < 43; ++y)
            REQUIRE(c(x, y) == 1);
    auto a = make_coloring("affine", 10, p, 0);
    CHECK(a(4, 7) == 2);
    auto b = make_coloring("two-block:4", 10, p, 0);
    CHECK(b(0, 3) == 0);
    CHECK(b(5, 9) == 0);
    CHECK(b(3, 4) == 1);
    CHECK(coloring_to_string(make_coloring("uniform", 20, p, 5)) == coloring_to_string(make_coloring("uniform", 20, p, 5)));
    CHECK(kind_of([&] { make_coloring("constant:3", 5, p, 0); }) == ErrorKind::PreconditionViolation);
    CHECK(kind_of([&] { make_coloring("stripes", 5, p, 0); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("coloring file round trip and parse errors")
{
    auto c = uniform_coloring(7, Modulus(5), 1);
    std::istringstream in(coloring_to_string(c));
    CHECK(coloring_to_string(read_coloring(in)) == coloring_to_string(c));

    auto parse = [] (const std::string & text) {
        return kind_of([&] {
            std::istringstream s(text);
            read_coloring(s);
        });
    };
    CHECK(parse("3 3\n0 1 0\n0 2 1\n1 2 2\n") == std::nullopt);
    CHECK(parse("3 4\n0 1 0\n0 2 1\n1 2 2\n") == ErrorKind::ParseError);
    CHECK(parse("3 3\n0 1 0\n1 2 1\n0 2 2\n") == ErrorKind::ParseError);
    CHECK(parse("3 3\n0 1 0\n0 2 3\n1 2 2\n") == ErrorKind::ParseError);
    CHECK(parse("3 3\n0 1 0\n0 2 1\n") == ErrorKind::ParseError);
    CHECK(parse("3 3\n0 1 0\n0 2 1\n1 2 2\n0 1 1\n") == ErrorKind::ParseError);
    CHECK(parse("3\n") == ErrorKind::ParseError);
}

TEST_CASE("verifier")
{
    auto k3 = graph_of(3, { { 0, 1 }, { 0, 2 }, { 1, 2 } });
    auto ones = constant_coloring(5, Modulus(3), 1);
    auto report = verify_zero_sum(k3, Embedding { { 4, 0, 2 } }, ones, Modulus(3));
    CHECK(report.passed());
    CHECK(report.edge_sum == 0);
    CHECK(report.per_edge_terms.size() == 3);

    auto p3 = graph_of(3, { { 0, 1 }, { 1, 2 } });
    EdgeColoring c(3, Modulus(3));
    c.set(0, 1, 1);
    c.set(1, 2, 2);
    CHECK(verify_zero_sum(p3, Embedding { { 0, 1, 2 } }, c, Modulus(3)).passed());

    auto repeated = verify_zero_sum(p3, Embedding { { 0, 1, 0 } }, c, Modulus(3));
    CHECK(! repeated.injective);
    CHECK(! repeated.passed());
    auto outside = verify_zero_sum(p3, Embedding { { 0, 1, 3 } }, c, Modulus(3));
    CHECK(! outside.in_range);
    CHECK(! outside.passed());
    // Colors are summed in the requested Z_p, never an error.
    auto other = verify_zero_sum(p3, Embedding { { 0, 1, 2 } }, c, Modulus(5));
    CHECK(other.edge_sum == 3);
    CHECK(! other.passed());
}

TEST_CASE("brute force search")
{
    auto p3 = graph_of(3, { { 0, 1 }, { 1, 2 } });
    Modulus two(2);
    EdgeColoring one_odd(3, two);
    one_odd.set(0, 1, 1);
    auto found = brute_force_find(p3, one_odd, two);
    REQUIRE(found);
    CHECK(is_zero_sum(p3, found->map, one_odd));
    CHECK(zero_sum_copy_exists(p3, one_odd));

    auto zeros = constant_coloring(4, two, 0);
    CHECK(brute_force_find(p3, zeros, two) == Embedding { { 0, 1, 2 } });
    CHECK(! brute_force_find(p3, constant_coloring(2, two, 0), two));

    // Agreement with the test-side search on every 2-coloring of K_4.
    for (std::uint32_t code = 0; code < 64; ++code) {
        EdgeColoring c(4, two);
        std::uint32_t bit = 0;
        for (HostVertex x = 0; x < 4; ++x)
            for (HostVertex y = x + 1; y < 4; ++y)
                c.set(x, y, code >> bit++ & 1);
        auto star = graph_of(4, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 2 } });
        REQUIRE(brute_force_find(star, c, two).has_value() == zero_sum_copy_exists(star, c));
        REQUIRE(brute_force_find(p3, c, two).has_value() == zero_sum_copy_exists(p3, c));
    }
}

TEST_CASE("exact zero-sum Ramsey numbers")
{
    auto p3 = graph_of(3, { { 0, 1 }, { 1, 2 } });
    // Frozen after enumeration; also recomputed here by the test-side search.
    constexpr std::size_t exact_r_p3_mod2 = 3;
    CHECK(exact_R(p3, Modulus(2), 6) == exact_r_p3_mod2);
    CHECK(reference_exact_R(p3, Modulus(2), 6) == exact_r_p3_mod2);
    CHECK(exact_R(p3, Modulus(2), 2) == std::nullopt);
    CHECK(exact_R(graph_of(2, { { 0, 1 } }), Modulus(2), 6) == std::nullopt);

    auto two_edges = graph_of(4, { { 0, 1 }, { 2, 3 } });
    CHECK(exact_R(two_edges, Modulus(2), 6) == reference_exact_R(two_edges, Modulus(2), 6));
}
