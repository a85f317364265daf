#include "zsramsey/coloring.hpp"

#include "zsramsey/error.hpp"
#include "zsramsey/rng.hpp"
#include "zsramsey/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace zsramsey {

EdgeColoring::EdgeColoring(std::size_t order, Modulus modulus) :
    _order(order), _modulus(modulus), _colors(order * order, 0)
{
}

auto EdgeColoring::color(HostVertex x, HostVertex y) const -> ZpElement
{
    if (x == y || x >= _order || y >= _order)
        throw Error(ErrorKind::PreconditionViolation, "no edge " + std::to_string(x) + " " + std::to_string(y));
    return ZpElement((*this)(x, y), _modulus);
}

auto EdgeColoring::set(HostVertex x, HostVertex y, Residue value) -> void
{
    if (x == y || x >= _order || y >= _order)
        throw Error(ErrorKind::PreconditionViolation, "no edge " + std::to_string(x) + " " + std::to_string(y));
    if (value >= _modulus.value())
        throw Error(ErrorKind::PreconditionViolation, "color " + std::to_string(value) + " not reduced mod " + std::to_string(_modulus.value()));
    _colors[x * _order + y] = value;
    _colors[y * _order + x] = value;
}

auto edge_sum(const EdgeColoring & c, HostVertex y, std::span<const HostVertex> X) -> ZpElement
{
    if (std::find(X.begin(), X.end(), y) != X.end())
        throw Error(ErrorKind::PreconditionViolation, "edge_sum: y=" + std::to_string(y) + " lies in X");
    for (auto x : X)
        if (x >= c.order())
            throw Error(ErrorKind::PreconditionViolation, "edge_sum: vertex out of range");
    return ZpElement(edge_sum_raw(c, y, X), c.modulus());
}

auto uniform_coloring(std::size_t order, Modulus p, std::uint64_t seed) -> EdgeColoring
{
    EdgeColoring c(order, p);
    Rng rng(seed);
    for (HostVertex x = 0; x < order; ++x)
        for (HostVertex y = x + 1; y < order; ++y)
            c.set(x, y, static_cast<Residue>(uniform_below(rng, p.value())));
    return c;
}

auto constant_coloring(std::size_t order, Modulus p, Residue g) -> EdgeColoring
{
    EdgeColoring c(order, p);
    for (HostVertex x = 0; x < order; ++x)
        for (HostVertex y = x + 1; y < order; ++y)
            c.set(x, y, g);
    return c;
}

auto affine_coloring(std::size_t order, Modulus p) -> EdgeColoring
{
    EdgeColoring c(order, p);
    for (HostVertex x = 0; x < order; ++x)
        for (HostVertex y = x + 1; y < order; ++y)
            c.set(x, y, p.reduce(static_cast<std::int64_t>(x) + y));
    return c;
}

auto two_block_coloring(std::size_t order, Modulus p, std::size_t size) -> EdgeColoring
{
    EdgeColoring c(order, p);
    for (HostVertex x = 0; x < order; ++x)
        for (HostVertex y = x + 1; y < order; ++y)
            c.set(x, y, (x < size) == (y < size) ? 0 : 1);
    return c;
}

auto planted_coloring(std::size_t order, Modulus p, Residue g, std::size_t planted, std::uint64_t seed) -> EdgeColoring
{
    auto c = constant_coloring(order, p, g);
    Rng rng(seed);
    std::vector<HostVertex> vertices(order);
    std::iota(vertices.begin(), vertices.end(), 0);
    std::shuffle(vertices.begin(), vertices.end(), rng);
    vertices.resize(std::min(planted, order));
    std::sort(vertices.begin(), vertices.end());
    for (auto x : vertices)
        for (HostVertex y = 0; y < order; ++y)
            if (y != x)
                c.set(x, y, static_cast<Residue>(uniform_below(rng, p.value())));
    return c;
}

namespace
{
    auto parse_argument(const std::string & mode, const std::string & argument) -> std::uint64_t
    {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(argument.data(), argument.data() + argument.size(), value);
        if (argument.empty() || ec != std::errc() || ptr != argument.data() + argument.size())
            throw Error(ErrorKind::PreconditionViolation, "bad argument in coloring mode \"" + mode + "\"");
        return value;
    }
}

auto make_coloring(const std::string & mode, std::size_t order, Modulus p, std::uint64_t seed) -> EdgeColoring
{
    auto colon = mode.find(':');
    auto name = mode.substr(0, colon);
    auto argument = colon == std::string::npos ? std::string() : mode.substr(colon + 1);
    auto needs_argument = name == "constant" || name == "two-block" || name == "planted";
    if (needs_argument == (colon == std::string::npos))
        throw Error(ErrorKind::PreconditionViolation, "malformed coloring mode \"" + mode + "\"");

    if (name == "uniform")
        return uniform_coloring(order, p, seed);
    if (name == "affine")
        return affine_coloring(order, p);
    if (name == "constant") {
        auto g = parse_argument(mode, argument);
        if (g >= p.value())
            throw Error(ErrorKind::PreconditionViolation, "constant color " + argument + " not in Z_" + std::to_string(p.value()));
        return constant_coloring(order, p, static_cast<Residue>(g));
    }
    if (name == "two-block")
        return two_block_coloring(order, p, parse_argument(mode, argument));
    if (name == "planted")
        return planted_coloring(order, p, 0, parse_argument(mode, argument), seed);
    throw Error(ErrorKind::PreconditionViolation, "unknown coloring mode \"" + mode + "\"");
}

auto write_coloring(std::ostream & out, const EdgeColoring & c) -> void
{
    out << c.order() << ' ' << c.modulus().value() << '\n';
    for (HostVertex x = 0; x < c.order(); ++x)
        for (HostVertex y = x + 1; y < c.order(); ++y)
            out << x << ' ' << y << ' ' << c(x, y) << '\n';
}

auto coloring_to_string(const EdgeColoring & c) -> std::string
{
    std::ostringstream s;
    write_coloring(s, c);
    return s.str();
}

auto read_coloring(std::istream & in) -> EdgeColoring
{
    LineReader reader(in, "coloring");
    auto header = reader.expect_fields(2, "header \"ell p\"");
    auto order = header[0];
    if (order > 1u << 16)
        reader.fail("host order too large");
    if (header[1] > 0xFFFFFFFFULL || ! is_prime(header[1]))
        reader.fail("p=" + std::to_string(header[1]) + " is not prime");

    EdgeColoring c(order, Modulus(static_cast<std::uint32_t>(header[1])));
    for (HostVertex x = 0; x < order; ++x)
        for (HostVertex y = x + 1; y < order; ++y) {
            auto fields = reader.expect_fields(3, "\"u v color\"");
            if (fields[0] != x || fields[1] != y)
                reader.fail("expected pair " + std::to_string(x) + " " + std::to_string(y) + " (lexicographic order)");
            if (fields[2] >= header[1])
                reader.fail("color " + std::to_string(fields[2]) + " not in [0, p)");
            c.set(x, y, static_cast<Residue>(fields[2]));
        }
    reader.expect_end();
    return c;
}

auto read_coloring_file(const std::string & path) -> EdgeColoring
{
    std::ifstream in(path);
    if (! in)
        throw Error(ErrorKind::ParseError, "cannot open coloring file " + path);
    return read_coloring(in);
}

}
