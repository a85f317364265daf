#pragma once

#include "zsramsey/zp.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace zsramsey {

using HostVertex = std::uint32_t;

/// Total symmetric Z_p coloring of the pairs of [order]. Stored as a dense
/// matrix; the diagonal is unused.
class EdgeColoring
{
public:
    EdgeColoring(std::size_t order, Modulus modulus);

    auto order() const noexcept -> std::size_t { return _order; }
    auto modulus() const noexcept -> Modulus { return _modulus; }

    auto operator()(HostVertex x, HostVertex y) const noexcept -> Residue { return _colors[x * _order + y]; }
    auto color(HostVertex x, HostVertex y) const -> ZpElement;
    auto set(HostVertex x, HostVertex y, Residue value) -> void;

    friend auto operator==(const EdgeColoring &, const EdgeColoring &) -> bool = default;

private:
    std::size_t _order;
    Modulus _modulus;
    std::vector<Residue> _colors;
};

/// c(yX): sum of c(yx) over x in X. Throws PreconditionViolation if y is in X.
auto edge_sum(const EdgeColoring & c, HostVertex y, std::span<const HostVertex> X) -> ZpElement;

/// Raw-residue form of edge_sum for inner loops; no membership check.
inline auto edge_sum_raw(const EdgeColoring & c, HostVertex y, std::span<const HostVertex> X) -> Residue
{
    Residue sum = 0;
    for (auto x : X)
        sum = c.modulus().add(sum, c(y, x));
    return sum;
}

auto uniform_coloring(std::size_t order, Modulus p, std::uint64_t seed) -> EdgeColoring;
auto constant_coloring(std::size_t order, Modulus p, Residue g) -> EdgeColoring;
/// c(uv) = (u + v) mod p.
auto affine_coloring(std::size_t order, Modulus p) -> EdgeColoring;
/// Color 0 inside [0, size) and inside [size, order), color 1 across.
auto two_block_coloring(std::size_t order, Modulus p, std::size_t size) -> EdgeColoring;
/// Constant g on a background, with every pair touching one of `planted`
/// seeded vertices recolored uniformly at random.
auto planted_coloring(std::size_t order, Modulus p, Residue g, std::size_t planted, std::uint64_t seed) -> EdgeColoring;

/// Parse a generator mode: uniform, constant:g, affine, two-block:size,
/// planted:count. Throws PreconditionViolation for an unknown mode.
auto make_coloring(const std::string & mode, std::size_t order, Modulus p, std::uint64_t seed) -> EdgeColoring;

auto write_coloring(std::ostream & out, const EdgeColoring & c) -> void;
auto coloring_to_string(const EdgeColoring & c) -> std::string;
auto read_coloring(std::istream & in) -> EdgeColoring;
auto read_coloring_file(const std::string & path) -> EdgeColoring;

}
