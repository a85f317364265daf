#pragma once

#include "zsramsey/coloring.hpp"
#include "zsramsey/embedder.hpp"
#include "zsramsey/graph.hpp"
#include "zsramsey/zp.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zsramsey {

struct EdgeTerm
{
    Edge edge;
    HostVertex x, y;
    Residue color;
};

/// Computed from (G, map, c, p) alone.
struct VerificationReport
{
    bool injective = false;
    bool in_range = false;
    Residue edge_sum = 0;
    bool zero_sum = false;
    std::vector<EdgeTerm> per_edge_terms;

    auto passed() const noexcept -> bool { return injective && in_range && zero_sum; }
};

auto verify_zero_sum(const Graph & g, const Embedding & map, const EdgeColoring & c, Modulus p) -> VerificationReport;

auto report_to_text(const VerificationReport & report) -> std::string;

inline constexpr std::uint64_t brute_force_budget = 10'000'000;

/// Number of injections V(G) -> [ell], saturating at UINT64_MAX.
auto injection_count(std::size_t ell, std::size_t n) -> std::uint64_t;

/// First zero-sum injection in lexicographic order of image tuples, or
/// nullopt. Throws TooLarge when ell!/(ell-n)! exceeds the budget.
auto brute_force_find(const Graph & g, const EdgeColoring & c, Modulus p) -> std::optional<Embedding>;

/// Smallest ell <= ell_max such that every Z_p-coloring of K_ell has a
/// zero-sum copy of G; nullopt if none (or if p does not divide m). Throws
/// TooLarge when colorings x injections for the next ell exceed `budget`.
auto exact_R(const Graph & g, Modulus p, std::size_t ell_max, std::uint64_t budget = 2'000'000'000) -> std::optional<std::size_t>;

}
