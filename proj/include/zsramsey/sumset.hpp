#pragma once

#include "zsramsey/zp.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace zsramsey {

/// The two achievable contributions of one adjustable vertex.
class ChoicePair
{
public:
    ChoicePair(ZpElement first, ZpElement second);

    auto first() const noexcept -> const ZpElement & { return _first; }
    auto second() const noexcept -> const ZpElement & { return _second; }
    auto modulus() const noexcept -> Modulus { return _first.modulus(); }
    auto distinct() const noexcept -> bool { return _first != _second; }
    auto size() const noexcept -> std::size_t { return distinct() ? 2 : 1; }

private:
    ZpElement _first, _second;
};

enum class Choice : std::uint8_t { First, Second };

/// Exact reachable sums of every prefix of a ChoicePair list. Row i holds the
/// sums reachable from the first i pairs; row 0 is {0}.
class SumsetTable
{
public:
    SumsetTable(Modulus p, std::size_t pair_count);

    auto modulus() const noexcept -> Modulus { return _p; }
    auto prefix_count() const noexcept -> std::size_t { return _reachable.size(); }

    auto reachable(std::size_t prefix, Residue value) const -> bool;
    auto reachable_set(std::size_t prefix) const -> std::vector<Residue>;
    auto final_set() const -> std::vector<Residue> { return reachable_set(prefix_count() - 1); }

    /// For a value reachable after `prefix` pairs (prefix >= 1): which element
    /// of pair prefix-1 produced it. 'First' wins when both do.
    auto parent(std::size_t prefix, Residue value) const -> Choice;

private:
    friend auto reachable_sums(std::span<const ChoicePair>) -> SumsetTable;

    Modulus _p;
    std::vector<std::vector<std::uint8_t>> _reachable;
    std::vector<std::vector<Choice>> _parent;
};

/// Lower bound min{p, sum |A_i| - s + 1}.
auto cauchy_davenport_bound(std::span<const ChoicePair> pairs) -> std::size_t;

/// Throws ModulusMismatch on mixed moduli and TheoremViolation if the exact
/// set ever falls below the Cauchy-Davenport bound.
auto reachable_sums(std::span<const ChoicePair> pairs) -> SumsetTable;

/// One indicator per pair, summing to `target`. Throws Unreachable.
auto select_sequence(std::span<const ChoicePair> pairs, const ZpElement & target) -> std::vector<Choice>;

auto sequence_sum(std::span<const ChoicePair> pairs, std::span<const Choice> choices) -> ZpElement;

}
