#include "zsramsey/sumset.hpp"

#include "zsramsey/error.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace zsramsey {

ChoicePair::ChoicePair(ZpElement first, ZpElement second) :
    _first(first), _second(second)
{
    if (first.modulus() != second.modulus())
        throw Error(ErrorKind::ModulusMismatch, "choice pair mixes moduli");
}

SumsetTable::SumsetTable(Modulus p, std::size_t pair_count) :
    _p(p),
    _reachable(pair_count + 1, std::vector<std::uint8_t>(p.value(), 0)),
    _parent(pair_count + 1, std::vector<Choice>(p.value(), Choice::First))
{
    _reachable[0][0] = 1;
}

auto SumsetTable::reachable(std::size_t prefix, Residue value) const -> bool
{
    return _reachable.at(prefix).at(value) != 0;
}

auto SumsetTable::reachable_set(std::size_t prefix) const -> std::vector<Residue>
{
    std::vector<Residue> result;
    const auto & row = _reachable.at(prefix);
    for (Residue v = 0; v < row.size(); ++v)
        if (row[v])
            result.push_back(v);
    return result;
}

auto SumsetTable::parent(std::size_t prefix, Residue value) const -> Choice
{
    if (prefix == 0 || ! reachable(prefix, value))
        throw Error(ErrorKind::Unreachable, "no parent for value " + std::to_string(value) + " at prefix " + std::to_string(prefix));
    return _parent[prefix][value];
}

auto cauchy_davenport_bound(std::span<const ChoicePair> pairs) -> std::size_t
{
    if (pairs.empty())
        return 1;
    std::size_t total = 0;
    for (const auto & pair : pairs)
        total += pair.size();
    return std::min<std::size_t>(pairs.front().modulus().value(), total - pairs.size() + 1);
}

auto reachable_sums(std::span<const ChoicePair> pairs) -> SumsetTable
{
    if (pairs.empty())
        throw Error(ErrorKind::PreconditionViolation, "reachable_sums needs at least one pair");

    const Modulus p = pairs.front().modulus();
    for (const auto & pair : pairs)
        if (pair.modulus() != p)
            throw Error(ErrorKind::ModulusMismatch, "pairs over Z_" + std::to_string(p.value()) + " and Z_" + std::to_string(pair.modulus().value()));

    SumsetTable table(p, pairs.size());
    std::size_t weight = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto & prev = table._reachable[i];
        auto & next = table._reachable[i + 1];
        auto & parent = table._parent[i + 1];
        const Residue a = pairs[i].first().value(), b = pairs[i].second().value();

        // Second first, then First overwrites: ties resolve to First.
        for (Residue v = 0; v < p.value(); ++v)
            if (prev[v]) {
                auto to = p.add(v, b);
                next[to] = 1;
                parent[to] = Choice::Second;
            }
        for (Residue v = 0; v < p.value(); ++v)
            if (prev[v]) {
                auto to = p.add(v, a);
                next[to] = 1;
                parent[to] = Choice::First;
            }

        weight += pairs[i].size();
        auto bound = std::min<std::size_t>(p.value(), weight - (i + 1) + 1);
        auto size = static_cast<std::size_t>(std::count(next.begin(), next.end(), 1));
        if (size < bound) {
            std::ostringstream w;
            w << "{\"prefix\":" << i + 1 << ",\"size\":" << size << ",\"bound\":" << bound << "}";
            throw Error(ErrorKind::TheoremViolation, "reachable set below Cauchy-Davenport bound", w.str());
        }
    }
    return table;
}

auto select_sequence(std::span<const ChoicePair> pairs, const ZpElement & target) -> std::vector<Choice>
{
    auto table = reachable_sums(pairs);
    const Modulus p = table.modulus();
    if (target.modulus() != p)
        throw Error(ErrorKind::ModulusMismatch, "target is not in Z_" + std::to_string(p.value()));
    if (! table.reachable(pairs.size(), target.value()))
        throw Error(ErrorKind::Unreachable, "target " + std::to_string(target.value()) + " is not a reachable sum");

    std::vector<Choice> choices(pairs.size());
    Residue value = target.value();
    for (std::size_t i = pairs.size(); i > 0; --i) {
        auto choice = table.parent(i, value);
        choices[i - 1] = choice;
        const auto & chosen = choice == Choice::First ? pairs[i - 1].first() : pairs[i - 1].second();
        value = p.sub(value, chosen.value());
    }
    return choices;
}

auto sequence_sum(std::span<const ChoicePair> pairs, std::span<const Choice> choices) -> ZpElement
{
    if (pairs.size() != choices.size())
        throw Error(ErrorKind::PreconditionViolation, "choice count does not match pair count");
    if (pairs.empty())
        throw Error(ErrorKind::PreconditionViolation, "empty choice sequence has no modulus");
    ZpElement sum(0, pairs.front().modulus());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        sum = sum + (choices[i] == Choice::First ? pairs[i].first() : pairs[i].second());
    return sum;
}

}
