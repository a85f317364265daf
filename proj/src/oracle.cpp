#include "zsramsey/oracle.hpp"

#include "zsramsey/error.hpp"

#include <limits>
#include <sstream>

namespace zsramsey {

auto verify_zero_sum(const Graph & g, const Embedding & map, const EdgeColoring & c, Modulus p) -> VerificationReport
{
    VerificationReport report;
    const auto ell = c.order();

    report.in_range = map.map.size() == g.vertex_count();
    for (auto x : map.map)
        if (x >= ell)
            report.in_range = false;

    report.injective = true;
    std::vector<bool> seen(ell, false);
    for (auto x : map.map) {
        if (x >= ell)
            continue;
        if (seen[x])
            report.injective = false;
        seen[x] = true;
    }

    Residue sum = 0;
    for (auto [u, v] : g.edges()) {
        if (u >= map.map.size() || v >= map.map.size())
            continue;
        auto x = map.map[u], y = map.map[v];
        if (x >= ell || y >= ell || x == y)
            continue;
        auto color = c(x, y);
        report.per_edge_terms.push_back({ { u, v }, x, y, color });
        sum = p.reduce(std::int64_t { sum } + color);
    }
    report.edge_sum = sum;
    report.zero_sum = sum == 0;
    return report;
}

auto report_to_text(const VerificationReport & report) -> std::string
{
    std::ostringstream s;
    s << std::boolalpha
      << "injective: " << report.injective << '\n'
      << "in_range: " << report.in_range << '\n'
      << "edge_sum: " << report.edge_sum << '\n'
      << "zero_sum: " << report.zero_sum << '\n'
      << "passed: " << report.passed() << '\n';
    return s.str();
}

auto injection_count(std::size_t ell, std::size_t n) -> std::uint64_t
{
    if (n > ell)
        return 0;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        auto factor = static_cast<std::uint64_t>(ell - i);
        if (count > std::numeric_limits<std::uint64_t>::max() / factor)
            return std::numeric_limits<std::uint64_t>::max();
        count *= factor;
    }
    return count;
}

namespace
{
    // Depth-first over image tuples in lexicographic order. Adjacency to
    // earlier vertices is folded into a running sum.
    class InjectionSearch
    {
    public:
        InjectionSearch(const Graph & g, const EdgeColoring & c, Modulus p) :
            _g(g), _c(c), _p(p), _map(g.vertex_count(), unmapped), _used(c.order(), false)
        {
        }

        auto run() -> std::optional<Embedding>
        {
            if (extend(0, 0))
                return Embedding { _map };
            return std::nullopt;
        }

    private:
        auto extend(Vertex v, Residue sum) -> bool
        {
            if (v == _g.vertex_count())
                return sum == 0;
            for (HostVertex x = 0; x < _c.order(); ++x) {
                if (_used[x])
                    continue;
                Residue next = sum;
                for (auto w : _g.neighbors(v))
                    if (w < v)
                        next = _p.add(next, _c(x, _map[w]));
                _used[x] = true;
                _map[v] = x;
                if (extend(v + 1, next))
                    return true;
                _used[x] = false;
            }
            _map[v] = unmapped;
            return false;
        }

        const Graph & _g;
        const EdgeColoring & _c;
        Modulus _p;
        std::vector<HostVertex> _map;
        std::vector<bool> _used;
    };
}

auto brute_force_find(const Graph & g, const EdgeColoring & c, Modulus p) -> std::optional<Embedding>
{
    if (c.modulus() != p)
        throw Error(ErrorKind::ModulusMismatch, "coloring modulus differs from p");
    auto count = injection_count(c.order(), g.vertex_count());
    if (count > brute_force_budget)
        throw Error(ErrorKind::TooLarge, std::to_string(count) + " injections exceed the brute-force budget");
    if (count == 0)
        return std::nullopt;
    return InjectionSearch(g, c, p).run();
}

namespace
{
    // Every coloring of K_ell admits a zero-sum copy? Odometer over the pair
    // slots, early exit on the first coloring without a copy.
    auto every_coloring_has_copy(const Graph & g, Modulus p, std::size_t ell) -> bool
    {
        std::vector<std::pair<HostVertex, HostVertex>> slots;
        for (HostVertex x = 0; x < ell; ++x)
            for (HostVertex y = x + 1; y < ell; ++y)
                slots.emplace_back(x, y);

        EdgeColoring c(ell, p);
        std::vector<Residue> digits(slots.size(), 0);
        while (true) {
            if (! brute_force_find(g, c, p))
                return false;
            std::size_t i = 0;
            for (; i < digits.size(); ++i) {
                digits[i] = (digits[i] + 1) % p.value();
                c.set(slots[i].first, slots[i].second, digits[i]);
                if (digits[i] != 0)
                    break;
            }
            if (i == digits.size())
                return true;
        }
    }

    auto enumeration_cost(std::size_t ell, std::size_t n, Modulus p) -> std::uint64_t
    {
        constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
        std::uint64_t cost = injection_count(ell, n);
        for (std::size_t i = 0; i < ell * (ell - 1) / 2; ++i) {
            if (cost > cap / p.value())
                return cap;
            cost *= p.value();
        }
        return cost;
    }
}

auto exact_R(const Graph & g, Modulus p, std::size_t ell_max, std::uint64_t budget) -> std::optional<std::size_t>
{
    if (g.edge_count() % p.value() != 0)
        return std::nullopt;

    for (std::size_t ell = g.vertex_count(); ell <= ell_max; ++ell) {
        if (ell < 2) {
            // No pairs to color: the single empty coloring decides.
            if (brute_force_find(g, EdgeColoring(ell, p), p))
                return ell;
            continue;
        }
        if (enumeration_cost(ell, g.vertex_count(), p) > budget)
            throw Error(ErrorKind::TooLarge, "enumeration at ell=" + std::to_string(ell) + " exceeds the budget");
        if (! every_coloring_has_copy(g, p, ell))
            continue;

        // Restricting a coloring of K_{ell+1} to K_ell keeps the copy, so the
        // next order must pass too; a failure means the enumeration is wrong.
        auto next = ell + 1;
        if (next <= ell_max && enumeration_cost(next, g.vertex_count(), p) <= budget && ! every_coloring_has_copy(g, p, next))
            throw Error(ErrorKind::TheoremViolation, "monotonicity fails between ell=" + std::to_string(ell) + " and " + std::to_string(next));
        return ell;
    }
    return std::nullopt;
}

}
