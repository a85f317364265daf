#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's algorithms; only its plain data types are shared.

#include "zsramsey/coloring.hpp"
#include "zsramsey/embedder.hpp"
#include "zsramsey/error.hpp"
#include "zsramsey/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace zsramsey::test {

inline auto graph_of(std::size_t n, std::initializer_list<Edge> edges) -> Graph
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

inline auto kind_of(const std::function<void()> & f) -> std::optional<ErrorKind>
{
    try {
        f();
    }
    catch (const Error & e) {
        return e.kind();
    }
    return std::nullopt;
}

/// Smallest max-later-degree over every vertex ordering.
inline auto brute_force_degeneracy(const Graph & g) -> std::size_t
{
    std::vector<Vertex> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::size_t best = g.vertex_count();
    do {
        std::vector<std::size_t> pos(order.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            pos[order[i]] = i;
        std::size_t worst = 0;
        for (auto v : order) {
            std::size_t later = 0;
            for (auto w : g.neighbors(v))
                later += pos[w] > pos[v];
            worst = std::max(worst, later);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(order.begin(), order.end()));
    return g.vertex_count() == 0 ? 0 : best;
}

/// Largest independent set among vertices whose degree lies in [lo, hi].
inline auto brute_force_window_independent(const Graph & g, std::size_t lo, std::size_t hi) -> std::size_t
{
    std::vector<Vertex> eligible;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= lo && g.degree(v) <= hi)
            eligible.push_back(v);
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t { 1 } << eligible.size()); ++mask) {
        bool independent = true;
        std::size_t size = 0;
        for (std::size_t a = 0; a < eligible.size() && independent; ++a) {
            if (! (mask >> a & 1))
                continue;
            ++size;
            for (std::size_t b = a + 1; b < eligible.size(); ++b)
                if ((mask >> b & 1) && g.adjacent(eligible[a], eligible[b]))
                    independent = false;
        }
        if (independent)
            best = std::max(best, size);
    }
    return best;
}

/// Every sum of one element per pair, by full enumeration.
inline auto brute_force_sums(const std::vector<std::pair<Residue, Residue>> & pairs, std::uint32_t p) -> std::set<Residue>
{
    std::set<Residue> sums;
    for (std::uint64_t mask = 0; mask < (std::uint64_t { 1 } << pairs.size()); ++mask) {
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            total += (mask >> i & 1) ? pairs[i].second : pairs[i].first;
        sums.insert(static_cast<Residue>(total % p));
    }
    return sums;
}

struct Check
{
    bool injective = true;
    bool in_range = true;
    std::uint64_t sum = 0;
};

/// Recomputes the edge sum of an embedding straight from the coloring.
inline auto check_embedding(const Graph & g, const std::vector<HostVertex> & map, const EdgeColoring & c) -> Check
{
    Check result;
    if (map.size() != g.vertex_count())
        return { false, false, 0 };
    std::set<HostVertex> seen;
    for (auto x : map) {
        if (x >= c.order())
            result.in_range = false;
        if (! seen.insert(x).second)
            result.injective = false;
    }
    if (! result.in_range)
        return result;
    for (auto [u, v] : g.edges())
        result.sum += c(map[u], map[v]);
    result.sum %= c.modulus().value();
    return result;
}

inline auto is_zero_sum(const Graph & g, const std::vector<HostVertex> & map, const EdgeColoring & c) -> bool
{
    auto r = check_embedding(g, map, c);
    return r.injective && r.in_range && r.sum == 0;
}

/// Injective and adjacency preserving into a host graph.
inline auto is_graph_embedding(const Graph & g, const std::vector<HostVertex> & map, const Graph & host) -> bool
{
    if (map.size() != g.vertex_count())
        return false;
    std::set<HostVertex> seen;
    for (auto x : map)
        if (x >= host.vertex_count() || ! seen.insert(x).second)
            return false;
    for (auto [u, v] : g.edges())
        if (! host.adjacent(map[u], map[v]))
            return false;
    return true;
}

/// Whether any injection of g into host preserves adjacency.
inline auto graph_embedding_exists(const Graph & g, const Graph & host) -> bool
{
    const auto n = g.vertex_count(), ell = host.vertex_count();
    if (n > ell)
        return false;
    std::vector<HostVertex> map(n);
    std::vector<bool> used(ell, false);
    std::function<bool(std::size_t)> extend = [&] (std::size_t v) {
        if (v == n)
            return true;
        for (HostVertex x = 0; x < ell; ++x) {
            if (used[x])
                continue;
            bool ok = true;
            for (auto w : g.neighbors(static_cast<Vertex>(v)))
                if (w < v && ! host.adjacent(map[w], x))
                    ok = false;
            if (! ok)
                continue;
            used[x] = true;
            map[v] = x;
            if (extend(v + 1))
                return true;
            used[x] = false;
        }
        return false;
    };
    return extend(0);
}

/// Whether some injection of g into the colored host is zero-sum.
inline auto zero_sum_copy_exists(const Graph & g, const EdgeColoring & c) -> bool
{
    const auto n = g.vertex_count(), ell = c.order();
    if (n > ell)
        return false;
    std::vector<HostVertex> map(n);
    std::vector<bool> used(ell, false);
    std::function<bool(std::size_t)> extend = [&] (std::size_t v) {
        if (v == n)
            return is_zero_sum(g, map, c);
        for (HostVertex x = 0; x < ell; ++x) {
            if (used[x])
                continue;
            used[x] = true;
            map[v] = x;
            if (extend(v + 1))
                return true;
            used[x] = false;
        }
        return false;
    };
    return extend(0);
}

/// Smallest ell <= ell_max for which every coloring of K_ell holds a zero-sum
/// copy, by enumerating all colorings.
inline auto reference_exact_R(const Graph & g, Modulus p, std::size_t ell_max) -> std::optional<std::size_t>
{
    for (std::size_t ell = std::max<std::size_t>(g.vertex_count(), 1); ell <= ell_max; ++ell) {
        std::vector<std::pair<HostVertex, HostVertex>> slots;
        for (HostVertex x = 0; x < ell; ++x)
            for (HostVertex y = x + 1; y < ell; ++y)
                slots.emplace_back(x, y);
        std::uint64_t total = 1;
        for (std::size_t a = 0; a < slots.size(); ++a)
            total *= p.value();
        bool every = true;
        for (std::uint64_t code = 0; code < total && every; ++code) {
            EdgeColoring c(ell, p);
            auto rest = code;
            for (auto [x, y] : slots) {
                c.set(x, y, static_cast<Residue>(rest % p.value()));
                rest /= p.value();
            }
            every = zero_sum_copy_exists(g, c);
        }
        if (every)
            return ell;
    }
    return std::nullopt;
}

/// The three structural conditions on an (f, h, h') triple, plus the count of
/// indices whose two candidate sums differ.
struct TripleCheck
{
    bool f_h_injective = true;
    bool f_h_prime_injective = true;
    bool cross_distinct = true;
    std::size_t unequal = 0;
};

inline auto check_triple(const Graph & g, const Blueprint & bp, const EmbeddingTriple & t, const EdgeColoring & c) -> TripleCheck
{
    TripleCheck result;
    std::set<Vertex> J(bp.J.begin(), bp.J.end());
    std::vector<HostVertex> base;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (! J.count(v))
            base.push_back(t.f[v]);
    auto injective = [&] (const std::vector<HostVertex> & extra) {
        std::set<HostVertex> seen;
        for (auto x : base)
            if (x >= c.order() || ! seen.insert(x).second)
                return false;
        for (auto x : extra)
            if (x >= c.order() || ! seen.insert(x).second)
                return false;
        return true;
    };
    result.f_h_injective = injective(t.h);
    result.f_h_prime_injective = injective(t.h_prime);
    for (std::size_t i = 0; i < bp.s(); ++i)
        for (std::size_t j = 0; j < bp.s(); ++j)
            if (i != j && t.h[i] == t.h_prime[j])
                result.cross_distinct = false;
    for (std::size_t i = 0; i < bp.s(); ++i) {
        std::uint64_t a = 0, b = 0;
        for (auto u : bp.neighborhoods[i]) {
            a += c(t.h[i], t.f[u]);
            b += c(t.h_prime[i], t.f[u]);
        }
        result.unequal += (a % c.modulus().value()) != (b % c.modulus().value());
    }
    return result;
}

inline auto triple_ok(const Graph & g, const Blueprint & bp, const EmbeddingTriple & t, const EdgeColoring & c) -> bool
{
    auto r = check_triple(g, bp, t, c);
    return r.f_h_injective && r.f_h_prime_injective && r.cross_distinct && r.unequal >= c.modulus().value();
}

/// Complete graph on `order` vertices minus random edges, keeping every
/// vertex's missing degree at most `cap`.
template <typename Rng>
auto dense_host(std::size_t order, std::size_t cap, Rng & rng) -> Graph
{
    std::vector<std::size_t> missing(order, 0);
    Graph host(order);
    std::uniform_int_distribution<int> coin(0, 2);
    for (HostVertex x = 0; x < order; ++x)
        for (HostVertex y = x + 1; y < order; ++y) {
            if (missing[x] < cap && missing[y] < cap && coin(rng) == 0) {
                ++missing[x];
                ++missing[y];
                continue;
            }
            host.add_edge(x, y);
        }
    return host;
}

}
