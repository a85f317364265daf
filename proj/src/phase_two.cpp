#include "zsramsey/embedder.hpp"

#include "zsramsey/error.hpp"

#include <algorithm>
#include <sstream>

namespace zsramsey {

namespace
{
    auto contains(const std::vector<HostVertex> & xs, HostVertex x) -> bool
    {
        return std::find(xs.begin(), xs.end(), x) != xs.end();
    }

    auto sorted_contains(const std::vector<HostVertex> & xs, HostVertex x) -> bool
    {
        return std::binary_search(xs.begin(), xs.end(), x);
    }

    auto list(std::ostream & s, std::span<const HostVertex> xs) -> void
    {
        s << '[';
        for (std::size_t a = 0; a < xs.size(); ++a)
            s << (a ? "," : "") << xs[a];
        s << ']';
    }
}

auto region_irregularities(const RegularityTable & table, std::span<const HostVertex> region) -> std::vector<std::string>
{
    std::vector<std::uint8_t> in_region(table.in_pool.size(), 0);
    for (auto w : region)
        in_region[w] = 1;

    std::vector<std::string> problems;
    for (auto w : region) {
        std::vector<HostVertex> targets;
        for (auto x : region)
            if (table.in_r(w, x))
                targets.push_back(x);
        if (targets.empty())
            continue;
        for (auto q : table.I[w]) {
            const auto & C = table.colorings.values[q];
            auto value = C[targets.front()];
            for (auto x : targets)
                if (C[x] != value) {
                    problems.push_back("C_" + std::to_string(q) + " not constant on R_" + std::to_string(w) + " within the region");
                    break;
                }
        }
    }
    return problems;
}

auto phase_two_attempt(const EmbedContext & ctx, const RegularityTable & table,
        std::span<const HostVertex> pool_subset) -> PhaseTwoOutcome
{
    const auto & g = ctx.graph;
    const auto & bp = ctx.blueprint();
    const auto & c = ctx.coloring;
    const std::size_t p = ctx.p.value();

    PhaseTwoState state;
    for (std::size_t i = 0; i < p; ++i)
        for (auto u : bp.neighborhoods[i])
            state.U_prime.push_back(u);
    std::sort(state.U_prime.begin(), state.U_prime.end());
    state.U_prime.erase(std::unique(state.U_prime.begin(), state.U_prime.end()), state.U_prime.end());

    std::size_t best = 0;
    for (std::size_t rho = 0; rho < table.k; ++rho) {
        std::size_t size = 0;
        for (auto u : pool_subset)
            size += table.has_index(u, rho);
        if (size > best) {
            best = size;
            state.rho = rho;
        }
    }
    if (best < state.U_prime.size())
        throw Error(ErrorKind::PoolExhausted,
                "largest T_rho has " + std::to_string(best) + " vertices, |U'| = " + std::to_string(state.U_prime.size()));

    for (auto u : pool_subset)
        if (state.P.size() < state.U_prime.size() && table.has_index(u, state.rho))
            state.P.push_back(u);

    auto f_prime = [&] (Vertex v) {
        auto at = std::lower_bound(state.U_prime.begin(), state.U_prime.end(), v) - state.U_prime.begin();
        return state.P[at];
    };
    std::vector<std::vector<HostVertex>> images(p);
    for (std::size_t i = 0; i < p; ++i)
        for (auto v : bp.neighborhoods[i])
            images[i].push_back(f_prime(v));

    const std::vector<HostVertex> P_sorted = [&] { auto x = state.P; std::sort(x.begin(), x.end()); return x; }();

    for (std::size_t i = 0; i < p; ++i) {
        std::vector<HostVertex> blocked;
        for (auto r : images[i])
            blocked.insert(blocked.end(), table.L[r].begin(), table.L[r].end());
        std::sort(blocked.begin(), blocked.end());
        blocked.erase(std::unique(blocked.begin(), blocked.end()), blocked.end());

        std::optional<HostVertex> anchor;
        for (auto x : pool_subset)
            if (! sorted_contains(P_sorted, x) && ! contains(state.anchors, x) && ! sorted_contains(blocked, x)) {
                anchor = x;
                break;
            }
        if (! anchor)
            throw Error(ErrorKind::PoolExhausted, "no anchor available for J index " + std::to_string(i));
        state.anchors.push_back(*anchor);
        state.blocked.push_back(std::move(blocked));
    }

    for (std::size_t i = 0; i < p; ++i) {
        auto target = edge_sum_raw(c, state.anchors[i], images[i]);
        std::optional<HostVertex> partner;
        for (auto x : table.pool)
            if (! sorted_contains(P_sorted, x) && ! contains(state.anchors, x) && ! contains(state.partners, x)
                    && edge_sum_raw(c, x, images[i]) != target) {
                partner = x;
                break;
            }
        if (partner) {
            state.partners.push_back(*partner);
            continue;
        }

        state.stuck_at = i;
        std::vector<HostVertex> region;
        for (auto x : table.pool) {
            bool excluded = sorted_contains(P_sorted, x) || contains(state.partners, x)
                || sorted_contains(state.blocked[i], x)
                || (contains(state.anchors, x) && x != state.anchors[i]);
            if (! excluded)
                region.push_back(x);
        }

        const auto d = ctx.d();
        auto loss = (2 + 2 * d) * p + 2 * d * table.k_prime;
        if (table.pool.size() >= loss && region.size() < table.pool.size() - loss) {
            std::ostringstream w;
            w << "{\"i_star\":" << i << ",\"region_size\":" << region.size() << ",\"pool_size\":" << table.pool.size() << "}";
            ctx.violation("|R(P)| below |R(tau)| - (2+2d)p - 2dk'", w.str());
        }
        auto problems = region_irregularities(table, region);
        if (! problems.empty()) {
            std::ostringstream w;
            w << "{\"i_star\":" << i << ",\"rho\":" << state.rho << ",\"region\":";
            list(w, region);
            w << "}";
            ctx.violation(problems.front(), w.str());
        }

        std::ostringstream s;
        s << "phase2: rho=" << state.rho << " stuck i*=" << i << " region=" << region.size();
        ctx.note(s.str());
        return PhaseTwoRegion { std::move(region), std::move(state) };
    }

    // Success: lay out the remaining vertices from what is left of R(tau).
    std::vector<HostVertex> leftover;
    for (auto x : table.pool)
        if (! sorted_contains(P_sorted, x) && ! contains(state.anchors, x) && ! contains(state.partners, x))
            leftover.push_back(x);
    auto cursor = leftover.begin();
    auto next = [&] (const char * what) {
        if (cursor == leftover.end())
            throw Error(ErrorKind::PoolExhausted, std::string("leftover pool exhausted while placing ") + what);
        return *cursor++;
    };

    EmbeddingTriple triple;
    triple.f.assign(g.vertex_count(), unmapped);
    triple.h.assign(bp.s(), unmapped);
    triple.h_prime.assign(bp.s(), unmapped);
    for (std::size_t i = 0; i < p; ++i) {
        triple.h[i] = state.anchors[i];
        triple.h_prime[i] = state.partners[i];
    }
    for (std::size_t a = 0; a < state.U_prime.size(); ++a)
        triple.f[state.U_prime[a]] = state.P[a];
    for (std::size_t i = p; i < bp.s(); ++i)
        triple.h[i] = triple.h_prime[i] = next("J beyond the first p");

    std::vector<bool> in_j(g.vertex_count(), false);
    for (auto v : bp.J)
        in_j[v] = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (! in_j[v] && triple.f[v] == unmapped)
            triple.f[v] = next("U \\ U' and Z");

    ctx.note("phase2: rho=" + std::to_string(state.rho) + " success");
    return triple;
}

}
