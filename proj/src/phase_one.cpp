#include "zsramsey/embedder.hpp"

#include "zsramsey/error.hpp"

#include <algorithm>
#include <sstream>

namespace zsramsey {

auto vertex_colorings(const EdgeColoring & c, const std::vector<std::vector<HostVertex>> & images) -> VertexColorings
{
    VertexColorings result;
    for (const auto & image : images) {
        std::vector<Residue> values(c.order(), 0);
        for (HostVertex w = 0; w < c.order(); ++w)
            if (std::find(image.begin(), image.end(), w) == image.end())
                values[w] = edge_sum_raw(c, w, image);
        result.values.push_back(std::move(values));
    }
    return result;
}

auto regularity_procedure(const EdgeColoring & c, HostVertex u, std::span<const HostVertex> pool,
        const VertexColorings & colorings) -> RegularityProcedure
{
    const auto p = c.modulus();
    const auto k = colorings.size();
    RegularityProcedure result;
    result.witness.assign(k, std::nullopt);
    result.gamma.assign(k, 0);

    std::vector<std::size_t> histogram(p.value());
    for (std::size_t i = 0; i < k; ++i) {
        const auto & C = colorings.values[i];
        std::fill(histogram.begin(), histogram.end(), 0);
        for (auto w : pool)
            if (w != u)
                ++histogram[p.add(c(u, w), C[w])];
        auto gamma = static_cast<Residue>(std::max_element(histogram.begin(), histogram.end()) - histogram.begin());
        result.gamma[i] = gamma;

        std::optional<HostVertex> deviant;
        for (auto w : pool)
            if (w != u && p.add(c(u, w), C[w]) != gamma
                    && std::find(result.Q.begin(), result.Q.end(), w) == result.Q.end()) {
                deviant = w;
                break;
            }

        if (deviant) {
            result.Q.push_back(*deviant);
            result.witness[i] = deviant;
        }
        else
            result.I.push_back(i);
    }
    return result;
}

auto step3_search(const EdgeColoring & c, HostVertex u_star, std::span<const HostVertex> pool,
        const VertexColorings & colorings, std::size_t quota) -> std::optional<Step3Assignment>
{
    const auto p = c.modulus();
    const auto k = colorings.size();
    auto procedure = regularity_procedure(c, u_star, pool, colorings);
    if (procedure.Q.size() < quota)
        return std::nullopt;

    Step3Assignment result;
    result.u_star = u_star;
    result.w.assign(k, unmapped);
    result.w_prime.assign(k, unmapped);

    std::vector<HostVertex> used(procedure.Q.begin(), procedure.Q.end());
    used.push_back(u_star);
    auto is_used = [&] (HostVertex x) { return std::find(used.begin(), used.end(), x) != used.end(); };

    std::size_t paired = 0;
    for (std::size_t i = 0; i < k && paired < quota; ++i) {
        if (! procedure.witness[i])
            continue;
        auto w_prime = *procedure.witness[i];
        const auto & C = colorings.values[i];
        auto beta = p.add(c(u_star, w_prime), C[w_prime]);

        std::optional<HostVertex> partner;
        for (auto w : pool)
            if (! is_used(w) && p.add(c(u_star, w), C[w]) != beta) {
                partner = w;
                break;
            }
        if (! partner)
            throw Error(ErrorKind::HostTooSmall, "pool of " + std::to_string(pool.size()) + " cannot supply a distinct partner vertex");

        result.w[i] = *partner;
        result.w_prime[i] = w_prime;
        used.push_back(*partner);
        ++paired;
    }

    // Equal singletons may reuse witnesses of indices left unpaired.
    std::vector<HostVertex> taken { u_star };
    for (std::size_t i = 0; i < k; ++i)
        if (result.w[i] != unmapped) {
            taken.push_back(result.w[i]);
            taken.push_back(result.w_prime[i]);
        }
    auto cursor = pool.begin();
    for (std::size_t i = 0; i < k; ++i) {
        if (result.w[i] != unmapped)
            continue;
        while (cursor != pool.end() && std::find(taken.begin(), taken.end(), *cursor) != taken.end())
            ++cursor;
        if (cursor == pool.end())
            throw Error(ErrorKind::HostTooSmall, "pool of " + std::to_string(pool.size()) + " cannot supply equal singletons");
        result.w[i] = result.w_prime[i] = *cursor;
        taken.push_back(*cursor);
    }
    return result;
}

namespace
{
    auto erase_from_pool(std::vector<HostVertex> & pool, HostVertex x) -> void
    {
        auto it = std::lower_bound(pool.begin(), pool.end(), x);
        if (it != pool.end() && *it == x)
            pool.erase(it);
    }

    auto take_lowest(std::vector<HostVertex> & pool, const char * what) -> HostVertex
    {
        if (pool.empty())
            throw Error(ErrorKind::HostTooSmall, std::string("host vertices exhausted while placing ") + what);
        auto x = pool.front();
        pool.erase(pool.begin());
        return x;
    }
}

auto phase_one(const EmbedContext & ctx, std::optional<std::size_t> force_stuck_at) -> PhaseOneOutcome
{
    const auto & g = ctx.graph;
    const auto & sched = ctx.schedule;
    const auto & bp = ctx.blueprint();
    const auto & c = ctx.coloring;

    PhaseOneState state;
    state.f.assign(g.vertex_count(), unmapped);
    state.h.assign(bp.s(), unmapped);
    state.h_prime.assign(bp.s(), unmapped);
    state.pool.resize(c.order());
    for (HostVertex x = 0; x < c.order(); ++x)
        state.pool[x] = x;

    std::vector<bool> touches_prefix(g.vertex_count(), false);
    for (std::size_t i = 0; i < sched.s_prime; ++i)
        for (auto u : bp.neighborhoods[i])
            touches_prefix[u] = true;

    for (std::size_t j = 0; j < sched.t_prime; ++j) {
        const auto u = sched.ordered_u[j];
        const auto & omega = sched.omega[j];

        if (! touches_prefix[u]) {
            state.deferred.push_back(u);
            continue;
        }
        if (omega.empty()) {
            state.f[u] = take_lowest(state.pool, "U");
            continue;
        }

        std::vector<std::vector<HostVertex>> images;
        for (auto i : omega) {
            std::vector<HostVertex> image;
            for (auto x : bp.neighborhoods[i])
                if (x != u)
                    image.push_back(state.f[x]);
            images.push_back(std::move(image));
        }
        auto colorings = vertex_colorings(c, images);
        const auto quota = sched.quotas[j];

        std::optional<Step3Assignment> found;
        if (force_stuck_at != j)
            for (auto u_star : state.pool)
                if ((found = step3_search(c, u_star, state.pool, colorings, quota)))
                    break;

        if (! found) {
            std::ostringstream s;
            s << "phase1: stuck tau=" << j << " k=" << omega.size() << " k_tau=" << quota << " pool=" << state.pool.size();
            ctx.note(s.str());
            return StuckState { j, std::move(state), omega, quota, std::move(colorings) };
        }

        state.f[u] = found->u_star;
        erase_from_pool(state.pool, found->u_star);
        for (std::size_t a = 0; a < omega.size(); ++a) {
            state.h[omega[a]] = found->w[a];
            state.h_prime[omega[a]] = found->w_prime[a];
            erase_from_pool(state.pool, found->w[a]);
            erase_from_pool(state.pool, found->w_prime[a]);
        }
    }

    // Everything not placed yet: f in vertex order, then h = h' on J \ J'.
    std::vector<bool> in_j(g.vertex_count(), false);
    for (auto v : bp.J)
        in_j[v] = true;
    EmbeddingTriple triple { std::move(state.f), std::move(state.h), std::move(state.h_prime) };
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (! in_j[v] && triple.f[v] == unmapped)
            triple.f[v] = take_lowest(state.pool, "U and Z");
    for (std::size_t i = sched.s_prime; i < bp.s(); ++i)
        triple.h[i] = triple.h_prime[i] = take_lowest(state.pool, "J \\ J'");

    ctx.note("phase1: success after " + std::to_string(sched.t_prime) + " steps");
    return triple;
}

}
