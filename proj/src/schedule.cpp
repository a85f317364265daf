#include "zsramsey/embedder.hpp"

#include "zsramsey/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zsramsey {

auto build_schedule(const Blueprint & bp, Modulus p) -> ProcessSchedule
{
    const std::size_t s = bp.s();
    if (s != 2 * std::size_t{p.value()})
        throw Error(ErrorKind::PreconditionViolation,
                "schedule needs a blueprint of 2p=" + std::to_string(2 * p.value()) + " vertices, got " + std::to_string(s));

    Vertex max_vertex = 0;
    for (auto u : bp.U)
        max_vertex = std::max(max_vertex, u);
    std::vector<std::size_t> degree(std::size_t{max_vertex} + 1, 0);
    for (const auto & nbrs : bp.neighborhoods)
        for (auto u : nbrs)
            ++degree[u];

    ProcessSchedule sched;
    sched.ordered_u = bp.U;
    std::stable_sort(sched.ordered_u.begin(), sched.ordered_u.end(), [&] (Vertex a, Vertex b) {
        return degree[a] != degree[b] ? degree[a] > degree[b] : a < b;
    });

    std::vector<std::size_t> position(degree.size(), 0);
    for (std::size_t j = 0; j < sched.ordered_u.size(); ++j) {
        position[sched.ordered_u[j]] = j;
        sched.degree_into_j.push_back(degree[sched.ordered_u[j]]);
    }

    std::vector<std::size_t> last(s, 0);
    for (std::size_t i = 0; i < s; ++i)
        for (auto u : bp.neighborhoods[i])
            last[i] = std::max(last[i], position[u]);

    // psi over positions in the original indexing, to find t'.
    std::vector<std::size_t> omega_size(sched.ordered_u.size(), 0);
    for (std::size_t i = 0; i < s; ++i)
        ++omega_size[last[i]];
    std::size_t psi = 0, t_prime = 0;
    while (psi < p.value()) {
        psi += (omega_size[t_prime] + 1) / 2;
        ++t_prime;
    }
    sched.t_prime = t_prime;

    // Reindex J: J' first, by (last, original index); then the rest in order.
    std::vector<std::size_t> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&] (std::size_t a, std::size_t b) {
        bool in_a = last[a] < t_prime, in_b = last[b] < t_prime;
        if (in_a != in_b)
            return in_a;
        if (in_a && last[a] != last[b])
            return last[a] < last[b];
        return a < b;
    });

    sched.blueprint = bp;
    sched.blueprint.J.clear();
    sched.blueprint.neighborhoods.clear();
    for (auto i : perm) {
        sched.blueprint.J.push_back(bp.J[i]);
        sched.blueprint.neighborhoods.push_back(bp.neighborhoods[i]);
        sched.last_index.push_back(last[i]);
    }

    sched.omega.assign(sched.ordered_u.size(), {});
    for (std::size_t i = 0; i < s; ++i) {
        sched.omega[sched.last_index[i]].push_back(i);
        if (sched.last_index[i] < t_prime)
            ++sched.s_prime;
    }

    std::size_t before = 0;
    for (std::size_t j = 0; j < t_prime; ++j) {
        auto k = (sched.omega[j].size() + 1) / 2;
        if (j + 1 == t_prime)
            k = p.value() - before;
        sched.quotas.push_back(k);
        before += k;
    }
    return sched;
}

auto count_unequal(const Blueprint & bp, const EmbeddingTriple & triple, const EdgeColoring & c) -> std::size_t
{
    std::size_t count = 0;
    std::vector<HostVertex> images;
    for (std::size_t i = 0; i < bp.s(); ++i) {
        images.clear();
        for (auto u : bp.neighborhoods[i])
            images.push_back(triple.f[u]);
        if (edge_sum_raw(c, triple.h[i], images) != edge_sum_raw(c, triple.h_prime[i], images))
            ++count;
    }
    return count;
}

auto triple_violations(const Graph & g, const Blueprint & bp, const EmbeddingTriple & triple,
        const EdgeColoring & c, std::size_t p) -> std::vector<std::string>
{
    std::vector<std::string> problems;
    const auto order = c.order();
    if (triple.f.size() != g.vertex_count() || triple.h.size() != bp.s() || triple.h_prime.size() != bp.s()) {
        problems.emplace_back("triple has the wrong shape");
        return problems;
    }

    std::vector<bool> in_j(g.vertex_count(), false);
    for (auto v : bp.J)
        in_j[v] = true;

    std::vector<int> f_owner(order, -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in_j[v])
            continue;
        auto x = triple.f[v];
        if (x >= order) {
            problems.push_back("f(" + std::to_string(v) + ") undefined or out of range");
            continue;
        }
        if (f_owner[x] != -1)
            problems.push_back("f not injective at host vertex " + std::to_string(x));
        f_owner[x] = static_cast<int>(v);
    }

    std::vector<int> h_owner(order, -1), hp_owner(order, -1);
    for (std::size_t i = 0; i < bp.s(); ++i) {
        auto x = triple.h[i], y = triple.h_prime[i];
        if (x >= order || y >= order) {
            problems.push_back("h or h' undefined at J index " + std::to_string(i));
            continue;
        }
        if (h_owner[x] != -1)
            problems.push_back("h not injective at host vertex " + std::to_string(x));
        if (hp_owner[y] != -1)
            problems.push_back("h' not injective at host vertex " + std::to_string(y));
        h_owner[x] = hp_owner[y] = static_cast<int>(i);
    }
    if (! problems.empty())
        return problems;

    for (std::size_t i = 0; i < bp.s(); ++i) {
        auto x = triple.h[i], y = triple.h_prime[i];
        if (f_owner[x] != -1 || f_owner[y] != -1)
            problems.push_back("image of f meets h or h' at J index " + std::to_string(i));
        if (hp_owner[x] != -1 && hp_owner[x] != static_cast<int>(i))
            problems.push_back("h(v_" + std::to_string(i) + ") = h'(v_" + std::to_string(hp_owner[x]) + ")");
    }

    auto unequal = count_unequal(bp, triple, c);
    if (unequal < p)
        problems.push_back("only " + std::to_string(unequal) + " unequal indices, need " + std::to_string(p));
    return problems;
}

auto EmbedContext::note(std::string event) const -> void
{
    if (trace)
        trace->note(std::move(event));
}

auto EmbedContext::violation(const std::string & message, std::string witness) const -> void
{
    throw Error(hypotheses_hold ? ErrorKind::TheoremViolation : ErrorKind::GuaranteeLapsed, message, std::move(witness));
}

}
