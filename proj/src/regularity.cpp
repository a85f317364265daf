#include "zsramsey/embedder.hpp"

#include "zsramsey/error.hpp"

#include <algorithm>
#include <sstream>

namespace zsramsey {

auto RegularityTable::has_index(HostVertex u, std::size_t i) const -> bool
{
    return std::binary_search(I[u].begin(), I[u].end(), i);
}

auto RegularityTable::in_r(HostVertex u, HostVertex w) const -> bool
{
    return in_pool[w] && ! std::binary_search(L[u].begin(), L[u].end(), w);
}

auto RegularityTable::r_set(HostVertex u) const -> std::vector<HostVertex>
{
    std::vector<HostVertex> result;
    for (auto w : pool)
        if (in_r(u, w))
            result.push_back(w);
    return result;
}

auto make_regularity_table(const StuckState & stuck, std::size_t host_order) -> RegularityTable
{
    RegularityTable table;
    table.tau = stuck.tau;
    table.k = stuck.omega.size();
    table.k_tau = stuck.quota;
    table.k_prime = stuck.quota == 0 ? 0 : stuck.quota - 1;
    table.pool = stuck.state.pool;
    table.colorings = stuck.colorings;
    table.I.assign(host_order, {});
    table.L.assign(host_order, {});
    table.in_pool.assign(host_order, 0);
    for (auto w : table.pool)
        table.in_pool[w] = 1;
    return table;
}

auto regularity_violations(const EdgeColoring & c, const RegularityTable & table,
        std::size_t n, std::size_t p, std::size_t d) -> std::vector<std::string>
{
    const auto mod = c.modulus();
    std::vector<std::string> problems;
    auto complain = [&] (HostVertex u, const std::string & what) {
        problems.push_back("vertex " + std::to_string(u) + ": " + what);
    };

    auto needed = n + p + (2 + 3 * d) * table.k_prime;
    if (table.pool.size() < needed)
        problems.push_back("|R(tau)| = " + std::to_string(table.pool.size()) + " < " + std::to_string(needed));

    for (auto u : table.pool) {
        const auto & I = table.I[u];
        const auto & L = table.L[u];
        if (2 * I.size() <= table.k)
            complain(u, "|I_u| = " + std::to_string(I.size()) + " is not above k/2 = " + std::to_string(table.k) + "/2");
        if (! std::binary_search(L.begin(), L.end(), u))
            complain(u, "u is not in L_u");
        if (L.size() > table.k_tau)
            complain(u, "|L_u| = " + std::to_string(L.size()) + " exceeds k_tau = " + std::to_string(table.k_tau));

        auto r = table.r_set(u);
        if (r.empty())
            continue;
        const auto w0 = r.front();
        for (auto i : I) {
            const auto & C = table.colorings.values[i];
            auto base = mod.add(c(u, w0), C[w0]);
            for (auto w : r)
                if (mod.add(c(u, w), C[w]) != base) {
                    complain(u, "c(uw) + C_" + std::to_string(i) + "(w) not constant on R_u (w=" + std::to_string(w) + ")");
                    break;
                }
        }
        // C_i(w) - C_i(w0) must not depend on i within I_u.
        if (I.size() >= 2) {
            const auto & first = table.colorings.values[I.front()];
            for (std::size_t a = 1; a < I.size(); ++a) {
                const auto & other = table.colorings.values[I[a]];
                for (auto w : r)
                    if (mod.sub(first[w], first[w0]) != mod.sub(other[w], other[w0])) {
                        complain(u, "difference identity fails for indices " + std::to_string(I.front()) + ", " + std::to_string(I[a]));
                        break;
                    }
            }
        }
    }
    return problems;
}

auto regularity_analysis(const EmbedContext & ctx, const StuckState & stuck) -> RegularityTable
{
    const auto & c = ctx.coloring;
    auto table = make_regularity_table(stuck, c.order());

    for (auto u : table.pool) {
        auto procedure = regularity_procedure(c, u, table.pool, table.colorings);
        if (procedure.Q.size() >= table.k_tau) {
            std::ostringstream w;
            w << "{\"tau\":" << table.tau << ",\"u\":" << u << ",\"Q\":[";
            for (std::size_t a = 0; a < procedure.Q.size(); ++a)
                w << (a ? "," : "") << procedure.Q[a];
            w << "],\"k_tau\":" << table.k_tau << "}";
            ctx.violation("vertex " + std::to_string(u) + " is not regular at tau=" + std::to_string(table.tau), w.str());
        }
        table.I[u] = procedure.I;
        auto L = procedure.Q;
        L.push_back(u);
        std::sort(L.begin(), L.end());
        table.L[u] = std::move(L);
    }

    auto problems = regularity_violations(c, table, ctx.n(), ctx.p.value(), ctx.d());
    if (! problems.empty()) {
        std::ostringstream w;
        w << "{\"tau\":" << table.tau << ",\"problems\":[";
        for (std::size_t a = 0; a < problems.size() && a < 8; ++a)
            w << (a ? "," : "") << '"' << problems[a] << '"';
        w << "]}";
        ctx.violation(problems.front(), w.str());
    }

    std::ostringstream s;
    s << "regularity: tau=" << table.tau << " k=" << table.k << " k'=" << table.k_prime << " |R(tau)|=" << table.pool.size();
    ctx.note(s.str());
    return table;
}

}
