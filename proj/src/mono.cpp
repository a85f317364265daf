#include "zsramsey/embedder.hpp"

#include "zsramsey/error.hpp"

#include <algorithm>
#include <sstream>

namespace zsramsey {

auto mono_region(const EmbedContext & ctx, std::span<const HostVertex> region_a,
        std::span<const HostVertex> region_b, const RegularityTable & table) -> MonoRegion
{
    const auto & c = ctx.coloring;
    const auto k_prime = table.k_prime;

    std::vector<HostVertex> a(region_a.begin(), region_a.end()), b(region_b.begin(), region_b.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<HostVertex> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    if (both.size() <= k_prime)
        ctx.violation("|R(A) & R(B)| = " + std::to_string(both.size()) + " is not above k' = " + std::to_string(k_prime));

    MonoRegion result;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result.region));

    for (auto w : result.region) {
        std::optional<Residue> constant;
        for (auto x : result.region) {
            if (! table.in_r(w, x))
                continue;
            if (! constant)
                constant = c(w, x);
            else if (c(w, x) != *constant) {
                std::ostringstream s;
                s << "{\"w\":" << w << ",\"x\":" << x << ",\"expected\":" << *constant << ",\"got\":" << c(w, x) << "}";
                ctx.violation("c(ww') not constant on R_w within the region at w=" + std::to_string(w), s.str());
            }
        }
        if (! constant)
            ctx.violation("R_w meets the region in no vertex at w=" + std::to_string(w));
        result.vertex_color.push_back(*constant);
    }

    std::vector<std::size_t> histogram(ctx.p.value(), 0);
    for (std::size_t x = 0; x < result.region.size(); ++x)
        for (std::size_t y = x + 1; y < result.region.size(); ++y)
            ++histogram[c(result.region[x], result.region[y])];
    result.majority = static_cast<Residue>(std::max_element(histogram.begin(), histogram.end()) - histogram.begin());

    for (std::size_t x = 0; x < result.region.size(); ++x)
        if (result.vertex_color[x] == result.majority)
            result.host_labels.push_back(result.region[x]);

    const auto size = result.host_labels.size();
    result.host = Graph(size);
    std::vector<std::size_t> off_color(size, 0);
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = x + 1; y < size; ++y) {
            if (c(result.host_labels[x], result.host_labels[y]) == result.majority)
                result.host.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(y));
            else {
                ++off_color[x];
                ++off_color[y];
            }
        }

    auto needed = ctx.n() + ctx.d() * k_prime;
    if (size < needed)
        ctx.violation("|V(H)| = " + std::to_string(size) + " < n + dk' = " + std::to_string(needed));
    for (std::size_t x = 0; x < size; ++x)
        if (off_color[x] > k_prime)
            ctx.violation("vertex " + std::to_string(result.host_labels[x]) + " has " + std::to_string(off_color[x])
                    + " off-color edges in H, more than k' = " + std::to_string(k_prime));

    std::ostringstream s;
    s << "mono-region: g=" << result.majority << " |R|=" << result.region.size() << " |V(H)|=" << size;
    ctx.note(s.str());
    return result;
}

auto mono_embed(const Graph & g, const DegeneracyOrdering & ordering, const Graph & host) -> Embedding
{
    const auto n = g.vertex_count();
    Embedding result;
    result.map.assign(n, unmapped);
    std::vector<bool> used(host.vertex_count(), false);

    for (std::size_t idx = n; idx-- > 0;) {
        const auto v = ordering.order[idx];
        auto later = ordering.later_neighbors(g, v);

        std::optional<HostVertex> chosen;
        if (later.empty()) {
            for (HostVertex x = 0; x < host.vertex_count(); ++x)
                if (! used[x]) {
                    chosen = x;
                    break;
                }
        }
        else {
            for (auto x : host.neighbors(result.map[later.front()])) {
                if (used[x])
                    continue;
                bool common = true;
                for (std::size_t a = 1; a < later.size() && common; ++a)
                    common = host.adjacent(result.map[later[a]], x);
                if (common) {
                    chosen = x;
                    break;
                }
            }
        }
        if (! chosen)
            throw Error(ErrorKind::PreconditionViolation,
                    "joint neighborhood of the images of the " + std::to_string(later.size()) + " later neighbors of vertex "
                    + std::to_string(v) + " is exhausted");
        result.map[v] = *chosen;
        used[*chosen] = true;
    }
    return result;
}

}
