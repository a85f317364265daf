#include "zsramsey/graph.hpp"

#include "zsramsey/error.hpp"
#include "zsramsey/rng.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace zsramsey {

Graph::Graph(std::size_t vertex_count) :
    _adjacency(vertex_count)
{
}

auto Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) -> Graph
{
    Graph g(vertex_count);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

auto Graph::add_edge(Vertex u, Vertex v) -> void
{
    if (u == v)
        throw Error(ErrorKind::PreconditionViolation, "self-loop at " + std::to_string(u));
    if (u >= vertex_count() || v >= vertex_count())
        throw Error(ErrorKind::PreconditionViolation, "edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
    if (adjacent(u, v))
        throw Error(ErrorKind::PreconditionViolation, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));

    auto insert = [] (std::vector<Vertex> & list, Vertex x) {
        list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert(_adjacency[u], v);
    insert(_adjacency[v], u);
    _edges.emplace_back(std::min(u, v), std::max(u, v));
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    const auto & list = _adjacency.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

auto DegeneracyOrdering::later_neighbors(const Graph & g, Vertex v) const -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    for (auto w : g.neighbors(v))
        if (position[w] > position[v])
            result.push_back(w);
    return result;
}

auto degeneracy_order(const Graph & g) -> DegeneracyOrdering
{
    const auto n = g.vertex_count();
    DegeneracyOrdering result;
    result.position.assign(n, 0);

    std::vector<std::size_t> current(n);
    std::set<std::pair<std::size_t, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        current[v] = g.degree(v);
        queue.emplace(current[v], v);
    }

    std::vector<bool> removed(n, false);
    while (! queue.empty()) {
        auto [deg, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = true;
        result.position[v] = result.order.size();
        result.order.push_back(v);
        result.degeneracy = std::max(result.degeneracy, deg);
        for (auto w : g.neighbors(v))
            if (! removed[w]) {
                queue.erase({current[w], w});
                queue.emplace(--current[w], w);
            }
    }
    return result;
}

auto make_blueprint(const Graph & g, std::vector<Vertex> J, std::size_t extracted) -> Blueprint
{
    Blueprint bp;
    bp.J = std::move(J);
    bp.extracted = extracted;

    std::vector<bool> in_j(g.vertex_count(), false), in_u(g.vertex_count(), false);
    for (auto v : bp.J)
        in_j[v] = true;
    for (auto v : bp.J) {
        auto nbrs = g.neighbors(v);
        bp.neighborhoods.emplace_back(nbrs.begin(), nbrs.end());
        for (auto w : nbrs)
            in_u[w] = true;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in_u[v])
            bp.U.push_back(v);
        else if (! in_j[v])
            bp.Z.push_back(v);
    }
    return bp;
}

auto extract_blueprint(const Graph & g, std::size_t d, std::size_t s) -> Blueprint
{
    auto ordering = degeneracy_order(g);

    std::vector<bool> removed(g.vertex_count(), false);
    std::vector<Vertex> J;
    for (auto v : ordering.order) {
        auto deg = g.degree(v);
        if (deg < 1 || deg > 2 * d || removed[v])
            continue;
        J.push_back(v);
        for (auto w : g.neighbors(v))
            removed[w] = true;
    }

    auto extracted = J.size();
    if (extracted < s)
        throw Error(ErrorKind::InsufficientBlueprint,
                "extracted " + std::to_string(extracted) + " blueprint vertices, need " + std::to_string(s));
    J.resize(s);
    return make_blueprint(g, std::move(J), extracted);
}

auto max_degenerate_edges(std::size_t n, std::size_t d) -> std::size_t
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i)
        total += std::min(d, i);
    return total;
}

auto gen_degenerate_graph(std::size_t n, std::size_t d, std::size_t m, std::uint64_t seed) -> Graph
{
    auto limit = max_degenerate_edges(n, d);
    if (m > limit)
        throw Error(ErrorKind::InfeasibleParameters,
                "m=" + std::to_string(m) + " exceeds " + std::to_string(limit) + " edges for n=" + std::to_string(n) + ", d=" + std::to_string(d));

    Rng rng(seed);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    // Every vertex gets min(d, i) distinct back-edges to earlier vertices;
    // a uniform m-subset of those candidates is kept.
    std::vector<Edge> candidates;
    std::vector<Vertex> earlier;
    for (std::size_t i = 0; i < n; ++i) {
        earlier.assign(order.begin(), order.begin() + i);
        std::shuffle(earlier.begin(), earlier.end(), rng);
        for (std::size_t b = 0; b < std::min(d, i); ++b) {
            auto u = order[i], v = earlier[b];
            candidates.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    candidates.resize(m);
    std::sort(candidates.begin(), candidates.end());
    return Graph::from_edges(n, candidates);
}

}
