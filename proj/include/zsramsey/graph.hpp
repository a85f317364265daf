#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zsramsey {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept
/// sorted; edges() lists each edge once as (u, v) with u < v, in insertion
/// order.
class Graph
{
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count);

    static auto from_edges(std::size_t vertex_count, std::span<const Edge> edges) -> Graph;

    /// Throws PreconditionViolation on self-loops, duplicates, or out-of-range ends.
    auto add_edge(Vertex u, Vertex v) -> void;

    auto vertex_count() const noexcept -> std::size_t { return _adjacency.size(); }
    auto edge_count() const noexcept -> std::size_t { return _edges.size(); }
    auto edges() const noexcept -> std::span<const Edge> { return _edges; }
    auto neighbors(Vertex v) const -> std::span<const Vertex> { return _adjacency.at(v); }
    auto degree(Vertex v) const -> std::size_t { return _adjacency.at(v).size(); }
    auto adjacent(Vertex u, Vertex v) const -> bool;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    std::vector<std::vector<Vertex>> _adjacency;
    std::vector<Edge> _edges;
};

struct DegeneracyOrdering
{
    std::vector<Vertex> order;
    std::vector<std::size_t> position;
    std::size_t degeneracy = 0;

    /// Neighbors of v placed later in the order.
    auto later_neighbors(const Graph & g, Vertex v) const -> std::vector<Vertex>;
};

/// Min-degree peeling, ties by lowest vertex index.
auto degeneracy_order(const Graph & g) -> DegeneracyOrdering;

/// The independent set J of low-degree, non-isolated vertices, with the
/// neighborhoods N_i, their union U and the rest Z.
struct Blueprint
{
    std::vector<Vertex> J;
    std::vector<std::vector<Vertex>> neighborhoods;
    std::vector<Vertex> U;
    std::vector<Vertex> Z;
    // |J| before truncation to s.
    std::size_t extracted = 0;

    auto s() const noexcept -> std::size_t { return J.size(); }
};

auto make_blueprint(const Graph & g, std::vector<Vertex> J, std::size_t extracted) -> Blueprint;

/// Greedy extraction over the degree-window vertices in degeneracy order,
/// truncated to the first s picks. Throws InsufficientBlueprint.
auto extract_blueprint(const Graph & g, std::size_t d, std::size_t s) -> Blueprint;

auto max_degenerate_edges(std::size_t n, std::size_t d) -> std::size_t;

/// Random graph with exactly m edges and a vertex order of forward degree <= d.
/// Throws InfeasibleParameters.
auto gen_degenerate_graph(std::size_t n, std::size_t d, std::size_t m, std::uint64_t seed) -> Graph;

auto write_graph(std::ostream & out, const Graph & g) -> void;
auto graph_to_string(const Graph & g) -> std::string;
/// Throws ParseError with the offending line number.
auto read_graph(std::istream & in) -> Graph;
auto read_graph_file(const std::string & path) -> Graph;

}
