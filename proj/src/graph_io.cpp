#include "zsramsey/graph.hpp"

#include "zsramsey/error.hpp"
#include "zsramsey/text_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace zsramsey {

auto write_graph(std::ostream & out, const Graph & g) -> void
{
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

auto graph_to_string(const Graph & g) -> std::string
{
    std::ostringstream s;
    write_graph(s, g);
    return s.str();
}

auto read_graph(std::istream & in) -> Graph
{
    LineReader reader(in, "graph");
    auto header = reader.expect_fields(2, "header \"n m\"");
    auto n = header[0], m = header[1];
    if (n > 0xFFFFFFFFULL)
        reader.fail("vertex count too large");

    Graph g(n);
    std::set<Edge> seen;
    for (std::uint64_t i = 0; i < m; ++i) {
        auto fields = reader.expect_fields(2, "edge \"u v\"");
        auto u = fields[0], v = fields[1];
        if (! (u < v))
            reader.fail("edge endpoints must satisfy u < v");
        if (v >= n)
            reader.fail("edge endpoint " + std::to_string(v) + " out of range for n=" + std::to_string(n));
        if (! seen.emplace(u, v).second)
            reader.fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    reader.expect_end();
    return g;
}

auto read_graph_file(const std::string & path) -> Graph
{
    std::ifstream in(path);
    if (! in)
        throw Error(ErrorKind::ParseError, "cannot open graph file " + path);
    return read_graph(in);
}

}
