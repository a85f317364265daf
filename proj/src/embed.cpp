#include "zsramsey/embedder.hpp"

#include "zsramsey/error.hpp"
#include "zsramsey/sumset.hpp"
#include "zsramsey/text_io.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

namespace zsramsey {

namespace
{
    class Stopwatch
    {
    public:
        explicit Stopwatch(double * sink) : _sink(sink), _start(std::chrono::steady_clock::now()) {}
        Stopwatch(const Stopwatch &) = delete;
        ~Stopwatch()
        {
            if (_sink)
                *_sink += std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count();
        }

    private:
        double * _sink;
        std::chrono::steady_clock::time_point _start;
    };

    auto slot(PhaseTimings * timings, double PhaseTimings::* member) -> double *
    {
        return timings ? &(timings->*member) : nullptr;
    }

    auto check_triple(const EmbedContext & ctx, const EmbeddingTriple & triple, const char * source) -> void
    {
        auto problems = triple_violations(ctx.graph, ctx.blueprint(), triple, ctx.coloring, ctx.p.value());
        if (! problems.empty())
            ctx.violation(std::string(source) + " produced an invalid triple: " + problems.front());
    }
}

auto to_string(EmbedPath path) -> std::string_view
{
    switch (path) {
        case EmbedPath::Trivial: return "trivial";
        case EmbedPath::PhaseOne: return "phase1";
        case EmbedPath::PhaseTwoA: return "phase2a";
        case EmbedPath::PhaseTwoB: return "phase2b";
        case EmbedPath::Monochromatic: return "mono";
    }
    return "unknown";
}

auto embed_lemma3(const EmbedContext & ctx, PhaseTimings * timings) -> Lemma3Result
{
    PhaseOneOutcome first;
    {
        Stopwatch w(slot(timings, &PhaseTimings::phase1));
        first = phase_one(ctx);
    }
    if (auto * triple = std::get_if<EmbeddingTriple>(&first)) {
        check_triple(ctx, *triple, "phase one");
        return { std::move(*triple), EmbedPath::PhaseOne, std::nullopt };
    }
    const auto & stuck = std::get<StuckState>(first);

    RegularityTable table;
    {
        Stopwatch w(slot(timings, &PhaseTimings::regularity));
        table = regularity_analysis(ctx, stuck);
    }

    PhaseTwoOutcome attempt_a, attempt_b;
    {
        Stopwatch w(slot(timings, &PhaseTimings::phase2));
        attempt_a = phase_two_attempt(ctx, table, table.pool);
        if (auto * triple = std::get_if<EmbeddingTriple>(&attempt_a)) {
            check_triple(ctx, *triple, "phase two (A)");
            return { std::move(*triple), EmbedPath::PhaseTwoA, stuck.tau };
        }
        attempt_b = phase_two_attempt(ctx, table, std::get<PhaseTwoRegion>(attempt_a).region);
        if (auto * triple = std::get_if<EmbeddingTriple>(&attempt_b)) {
            check_triple(ctx, *triple, "phase two (B)");
            return { std::move(*triple), EmbedPath::PhaseTwoB, stuck.tau };
        }
    }

    Stopwatch w(slot(timings, &PhaseTimings::mono));
    auto region = mono_region(ctx, std::get<PhaseTwoRegion>(attempt_a).region, std::get<PhaseTwoRegion>(attempt_b).region, table);
    auto local = mono_embed(ctx.graph, ctx.ordering, region.host);

    Embedding embedding;
    for (auto x : local.map)
        embedding.map.push_back(region.host_labels[x]);
    for (auto [u, v] : ctx.graph.edges())
        if (ctx.coloring(embedding.map[u], embedding.map[v]) != region.majority)
            ctx.violation("monochromatic embedding uses an edge off color " + std::to_string(region.majority));
    ctx.note("mono-embed: ok g=" + std::to_string(region.majority));
    return { std::move(embedding), EmbedPath::Monochromatic, stuck.tau };
}

auto unmet_hypotheses(const Graph & g, std::size_t d, Modulus p, std::size_t host_order) -> std::vector<std::string>
{
    const std::size_t n = g.vertex_count(), m = g.edge_count(), q = p.value();
    std::vector<std::string> unmet;
    if (m % q != 0)
        unmet.push_back("p does not divide m (p=" + std::to_string(q) + ", m=" + std::to_string(m) + ")");
    if (! (2 * d < q))
        unmet.push_back("2d < p fails (d=" + std::to_string(d) + ", p=" + std::to_string(q) + ")");
    if (m < 2 * q * d * (d + 1) * (d + 1))
        unmet.push_back("m >= 2pd(d+1)^2 fails (m=" + std::to_string(m) + ", bound=" + std::to_string(2 * q * d * (d + 1) * (d + 1)) + ")");
    if (host_order < n + (3 + 3 * d) * q)
        unmet.push_back("host order below n + (3+3d)p (ell=" + std::to_string(host_order) + ", bound=" + std::to_string(n + (3 + 3 * d) * q) + ")");
    return unmet;
}

auto zero_sum_embed(const Graph & g, Modulus p, const EdgeColoring & c, Mode mode) -> EmbedResult
{
    if (c.modulus() != p)
        throw Error(ErrorKind::ModulusMismatch, "coloring is over Z_" + std::to_string(c.modulus().value()) + ", asked for Z_" + std::to_string(p.value()));

    const auto n = g.vertex_count();
    auto ordering = degeneracy_order(g);
    EmbedResult result;
    result.hypothesis_warnings = unmet_hypotheses(g, ordering.degeneracy, p, c.order());
    if (mode == Mode::Strict && ! result.hypothesis_warnings.empty()) {
        std::string message;
        for (const auto & line : result.hypothesis_warnings)
            message += (message.empty() ? "" : "; ") + line;
        throw Error(ErrorKind::HypothesisViolation, message);
    }
    for (const auto & line : result.hypothesis_warnings)
        logger().warn("permissive mode: {}", line);

    if (n > c.order())
        throw Error(ErrorKind::HostTooSmall, "graph has more vertices than the host");

    if (g.edge_count() == 0) {
        for (HostVertex x = 0; x < n; ++x)
            result.embedding.map.push_back(x);
        result.path = EmbedPath::Trivial;
        result.trace.note("trivial: edgeless graph");
        return result;
    }

    auto blueprint = extract_blueprint(g, ordering.degeneracy, 2 * std::size_t{p.value()});
    auto schedule = build_schedule(blueprint, p);
    EmbedContext ctx { g, ordering, schedule, c, p, result.hypothesis_warnings.empty(), &result.trace };
    {
        std::ostringstream s;
        s << "schedule: n=" << n << " m=" << g.edge_count() << " d=" << ordering.degeneracy << " |U|=" << schedule.ordered_u.size()
          << " t'=" << schedule.t_prime << " s'=" << schedule.s_prime;
        ctx.note(s.str());
    }

    auto lemma3 = embed_lemma3(ctx, &result.timings);
    result.path = lemma3.path;
    result.tau = lemma3.tau;

    if (auto * mono = std::get_if<Embedding>(&lemma3.outcome))
        result.embedding = std::move(*mono);
    else {
        Stopwatch w(&result.timings.cd);
        const auto & triple = std::get<EmbeddingTriple>(lemma3.outcome);
        const auto & bp = schedule.blueprint;

        std::vector<bool> in_j(n, false);
        for (auto v : bp.J)
            in_j[v] = true;
        Residue fixed = 0;
        for (auto [u, v] : g.edges())
            if (! in_j[u] && ! in_j[v])
                fixed = p.add(fixed, c(triple.f[u], triple.f[v]));

        std::vector<ChoicePair> pairs;
        std::vector<HostVertex> images;
        for (std::size_t i = 0; i < bp.s(); ++i) {
            images.clear();
            for (auto u : bp.neighborhoods[i])
                images.push_back(triple.f[u]);
            pairs.emplace_back(ZpElement(edge_sum_raw(c, triple.h[i], images), p),
                    ZpElement(edge_sum_raw(c, triple.h_prime[i], images), p));
        }
        auto choices = select_sequence(pairs, ZpElement(p.neg(fixed), p));

        result.embedding.map = triple.f;
        for (std::size_t i = 0; i < bp.s(); ++i)
            result.embedding.map[bp.J[i]] = choices[i] == Choice::First ? triple.h[i] : triple.h_prime[i];
        ctx.note("cd: target=" + std::to_string(p.neg(fixed)));
    }

    // Internal bookkeeping check only; callers verify independently.
    Residue total = 0;
    for (auto [u, v] : g.edges())
        total = p.add(total, c(result.embedding.map[u], result.embedding.map[v]));
    if (total != 0)
        ctx.violation("assembled embedding sums to " + std::to_string(total) + ", not 0");
    logger().info("embedded n={} m={} via {}{}", n, g.edge_count(), to_string(result.path),
            result.tau ? " (tau=" + std::to_string(*result.tau) + ")" : std::string());
    return result;
}

auto write_embedding(std::ostream & out, const Embedding & e, Residue sum) -> void
{
    out << "sum_mod_p " << sum << '\n';
    for (std::size_t v = 0; v < e.map.size(); ++v)
        out << v << ' ' << e.map[v] << '\n';
}

auto read_embedding(std::istream & in) -> Embedding
{
    LineReader reader(in, "embedding");
    reader.expect_keyword("sum_mod_p", 1);
    Embedding e;
    while (auto fields = reader.maybe_fields(2, "\"g_vertex host_vertex\"")) {
        if ((*fields)[0] != e.map.size())
            reader.fail("expected g_vertex " + std::to_string(e.map.size()));
        if ((*fields)[1] > 0xFFFFFFFFULL)
            reader.fail("host vertex out of range");
        e.map.push_back(static_cast<HostVertex>((*fields)[1]));
    }
    return e;
}

auto read_embedding_file(const std::string & path) -> Embedding
{
    std::ifstream in(path);
    if (! in)
        throw Error(ErrorKind::ParseError, "cannot open embedding file " + path);
    return read_embedding(in);
}

}
