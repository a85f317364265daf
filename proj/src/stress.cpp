#include "zsramsey/stress.hpp"

#include "zsramsey/error.hpp"
#include "zsramsey/oracle.hpp"
#include "zsramsey/rng.hpp"

#include <algorithm>
#include <thread>

namespace zsramsey {

auto trial_seed(std::uint64_t seed, std::size_t index) -> std::uint64_t
{
    return splitmix64(seed, index);
}

auto trial_coloring_mode(const StressConfig & config, std::size_t trial, std::size_t ell) -> std::string
{
    if (config.coloring != "adversarial")
        return config.coloring;
    auto slot = trial % (config.p + 2);
    if (slot < config.p)
        return "constant:" + std::to_string(slot);
    if (slot == config.p)
        return "affine";
    return "two-block:" + std::to_string(ell / 2);
}

namespace
{
    auto least_order(std::size_t d, std::size_t m) -> std::size_t
    {
        std::size_t n = 0;
        while (max_degenerate_edges(n, d) < m)
            ++n;
        return n;
    }

    auto run_trial(const StressConfig & config, std::size_t index, TrialRecord & record, std::optional<StressFailure> & failure) -> void
    {
        const Modulus p(config.p);
        record.index = index;
        record.seed = trial_seed(config.seed, index);

        Rng rng(record.seed);
        record.m = config.m_values[uniform_below(rng, config.m_values.size())];
        record.n = least_order(config.d, record.m) + uniform_below(rng, config.n_slack + 1);
        record.ell = record.n + (3 + 3 * config.d) * config.p;
        record.coloring = trial_coloring_mode(config, index, record.ell);

        auto g = gen_degenerate_graph(record.n, config.d, record.m, splitmix64(record.seed, 1));
        auto c = make_coloring(record.coloring, record.ell, p, splitmix64(record.seed, 2));

        auto fail = [&] (std::string kind, std::string message, std::string detail) {
            failure = StressFailure { index, record.seed, std::move(kind), std::move(message), std::move(detail),
                graph_to_string(g), coloring_to_string(c) };
        };

        try {
            auto result = zero_sum_embed(g, p, c, Mode::Strict);
            record.path = result.path;
            record.tau = result.tau;
            record.trace = result.trace.events();
            record.timings = result.timings;
            auto verdict = verify_zero_sum(g, result.embedding, c, p);
            record.verified = verdict.passed();
            if (! record.verified)
                fail("VerificationFailed", "independent verifier rejected the embedding", report_to_text(verdict));
        }
        catch (const Error & e) {
            fail(std::string(to_string(e.kind())), e.what(), e.witness());
        }
    }
}

auto stress(const StressConfig & config) -> StressReport
{
    const Modulus p(config.p);
    if (config.m_values.empty())
        throw Error(ErrorKind::PreconditionViolation, "stress needs at least one m value");
    for (auto m : config.m_values) {
        auto n = least_order(config.d, m);
        auto probe = gen_degenerate_graph(n, config.d, m, 0);
        auto unmet = unmet_hypotheses(probe, config.d, p, n + (3 + 3 * config.d) * config.p);
        if (! unmet.empty())
            throw Error(ErrorKind::HypothesisViolation, "stress grid m=" + std::to_string(m) + ": " + unmet.front());
    }

    StressReport report;
    report.trials = config.trials;
    report.records.resize(config.trials);
    std::vector<std::optional<StressFailure>> failures(config.trials);

    auto worker = [&] (std::size_t offset, std::size_t stride) {
        for (std::size_t t = offset; t < config.trials; t += stride)
            run_trial(config, t, report.records[t], failures[t]);
    };
    auto jobs = std::max<std::size_t>(1, std::min(config.jobs, config.trials));
    if (jobs == 1)
        worker(0, 1);
    else {
        std::vector<std::jthread> threads;
        for (std::size_t j = 0; j < jobs; ++j)
            threads.emplace_back(worker, j, jobs);
    }

    for (std::size_t t = 0; t < config.trials; ++t) {
        if (failures[t])
            report.failures.push_back(std::move(*failures[t]));
        else
            ++report.successes;
        const auto & r = report.records[t].timings;
        report.timings.phase1 += r.phase1;
        report.timings.regularity += r.regularity;
        report.timings.phase2 += r.phase2;
        report.timings.mono += r.mono;
        report.timings.cd += r.cd;
    }
    return report;
}

auto to_json(const StressReport & report, bool include_timing) -> nlohmann::ordered_json
{
    using json = nlohmann::ordered_json;
    json out;
    out["trials"] = report.trials;
    out["successes"] = report.successes;

    json paths = json::object();
    std::size_t reached_tau = 0;
    for (auto path : { EmbedPath::Trivial, EmbedPath::PhaseOne, EmbedPath::PhaseTwoA, EmbedPath::PhaseTwoB, EmbedPath::Monochromatic }) {
        std::size_t count = 0;
        for (const auto & r : report.records)
            count += r.path == path;
        paths[std::string(to_string(path))] = count;
    }
    for (const auto & r : report.records)
        reached_tau += r.tau.has_value();
    out["paths"] = paths;
    out["reached_tau"] = reached_tau;

    json failures = json::array();
    for (const auto & f : report.failures)
        failures.push_back(json {
            { "trial", f.trial }, { "seed", f.seed }, { "kind", f.kind }, { "message", f.message },
            { "witness", json { { "detail", f.detail }, { "graph", f.graph }, { "coloring", f.coloring } } } });
    out["failures"] = failures;

    json trials = json::array();
    for (const auto & r : report.records) {
        json entry { { "trial", r.index }, { "seed", r.seed }, { "n", r.n }, { "m", r.m }, { "ell", r.ell },
            { "coloring", r.coloring }, { "verified", r.verified } };
        entry["path"] = r.path ? json(std::string(to_string(*r.path))) : json(nullptr);
        entry["tau"] = r.tau ? json(*r.tau) : json(nullptr);
        trials.push_back(entry);
    }
    out["per_trial"] = trials;

    if (include_timing)
        out["timing_seconds"] = json { { "phase1", report.timings.phase1 }, { "regularity", report.timings.regularity },
            { "phase2", report.timings.phase2 }, { "mono", report.timings.mono }, { "cd", report.timings.cd } };
    return out;
}

}
