#pragma once

#include "zsramsey/embedder.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zsramsey {

struct StressConfig
{
    std::size_t d = 1;
    std::uint32_t p = 3;
    std::vector<std::size_t> m_values { 24 };
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    // A generator mode (see make_coloring), or "adversarial" to cycle through
    // constant:0..p-1, affine and two-block:ell/2 by trial index.
    std::string coloring = "uniform";
    // n is drawn from [n_min, n_min + n_slack], n_min the least order that fits m edges.
    std::size_t n_slack = 8;
    std::size_t jobs = 1;
};

struct TrialRecord
{
    std::size_t index = 0;
    std::uint64_t seed = 0;
    std::size_t n = 0, m = 0, ell = 0;
    std::string coloring;
    bool verified = false;
    std::optional<EmbedPath> path;
    std::optional<std::size_t> tau;
    std::vector<std::string> trace;
    PhaseTimings timings;
};

struct StressFailure
{
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::string kind;
    std::string message;
    std::string detail;       // error witness, if any
    std::string graph;        // graph file format
    std::string coloring;     // coloring file format
};

struct StressReport
{
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::vector<StressFailure> failures;
    std::vector<TrialRecord> records;
    PhaseTimings timings;
};

/// Seed of trial `index` under master seed `seed`.
auto trial_seed(std::uint64_t seed, std::size_t index) -> std::uint64_t;

/// Coloring mode used by `trial` under `config` for a host of order ell.
auto trial_coloring_mode(const StressConfig & config, std::size_t trial, std::size_t ell) -> std::string;

/// Throws HypothesisViolation if the configuration cannot satisfy the
/// hypotheses for every m in the grid.
auto stress(const StressConfig & config) -> StressReport;

/// Stable field order. Timing is wall-clock and therefore only included on request.
auto to_json(const StressReport & report, bool include_timing = false) -> nlohmann::ordered_json;

}
