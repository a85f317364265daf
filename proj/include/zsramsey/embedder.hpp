#pragma once

#include "zsramsey/coloring.hpp"
#include "zsramsey/graph.hpp"
#include "zsramsey/log.hpp"
#include "zsramsey/zp.hpp"

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace zsramsey {

inline constexpr HostVertex unmapped = std::numeric_limits<HostVertex>::max();

// Positions in the ordered U and indices into J are 0-based throughout.

struct ProcessSchedule
{
    /// The blueprint with J reindexed so that J' (the vertices visited by
    /// phase one) is a prefix, ordered by last_index then original index.
    Blueprint blueprint;
    std::vector<Vertex> ordered_u;
    std::vector<std::size_t> degree_into_j;      // per position
    std::vector<std::size_t> last_index;         // per J index
    std::vector<std::vector<std::size_t>> omega; // per position, J indices
    std::size_t t_prime = 0;                     // positions [0, t_prime) are visited
    std::vector<std::size_t> quotas;             // k_j for j < t_prime; they sum to p
    std::size_t s_prime = 0;                     // |J'|
};

/// Throws PreconditionViolation unless the blueprint has exactly 2p elements.
auto build_schedule(const Blueprint & blueprint, Modulus p) -> ProcessSchedule;

/// f on U and Z, h and h' on J (by J index). f holds `unmapped` on J.
struct EmbeddingTriple
{
    std::vector<HostVertex> f;
    std::vector<HostVertex> h;
    std::vector<HostVertex> h_prime;
};

/// Number of J indices i with c(h(v_i)f(N_i)) != c(h'(v_i)f(N_i)).
auto count_unequal(const Blueprint & bp, const EmbeddingTriple & triple, const EdgeColoring & c) -> std::size_t;

/// Broken structural conditions (injectivity, disjointness, the cross
/// condition h(v) != h'(v')), plus a line if fewer than `p` indices are
/// unequal. Empty means the triple is valid.
auto triple_violations(const Graph & g, const Blueprint & bp, const EmbeddingTriple & triple,
        const EdgeColoring & c, std::size_t p) -> std::vector<std::string>;

struct Embedding
{
    std::vector<HostVertex> map;

    friend auto operator==(const Embedding &, const Embedding &) -> bool = default;
};

/// Everything the phases share for one run.
struct EmbedContext
{
    const Graph & graph;
    const DegeneracyOrdering & ordering;
    const ProcessSchedule & schedule;
    const EdgeColoring & coloring;
    Modulus p;
    // Chooses TheoremViolation (true) or GuaranteeLapsed (false) for failed
    // proof-level assertions.
    bool hypotheses_hold = true;
    Trace * trace = nullptr;

    auto d() const noexcept -> std::size_t { return ordering.degeneracy; }
    auto n() const noexcept -> std::size_t { return graph.vertex_count(); }
    auto blueprint() const noexcept -> const Blueprint & { return schedule.blueprint; }
    auto note(std::string event) const -> void;
    [[noreturn]] auto violation(const std::string & message, std::string witness = {}) const -> void;
};

/// C_i(w) for each index i, as values[i][w] over all host vertices.
struct VertexColorings
{
    std::vector<std::vector<Residue>> values;

    auto size() const noexcept -> std::size_t { return values.size(); }
};

/// C_i(w) = c(w images[i]).
auto vertex_colorings(const EdgeColoring & c, const std::vector<std::vector<HostVertex>> & images) -> VertexColorings;

/// The majority/witness procedure run at a centre u over the pool: for each
/// index i, gamma(i) is the most common value of c(wu) + C_i(w) (ties to the
/// smallest value); a deviating vertex outside Q is moved into Q, otherwise
/// i joins I.
struct RegularityProcedure
{
    std::vector<std::size_t> I;
    std::vector<HostVertex> Q;
    std::vector<std::optional<HostVertex>> witness;
    std::vector<Residue> gamma;
};

auto regularity_procedure(const EdgeColoring & c, HostVertex u, std::span<const HostVertex> pool,
        const VertexColorings & colorings) -> RegularityProcedure;

struct Step3Assignment
{
    HostVertex u_star = unmapped;
    std::vector<HostVertex> w;
    std::vector<HostVertex> w_prime;
};

/// Runs the procedure at u_star; with |Q| >= quota, extracts `quota` disjoint
/// unequal pairs and equal singletons for the other indices. nullopt means
/// u_star is certified regular. Throws HostTooSmall if the pool cannot supply
/// distinct vertices.
auto step3_search(const EdgeColoring & c, HostVertex u_star, std::span<const HostVertex> pool,
        const VertexColorings & colorings, std::size_t quota) -> std::optional<Step3Assignment>;

struct PhaseOneState
{
    std::vector<HostVertex> f;       // per G vertex
    std::vector<HostVertex> h, h_prime;
    std::vector<HostVertex> pool;    // R(j), sorted
    std::vector<Vertex> deferred;
};

struct StuckState
{
    std::size_t tau = 0;
    PhaseOneState state;
    std::vector<std::size_t> omega;  // J indices in omega(tau)
    std::size_t quota = 0;           // k_tau
    VertexColorings colorings;
};

using PhaseOneOutcome = std::variant<EmbeddingTriple, StuckState>;

/// `force_stuck_at` declares the process stuck at that position without
/// searching (it must carry a nonempty omega); used to exercise later phases.
auto phase_one(const EmbedContext & ctx, std::optional<std::size_t> force_stuck_at = std::nullopt) -> PhaseOneOutcome;

struct RegularityTable
{
    std::size_t tau = 0;
    std::size_t k = 0;
    std::size_t k_tau = 0;
    std::size_t k_prime = 0;
    std::vector<HostVertex> pool;
    VertexColorings colorings;
    // Indexed by host vertex; meaningful for pool vertices only.
    std::vector<std::vector<std::size_t>> I;
    std::vector<std::vector<HostVertex>> L;
    std::vector<std::uint8_t> in_pool;

    auto has_index(HostVertex u, std::size_t i) const -> bool;
    /// w in R_u = pool \ L_u.
    auto in_r(HostVertex u, HostVertex w) const -> bool;
    auto r_set(HostVertex u) const -> std::vector<HostVertex>;
};

/// Builds a table shell (pool, colorings, sizes) with empty I and L.
auto make_regularity_table(const StuckState & stuck, std::size_t host_order) -> RegularityTable;

/// Every broken table invariant, one line each. The pool-size bound is
/// checked against n, p and d.
auto regularity_violations(const EdgeColoring & c, const RegularityTable & table,
        std::size_t n, std::size_t p, std::size_t d) -> std::vector<std::string>;

/// Certifies every pool vertex with the procedure and checks the table.
auto regularity_analysis(const EmbedContext & ctx, const StuckState & stuck) -> RegularityTable;

struct PhaseTwoState
{
    std::size_t rho = 0;
    std::vector<Vertex> U_prime;                   // sorted
    std::vector<HostVertex> P;                     // f'(U_prime[i]) = P[i]
    std::vector<HostVertex> anchors;               // x_i
    std::vector<HostVertex> partners;              // x'_i found before getting stuck
    std::vector<std::vector<HostVertex>> blocked;  // pool \ (intersection of R_r over r in f'(N_i))
    std::optional<std::size_t> stuck_at;           // i_*
};

struct PhaseTwoRegion
{
    std::vector<HostVertex> region;
    PhaseTwoState state;
};

using PhaseTwoOutcome = std::variant<EmbeddingTriple, PhaseTwoRegion>;

/// Throws PoolExhausted when T_rho or the anchors cannot be formed inside
/// `pool_subset`.
auto phase_two_attempt(const EmbedContext & ctx, const RegularityTable & table,
        std::span<const HostVertex> pool_subset) -> PhaseTwoOutcome;

/// Pairs (w, q) with q in I_w for which C_q is not constant on R_w within the region.
auto region_irregularities(const RegularityTable & table, std::span<const HostVertex> region) -> std::vector<std::string>;

struct MonoRegion
{
    std::vector<HostVertex> region;
    std::vector<Residue> vertex_color;     // C_w, parallel to region
    Residue majority = 0;
    std::vector<HostVertex> host_labels;   // V(H)
    Graph host;                            // H on 0..|V(H)|-1
};

auto mono_region(const EmbedContext & ctx, std::span<const HostVertex> region_a,
        std::span<const HostVertex> region_b, const RegularityTable & table) -> MonoRegion;

/// Backward greedy over the degeneracy order into H. Map values are H
/// vertex indices. Throws PreconditionViolation if a joint neighborhood runs
/// dry.
auto mono_embed(const Graph & g, const DegeneracyOrdering & ordering, const Graph & host) -> Embedding;

enum class EmbedPath { Trivial, PhaseOne, PhaseTwoA, PhaseTwoB, Monochromatic };

auto to_string(EmbedPath path) -> std::string_view;

struct PhaseTimings
{
    double phase1 = 0, regularity = 0, phase2 = 0, mono = 0, cd = 0;  // seconds
};

struct Lemma3Result
{
    std::variant<EmbeddingTriple, Embedding> outcome;
    EmbedPath path = EmbedPath::PhaseOne;
    std::optional<std::size_t> tau;
};

auto embed_lemma3(const EmbedContext & ctx, PhaseTimings * timings = nullptr) -> Lemma3Result;

enum class Mode { Strict, Permissive };

struct EmbedResult
{
    Embedding embedding;
    EmbedPath path = EmbedPath::Trivial;
    std::optional<std::size_t> tau;
    std::vector<std::string> hypothesis_warnings;
    Trace trace;
    PhaseTimings timings;
};

/// Unmet hypotheses, one line each: p | m, 2d < p, m >= 2pd(d+1)^2,
/// host order >= n + (3+3d)p.
auto unmet_hypotheses(const Graph & g, std::size_t d, Modulus p, std::size_t host_order) -> std::vector<std::string>;

/// Strict mode throws HypothesisViolation on any unmet hypothesis;
/// permissive mode records them and runs anyway. The result is always
/// injective and zero-sum, or an Error is thrown.
auto zero_sum_embed(const Graph & g, Modulus p, const EdgeColoring & c, Mode mode = Mode::Strict) -> EmbedResult;

auto write_embedding(std::ostream & out, const Embedding & e, Residue sum) -> void;
auto read_embedding(std::istream & in) -> Embedding;
auto read_embedding_file(const std::string & path) -> Embedding;

}
