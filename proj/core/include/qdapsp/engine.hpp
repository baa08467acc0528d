#ifndef QDAPSP_ENGINE_HPP
#define QDAPSP_ENGINE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <qdapsp/archive.hpp>

namespace qdapsp {

enum class Variant {
    QdEa,                    // mutation only, p_c = 0
    QdGaStandard,            // uniform parent pair for crossover
    QdGaImprovedXoverOnly,   // row-compatible parent pair, p_c = 1
    FastQdApsp,              // row-compatible crossover plus mutation
};

const char* to_string(Variant v) noexcept;

/// Accepts the canonical names (qd-ea, qd-ga-std, qd-ga-improved-xover-only,
/// fast-qd-apsp) case-insensitively, with '_' and '-' interchangeable.
Variant parse_variant(std::string_view name);

/// Crossover probability each variant uses when none is given.
double default_crossover_probability(Variant v) noexcept;

struct RunConfig {
    Variant variant = Variant::QdEa;
    double p_c = 0.0;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;           // 0 selects default_budget(n)
    std::uint64_t sample_interval = 0;  // 0 records no trajectory

    static RunConfig for_variant(Variant v, std::uint64_t seed)
    {
        return {v, default_crossover_probability(v), seed, 0, 0};
    }
};

/// Throws Error(InvalidConfig) when p_c is incompatible with the variant.
void validate(const RunConfig& config);

/// ceil(200 n^3 (1 + ln n)).
std::uint64_t default_budget(std::size_t node_count);

struct TrajectoryPoint {
    std::uint64_t iteration = 0;
    std::uint64_t optimal_cells = 0;

    friend bool operator==(const TrajectoryPoint&, const TrajectoryPoint&) = default;
};

struct RunResult {
    bool completed = false;
    std::uint64_t iterations = 0;            // iterations executed
    std::uint64_t iterations_to_optimal = 0; // meaningful when completed
    std::uint64_t evaluations = 0;           // iterations that produced and checked an offspring
    std::uint64_t selection_failures = 0;
    std::uint64_t crossover_attempts = 0;
    std::uint64_t mutation_attempts = 0;
    std::uint64_t budget = 0;
    std::vector<TrajectoryPoint> trajectory;
    double wall_time_ms = 0.0;

    /// Equality on everything except wall time.
    bool same_outcome(const RunResult& other) const;
};

struct RunOutcome {
    RunResult result;
    Archive archive;
};

/// One run of the quality-diversity loop. Per iteration the draw order is:
/// branch coin, selection draws, operator draws. Deterministic in (g, config).
RunOutcome run_detailed(const Graph& g, const OracleTables& oracle, const RunConfig& config);

inline RunResult run(const Graph& g, const OracleTables& oracle, const RunConfig& config)
{
    return run_detailed(g, oracle, config).result;
}

/// Independent runs on a thread pool (threads = 0 picks hardware concurrency).
/// Results are in input order and identical to sequential execution. All
/// configs are validated up front; the first bad one is reported by position.
std::vector<RunResult> run_batch(const Graph& g, const OracleTables& oracle, const std::vector<RunConfig>& configs,
                                 unsigned threads = 0);

} // namespace qdapsp

#endif
