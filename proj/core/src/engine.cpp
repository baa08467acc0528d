#include <qdapsp/engine.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <qdapsp/operators.hpp>

namespace qdapsp {

const char* to_string(Variant v) noexcept
{
    switch (v) {
    case Variant::QdEa: return "qd-ea";
    case Variant::QdGaStandard: return "qd-ga-std";
    case Variant::QdGaImprovedXoverOnly: return "qd-ga-improved-xover-only";
    case Variant::FastQdApsp: return "fast-qd-apsp";
    }
    return "unknown";
}

Variant parse_variant(std::string_view name)
{
    std::string key;
    for (char c : name)
        key.push_back(c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (Variant v : {Variant::QdEa, Variant::QdGaStandard, Variant::QdGaImprovedXoverOnly, Variant::FastQdApsp})
        if (key == to_string(v))
            return v;
    if (key == "fast")
        return Variant::FastQdApsp;
    throw Error(ErrorCode::InvalidConfig, "unknown variant '" + std::string(name) + "'");
}

double default_crossover_probability(Variant v) noexcept
{
    switch (v) {
    case Variant::QdEa: return 0.0;
    case Variant::QdGaImprovedXoverOnly: return 1.0;
    default: return 0.5;
    }
}

void validate(const RunConfig& config)
{
    const double p = config.p_c;
    const std::string name = to_string(config.variant);
    switch (config.variant) {
    case Variant::QdEa:
        if (p != 0.0)
            throw Error(ErrorCode::InvalidConfig, name + " requires p_c = 0, got " + std::to_string(p));
        break;
    case Variant::QdGaImprovedXoverOnly:
        if (p != 1.0)
            throw Error(ErrorCode::InvalidConfig, name + " requires p_c = 1, got " + std::to_string(p));
        break;
    default:
        if (!(p > 0.0 && p < 1.0))
            throw Error(ErrorCode::InvalidConfig, name + " requires p_c in (0,1), got " + std::to_string(p));
    }
}

std::uint64_t default_budget(std::size_t node_count)
{
    const double n = static_cast<double>(node_count);
    return static_cast<std::uint64_t>(std::ceil(200.0 * n * n * n * (1.0 + std::log(n))));
}

bool RunResult::same_outcome(const RunResult& other) const
{
    return completed == other.completed && iterations == other.iterations &&
           iterations_to_optimal == other.iterations_to_optimal && evaluations == other.evaluations &&
           selection_failures == other.selection_failures && crossover_attempts == other.crossover_attempts &&
           mutation_attempts == other.mutation_attempts && budget == other.budget && trajectory == other.trajectory;
}

RunOutcome run_detailed(const Graph& g, const OracleTables& oracle, const RunConfig& config)
{
    validate(config);
    if (oracle.node_count() != g.node_count())
        throw Error(ErrorCode::InvalidConfig, "oracle was computed for a different graph");

    const auto started = std::chrono::steady_clock::now();
    Rng rng(config.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    RunOutcome out{RunResult{}, init_archive(g, &oracle)};
    RunResult& result = out.result;
    Archive& archive = out.archive;
    result.budget = config.budget ? config.budget : default_budget(g.node_count());

    const bool improved =
        config.variant == Variant::FastQdApsp || config.variant == Variant::QdGaImprovedXoverOnly;
    const auto sample = [&](std::uint64_t iteration) {
        if (config.sample_interval)
            result.trajectory.push_back({iteration, archive.optimal_count()});
    };

    sample(0);
    std::uint64_t it = 0;
    while (!archive.all_optimal() && it < result.budget) {
        ++it;
        // p is drawn from (0,1] so that p <= 0 never and p <= 1 always holds.
        const double p = 1.0 - coin(rng);
        Offspring child;
        bool selected = false;
        if (p <= config.p_c) {
            const auto parents = improved ? select_improved(archive, rng) : select_standard(archive, rng, true);
            if ((selected = parents.has_value())) {
                ++result.crossover_attempts;
                child = crossover(g, *archive.at(parents->cells[0]), *archive.at(parents->cells[1]));
            }
        } else {
            const auto parent = select_standard(archive, rng, false);
            if ((selected = parent.has_value())) {
                ++result.mutation_attempts;
                child = mutate(g, *archive.at(parent->cells[0]), rng);
            }
        }
        if (selected) {
            ++result.evaluations;
            archive.update(std::move(child));
        } else {
            ++result.selection_failures;
        }
        if (config.sample_interval && it % config.sample_interval == 0)
            sample(it);
    }

    result.iterations = it;
    result.completed = archive.all_optimal();
    if (result.completed)
        result.iterations_to_optimal = it;
    if (config.sample_interval && (result.trajectory.empty() || result.trajectory.back().iteration != it))
        sample(it);
    result.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return out;
}

std::vector<RunResult> run_batch(const Graph& g, const OracleTables& oracle, const std::vector<RunConfig>& configs,
                                 unsigned threads)
{
    for (std::size_t i = 0; i < configs.size(); ++i) {
        try {
            validate(configs[i]);
        } catch (const Error& e) {
            throw Error(ErrorCode::InvalidConfig, "config #" + std::to_string(i) + ": " + e.what());
        }
    }

    std::vector<RunResult> results(configs.size());
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, configs.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
        for (std::size_t i = next++; i < configs.size(); i = next++) {
            try {
                results[i] = run(g, oracle, configs[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

} // namespace qdapsp
