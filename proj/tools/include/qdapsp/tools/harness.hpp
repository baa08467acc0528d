#ifndef QDAPSP_TOOLS_HARNESS_HPP
#define QDAPSP_TOOLS_HARNESS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qdapsp/archive.hpp>
#include <qdapsp/engine.hpp>
#include <qdapsp/stats.hpp>

namespace qdapsp::tools {

enum class Family { CompleteChain, Hard, Tree, RandomScc };

const char* to_string(Family f) noexcept;
Family parse_family(std::string_view name);

/// Generator parameters. `size` is n for complete-chain, hard and random-scc,
/// and the height for tree.
struct InstanceParams {
    Family family = Family::CompleteChain;
    std::size_t size = 0;
    std::size_t arity = 2;
    std::optional<std::size_t> extra_edges; // random-scc; defaults to 2n, capped
    Weight w_max = 10;
    std::uint64_t graph_seed = 1;
};

Graph make_instance(const InstanceParams& params);

struct VariantSpec {
    Variant variant = Variant::QdEa;
    double p_c = 0.0;
};

/// "name" or "name:p_c"; without p_c the variant default is used.
VariantSpec parse_variant_spec(std::string_view text);

struct SweepSpec {
    InstanceParams instance;          // size is overridden per row
    std::vector<std::size_t> sizes;   // strictly increasing
    std::vector<VariantSpec> variants;
    std::size_t seeds_per_cell = 1;
    std::uint64_t seed_base = 1;      // seeds are seed_base .. seed_base + seeds_per_cell - 1
    std::optional<std::uint64_t> budget_override;
    std::string output_path;
    unsigned threads = 0;
    bool record_wall_time = true;
};

/// Throws Error(InvalidConfig) when the spec breaks its invariants.
void validate(const SweepSpec& spec);

struct SweepRow {
    std::string family;
    std::size_t n_param = 0;
    std::size_t nodes = 0;
    std::string variant;
    double p_c = 0.0;
    std::uint64_t seed = 0;
    bool completed = false;
    std::uint64_t iterations = 0;
    std::uint64_t evaluations = 0;
    std::uint64_t selection_failures = 0;
    double wall_ms = 0.0;
};

inline constexpr std::string_view csv_header =
    "family,n_param,nodes,variant,p_c,seed,completed,iterations,evaluations,selection_failures,wall_ms";

SweepRow make_row(Family family, std::size_t n_param, std::size_t nodes, const RunConfig& config,
                  const RunResult& result, bool record_wall_time = true);

/// Rows ordered by size, then variant, then seed, in spec order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_csv(std::istream& is);

/// Runs the sweep and writes spec.output_path through a temporary file, so a
/// failed sweep leaves no partial output behind.
std::vector<SweepRow> run_sweep_to_file(const SweepSpec& spec);

struct VerifyReport {
    std::size_t cells_checked = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks an archive dump against the exact oracle: every off-diagonal cell
/// present once, a valid path for its cell, weight and cardinality consistent,
/// weight equal to the shortest-path distance.
VerifyReport verify_dump(const Graph& g, const OracleTables& oracle, const std::vector<DumpRecord>& records);

struct GroupStats {
    std::string family;
    std::size_t n_param = 0;
    std::size_t nodes = 0;
    std::string variant;
    double p_c = 0.0;
    std::size_t runs = 0;
    std::size_t completed = 0;
    SampleSummary iterations; // completed runs only
};

/// Groups by (family, n_param, nodes, variant, p_c) in first-appearance order.
std::vector<GroupStats> group_stats(const std::vector<SweepRow>& rows);

struct ScalingFit {
    std::string family;
    std::string variant;
    double p_c = 0.0;
    std::vector<double> nodes;
    std::vector<double> mean_iterations;
    std::size_t excluded_runs = 0;
    LineFit fit;
};

/// Log-log fit of mean iterations (completed runs) against node count, one
/// per (family, variant, p_c) with at least two sizes.
std::vector<ScalingFit> scaling_fits(const std::vector<SweepRow>& rows);

} // namespace qdapsp::tools

#endif
