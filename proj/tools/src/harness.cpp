#include <qdapsp/tools/harness.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

#include <qdapsp/instances.hpp>

namespace qdapsp::tools {

const char* to_string(Family f) noexcept
{
    switch (f) {
    case Family::CompleteChain: return "complete-chain";
    case Family::Hard: return "hard";
    case Family::Tree: return "tree";
    case Family::RandomScc: return "random-scc";
    }
    return "unknown";
}

Family parse_family(std::string_view name)
{
    for (Family f : {Family::CompleteChain, Family::Hard, Family::Tree, Family::RandomScc})
        if (name == to_string(f))
            return f;
    throw Error(ErrorCode::InvalidConfig, "unknown instance family '" + std::string(name) + "'");
}

Graph make_instance(const InstanceParams& p)
{
    switch (p.family) {
    case Family::CompleteChain: return gen_complete_chain(p.size);
    case Family::Hard: return gen_hard_instance(p.size);
    case Family::Tree: return gen_bidirected_balanced_tree(p.arity, p.size);
    case Family::RandomScc: {
        std::size_t extra = p.extra_edges.value_or(2 * p.size);
        if (!p.extra_edges && p.size >= 2)
            extra = std::min(extra, p.size * (p.size - 1) - p.size);
        return gen_random_scc(p.size, extra, p.w_max, p.graph_seed);
    }
    }
    throw Error(ErrorCode::InvalidConfig, "unknown instance family");
}

VariantSpec parse_variant_spec(std::string_view text)
{
    const auto colon = text.find(':');
    VariantSpec spec;
    spec.variant = parse_variant(text.substr(0, colon));
    spec.p_c = default_crossover_probability(spec.variant);
    if (colon != std::string_view::npos) {
        const std::string value(text.substr(colon + 1));
        std::size_t used = 0;
        try {
            spec.p_c = std::stod(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size())
            throw Error(ErrorCode::InvalidConfig, "bad crossover probability in '" + std::string(text) + "'");
    }
    validate(RunConfig{spec.variant, spec.p_c, 1, 0, 0});
    return spec;
}

void validate(const SweepSpec& spec)
{
    if (spec.sizes.empty())
        throw Error(ErrorCode::InvalidConfig, "sweep needs at least one size");
    if (std::adjacent_find(spec.sizes.begin(), spec.sizes.end(), std::greater_equal<>()) != spec.sizes.end())
        throw Error(ErrorCode::InvalidConfig, "sweep sizes must be strictly increasing");
    if (spec.variants.empty())
        throw Error(ErrorCode::InvalidConfig, "sweep needs at least one variant");
    if (spec.seeds_per_cell < 1)
        throw Error(ErrorCode::InvalidConfig, "seeds per cell must be >= 1");
    if (spec.budget_override && *spec.budget_override == 0)
        throw Error(ErrorCode::InvalidConfig, "budget must be positive");
    for (const auto& v : spec.variants)
        validate(RunConfig{v.variant, v.p_c, 1, 0, 0});
}

SweepRow make_row(Family family, std::size_t n_param, std::size_t nodes, const RunConfig& config,
                  const RunResult& result, bool record_wall_time)
{
    SweepRow row;
    row.family = to_string(family);
    row.n_param = n_param;
    row.nodes = nodes;
    row.variant = to_string(config.variant);
    row.p_c = config.p_c;
    row.seed = config.seed;
    row.completed = result.completed;
    row.iterations = result.iterations;
    row.evaluations = result.evaluations;
    row.selection_failures = result.selection_failures;
    row.wall_ms = record_wall_time ? result.wall_time_ms : 0.0;
    return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec)
{
    validate(spec);
    std::vector<SweepRow> rows;
    rows.reserve(spec.sizes.size() * spec.variants.size() * spec.seeds_per_cell);
    for (std::size_t size : spec.sizes) {
        InstanceParams params = spec.instance;
        params.size = size;
        const Graph g = make_instance(params);
        const OracleTables oracle = compute_oracle(g);

        std::vector<RunConfig> configs;
        for (const auto& v : spec.variants)
            for (std::size_t i = 0; i < spec.seeds_per_cell; ++i)
                configs.push_back({v.variant, v.p_c, spec.seed_base + i, spec.budget_override.value_or(0), 0});
        const auto results = run_batch(g, oracle, configs, spec.threads);
        for (std::size_t i = 0; i < configs.size(); ++i)
            rows.push_back(make_row(params.family, size, g.node_count(), configs[i], results[i], spec.record_wall_time));
    }
    return rows;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows)
{
    os << csv_header << '\n';
    for (const auto& r : rows) {
        os << r.family << ',' << r.n_param << ',' << r.nodes << ',' << r.variant << ',' << r.p_c << ',' << r.seed
           << ',' << (r.completed ? "true" : "false") << ',' << r.iterations << ',' << r.evaluations << ','
           << r.selection_failures << ',' << std::fixed << std::setprecision(3) << r.wall_ms << std::defaultfloat
           << std::setprecision(6) << '\n';
    }
}

namespace {

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, sep))
        fields.push_back(field);
    if (!line.empty() && line.back() == sep)
        fields.emplace_back();
    return fields;
}

template <typename T>
T parse_number(const std::string& text, std::size_t line_no)
{
    std::istringstream is(text);
    T value{};
    if (!(is >> value) || !is.eof())
        throw Error(ErrorCode::Format, "CSV line " + std::to_string(line_no) + ": bad number '" + text + "'");
    return value;
}

} // namespace

std::vector<SweepRow> read_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line))
        throw Error(ErrorCode::Format, "CSV is empty");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != csv_header)
        throw Error(ErrorCode::Format, "unexpected CSV header '" + line + "'");

    std::vector<SweepRow> rows;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto f = split(line, ',');
        if (f.size() != 11)
            throw Error(ErrorCode::Format, "CSV line " + std::to_string(line_no) + ": expected 11 fields");
        SweepRow r;
        r.family = f[0];
        r.n_param = parse_number<std::size_t>(f[1], line_no);
        r.nodes = parse_number<std::size_t>(f[2], line_no);
        r.variant = f[3];
        r.p_c = parse_number<double>(f[4], line_no);
        r.seed = parse_number<std::uint64_t>(f[5], line_no);
        if (f[6] != "true" && f[6] != "false")
            throw Error(ErrorCode::Format, "CSV line " + std::to_string(line_no) + ": completed must be true/false");
        r.completed = f[6] == "true";
        r.iterations = parse_number<std::uint64_t>(f[7], line_no);
        r.evaluations = parse_number<std::uint64_t>(f[8], line_no);
        r.selection_failures = parse_number<std::uint64_t>(f[9], line_no);
        r.wall_ms = parse_number<double>(f[10], line_no);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<SweepRow> run_sweep_to_file(const SweepSpec& spec)
{
    namespace fs = std::filesystem;
    if (spec.output_path.empty())
        throw Error(ErrorCode::InvalidConfig, "sweep needs an output path");
    const fs::path target(spec.output_path);
    const fs::path partial = fs::path(spec.output_path + ".partial");
    try {
        auto rows = run_sweep(spec);
        {
            std::ofstream out(partial, std::ios::binary | std::ios::trunc);
            if (!out)
                throw Error(ErrorCode::Format, "cannot write " + partial.string());
            write_csv(out, rows);
            out.flush();
            if (!out)
                throw Error(ErrorCode::Format, "write failed for " + partial.string());
        }
        fs::rename(partial, target);
        return rows;
    } catch (...) {
        std::error_code ignored;
        fs::remove(partial, ignored);
        throw;
    }
}

VerifyReport verify_dump(const Graph& g, const OracleTables& oracle, const std::vector<DumpRecord>& records)
{
    VerifyReport report;
    const std::size_t n = g.node_count();
    std::vector<char> seen(n * n, 0);
    const auto where = [](const DumpRecord& r) {
        return "line " + std::to_string(r.line) + " cell (" + std::to_string(r.source) + "," + std::to_string(r.target) + ")";
    };

    for (const auto& r : records) {
        ++report.cells_checked;
        if (r.source >= n || r.target >= n || r.source == r.target) {
            report.violations.push_back(where(r) + ": not a cell of a " + std::to_string(n) + "-node archive");
            continue;
        }
        char& mark = seen[r.source * n + r.target];
        if (mark)
            report.violations.push_back(where(r) + ": duplicate cell");
        mark = 1;

        const auto checked = validate_node_sequence(g, r.nodes);
        if (const auto* reason = std::get_if<InvalidReason>(&checked)) {
            report.violations.push_back(where(r) + ": invalid path (" + to_string(*reason) + ")");
            continue;
        }
        const auto& path = std::get<PathIndividual>(checked);
        if (path.source() != r.source || path.target() != r.target)
            report.violations.push_back(where(r) + ": path runs " + std::to_string(path.source()) + " -> " +
                                        std::to_string(path.target()));
        if (path.cardinality() != r.cardinality)
            report.violations.push_back(where(r) + ": cardinality " + std::to_string(r.cardinality) + " but path has " +
                                        std::to_string(path.cardinality()) + " edges");
        if (path.weight() != r.weight)
            report.violations.push_back(where(r) + ": recorded weight " + std::to_string(r.weight) +
                                        " but path weighs " + std::to_string(path.weight()));
        const Weight d = oracle.dist(r.source, r.target);
        if (r.weight != d)
            report.violations.push_back(where(r) + ": weight " + std::to_string(r.weight) + " differs from distance " +
                                        std::to_string(d));
    }
    for (NodeId s = 0; s < n; ++s)
        for (NodeId t = 0; t < n; ++t)
            if (s != t && !seen[s * n + t])
                report.violations.push_back("cell (" + std::to_string(s) + "," + std::to_string(t) + ") missing");
    return report;
}

std::vector<GroupStats> group_stats(const std::vector<SweepRow>& rows)
{
    using Key = std::tuple<std::string, std::size_t, std::size_t, std::string, double>;
    std::vector<Key> order;
    std::map<Key, std::pair<GroupStats, std::vector<double>>> groups;
    for (const auto& r : rows) {
        Key key{r.family, r.n_param, r.nodes, r.variant, r.p_c};
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) {
            order.push_back(key);
            it->second.first = GroupStats{r.family, r.n_param, r.nodes, r.variant, r.p_c, 0, 0, {}};
        }
        auto& [g, samples] = it->second;
        ++g.runs;
        if (r.completed) {
            ++g.completed;
            samples.push_back(static_cast<double>(r.iterations));
        }
    }
    std::vector<GroupStats> out;
    for (const auto& key : order) {
        auto& [g, samples] = groups.at(key);
        g.iterations = summarize(samples);
        out.push_back(g);
    }
    return out;
}

std::vector<ScalingFit> scaling_fits(const std::vector<SweepRow>& rows)
{
    using Key = std::tuple<std::string, std::string, double>;
    std::vector<Key> order;
    std::map<Key, ScalingFit> fits;
    for (const auto& g : group_stats(rows)) {
        Key key{g.family, g.variant, g.p_c};
        auto [it, inserted] = fits.try_emplace(key);
        if (inserted) {
            order.push_back(key);
            it->second.family = g.family;
            it->second.variant = g.variant;
            it->second.p_c = g.p_c;
        }
        it->second.excluded_runs += g.runs - g.completed;
        if (g.completed > 0) {
            it->second.nodes.push_back(static_cast<double>(g.nodes));
            it->second.mean_iterations.push_back(g.iterations.mean);
        }
    }
    std::vector<ScalingFit> out;
    for (const auto& key : order) {
        ScalingFit& fit = fits.at(key);
        if (fit.nodes.size() < 2)
            continue;
        fit.fit = fit_loglog(fit.nodes, fit.mean_iterations);
        out.push_back(std::move(fit));
    }
    return out;
}

} // namespace qdapsp::tools
