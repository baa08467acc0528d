#include <qdapsp/tools/cli.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <qdapsp/tools/harness.hpp>

namespace qdapsp::tools {

namespace {

struct InstanceOptions {
    std::string family;
    std::size_t n = 0;
    std::size_t arity = 2;
    std::size_t height = 0;
    std::optional<std::size_t> extra;
    Weight w_max = 10;
    std::uint64_t graph_seed = 1;

    void add_to(CLI::App& cmd)
    {
        cmd.add_option("--n", n, "Size parameter (complete-chain, hard, random-scc)");
        cmd.add_option("--arity", arity, "Tree arity")->capture_default_str();
        cmd.add_option("--height", height, "Tree height");
        cmd.add_option("--extra", extra, "random-scc: extra edges beyond the cycle (default 2n)");
        cmd.add_option("--wmax", w_max, "random-scc: maximum edge weight")->capture_default_str();
    }

    InstanceParams params() const
    {
        InstanceParams p;
        p.family = parse_family(family);
        p.size = p.family == Family::Tree ? height : n;
        p.arity = arity;
        p.extra_edges = extra;
        p.w_max = w_max;
        p.graph_seed = graph_seed;
        return p;
    }
};

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Format, "cannot open " + path);
    return in;
}

void write_text_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << content) || !out.flush())
        throw Error(ErrorCode::Format, "cannot write " + path);
}

int do_gen(const InstanceOptions& opts, const std::string& out_path, std::ostream& out, std::ostream& err)
{
    const Graph g = make_instance(opts.params());
    std::ostringstream text;
    write_graph(text, g);
    std::ostream& summary = out_path.empty() ? err : out;
    if (out_path.empty())
        out << text.str();
    else
        write_text_file(out_path, text.str());
    const OracleTables oracle = compute_oracle(g);
    summary << "n=" << g.node_count() << " m=" << g.edge_count() << " delta=" << oracle.delta << " ell=" << oracle.ell
            << '\n';
    return exit_code::ok;
}

struct RunOptions {
    std::string graph_path;
    std::string variant = "qd-ea";
    std::optional<double> p_c;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;
    std::uint64_t sample_interval = 0;
    std::string dump_path;
    std::string json_path;
};

int do_run(const InstanceOptions& inst, const RunOptions& opts, std::ostream& out)
{
    Graph g;
    if (!opts.graph_path.empty()) {
        auto in = open_input(opts.graph_path);
        g = read_graph(in);
    } else if (!inst.family.empty()) {
        g = make_instance(inst.params());
    } else {
        throw Error(ErrorCode::InvalidConfig, "run needs --graph FILE or an instance family");
    }

    RunConfig config = RunConfig::for_variant(parse_variant(opts.variant), opts.seed);
    if (opts.p_c)
        config.p_c = *opts.p_c;
    config.budget = opts.budget;
    config.sample_interval = opts.sample_interval;
    validate(config);
    if (!is_strongly_connected(g))
        throw Error(ErrorCode::NotStronglyConnected, "input graph is not strongly connected");

    const OracleTables oracle = compute_oracle(g);
    const RunOutcome outcome = run_detailed(g, oracle, config);
    const RunResult& r = outcome.result;

    out << "iterations=" << r.iterations << " completed=" << (r.completed ? "true" : "false")
        << " evaluations=" << r.evaluations << " selection_failures=" << r.selection_failures
        << " budget=" << r.budget << " wall_ms=" << r.wall_time_ms << '\n';

    if (!opts.dump_path.empty()) {
        std::ostringstream dump;
        outcome.archive.write_dump(dump);
        write_text_file(opts.dump_path, dump.str());
    }
    if (!opts.json_path.empty()) {
        nlohmann::json record = {
            {"variant", to_string(config.variant)},
            {"p_c", config.p_c},
            {"seed", config.seed},
            {"budget", r.budget},
            {"nodes", g.node_count()},
            {"edges", g.edge_count()},
            {"completed", r.completed},
            {"iterations", r.iterations},
            {"evaluations", r.evaluations},
            {"selection_failures", r.selection_failures},
            {"crossover_attempts", r.crossover_attempts},
            {"mutation_attempts", r.mutation_attempts},
            {"wall_ms", r.wall_time_ms},
        };
        nlohmann::json trajectory = nlohmann::json::array();
        for (const auto& point : r.trajectory)
            trajectory.push_back({point.iteration, point.optimal_cells});
        record["trajectory"] = std::move(trajectory);
        write_text_file(opts.json_path, record.dump(2) + "\n");
    }
    return r.completed ? exit_code::ok : exit_code::budget_exhausted;
}

int do_verify(const std::string& graph_path, const std::string& dump_path, std::ostream& out)
{
    auto graph_in = open_input(graph_path);
    const Graph g = read_graph(graph_in);
    auto dump_in = open_input(dump_path);
    const auto records = read_dump(dump_in);
    const OracleTables oracle = compute_oracle(g);
    const VerifyReport report = verify_dump(g, oracle, records);
    for (const auto& v : report.violations)
        out << "violation: " << v << '\n';
    out << (report.ok() ? "PASS" : "FAIL") << ": " << report.cells_checked << " cells checked, "
        << report.violations.size() << " violations\n";
    return report.ok() ? exit_code::ok : exit_code::verification_failed;
}

int do_stats(const std::string& csv_path, bool fit, std::ostream& out)
{
    auto in = open_input(csv_path);
    const auto rows = read_csv(in);
    out << "family,n_param,nodes,variant,p_c,runs,completed,mean,ci95_low,ci95_high,median,stddev\n";
    for (const auto& g : group_stats(rows)) {
        out << g.family << ',' << g.n_param << ',' << g.nodes << ',' << g.variant << ',' << g.p_c << ',' << g.runs
            << ',' << g.completed << ',' << g.iterations.mean << ',' << g.iterations.ci95_low << ','
            << g.iterations.ci95_high << ',' << g.iterations.median << ',' << g.iterations.stddev << '\n';
    }
    if (fit) {
        out << "\nfamily,variant,p_c,sizes,slope,slope_stderr,intercept,excluded_runs\n";
        for (const auto& f : scaling_fits(rows))
            out << f.family << ',' << f.variant << ',' << f.p_c << ',' << f.nodes.size() << ',' << f.fit.slope << ','
                << f.fit.slope_stderr << ',' << f.fit.intercept << ',' << f.excluded_runs << '\n';
    }
    return exit_code::ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quality-diversity search for all-pairs shortest paths", "qdapsp"};
    app.require_subcommand(1);

    InstanceOptions gen_inst;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a benchmark instance in graph text format");
    gen->add_option("family", gen_inst.family, "complete-chain | hard | tree | random-scc")->required();
    gen_inst.add_to(*gen);
    gen->add_option("--seed", gen_inst.graph_seed, "random-scc generator seed")->capture_default_str();
    gen->add_option("--out", gen_out, "Output path (stdout if omitted)");

    InstanceOptions run_inst;
    RunOptions run_opts;
    auto* run_cmd = app.add_subcommand("run", "Execute one run and report its optimisation time");
    run_cmd->add_option("family", run_inst.family, "Instance family (alternative to --graph)");
    run_inst.add_to(*run_cmd);
    run_cmd->add_option("--graph-seed", run_inst.graph_seed, "random-scc generator seed")->capture_default_str();
    run_cmd->add_option("--graph", run_opts.graph_path, "Graph file");
    run_cmd->add_option("--variant", run_opts.variant,
                        "qd-ea | qd-ga-std | qd-ga-improved-xover-only | fast-qd-apsp")
        ->capture_default_str();
    run_cmd->add_option("--pc", run_opts.p_c, "Crossover probability (default per variant)");
    run_cmd->add_option("--seed", run_opts.seed, "Run seed")->capture_default_str();
    run_cmd->add_option("--budget", run_opts.budget, "Iteration budget (default 200 n^3 (1 + ln n))");
    run_cmd->add_option("--sample-interval", run_opts.sample_interval, "Trajectory sampling interval");
    run_cmd->add_option("--dump", run_opts.dump_path, "Write the final archive dump here");
    run_cmd->add_option("--json", run_opts.json_path, "Write a JSON run record here");

    InstanceOptions sweep_inst;
    SweepSpec sweep_spec;
    std::vector<std::string> sweep_variants;
    bool no_wall_time = false;
    std::uint64_t sweep_budget = 0;
    auto* sweep = app.add_subcommand("sweep", "Run every (size, variant, seed) combination and write CSV");
    sweep->add_option("--family", sweep_inst.family, "Instance family")->required();
    sweep->add_option("--sizes", sweep_spec.sizes, "Size parameters (tree: heights), strictly increasing")
        ->required()
        ->delimiter(',');
    sweep->add_option("--variants", sweep_variants, "Variants, optionally name:p_c")->required()->delimiter(',');
    sweep->add_option("--seeds", sweep_spec.seeds_per_cell, "Seeds per (size, variant)")->capture_default_str();
    sweep->add_option("--seed-base", sweep_spec.seed_base, "First seed")->capture_default_str();
    sweep->add_option("--budget", sweep_budget, "Iteration budget override");
    sweep->add_option("--arity", sweep_inst.arity, "Tree arity")->capture_default_str();
    sweep->add_option("--extra", sweep_inst.extra, "random-scc: extra edges (default 2n)");
    sweep->add_option("--wmax", sweep_inst.w_max, "random-scc: maximum edge weight")->capture_default_str();
    sweep->add_option("--graph-seed", sweep_inst.graph_seed, "random-scc generator seed")->capture_default_str();
    sweep->add_option("--jobs", sweep_spec.threads, "Worker threads (0 = all cores)")->capture_default_str();
    sweep->add_flag("--no-wall-time", no_wall_time, "Write wall_ms as 0 for byte-reproducible output");
    sweep->add_option("--out", sweep_spec.output_path, "CSV output path")->required();

    std::string verify_graph, verify_dump_path;
    auto* verify = app.add_subcommand("verify", "Check an archive dump against the exact oracle");
    verify->add_option("--graph", verify_graph, "Graph file")->required();
    verify->add_option("--archive", verify_dump_path, "Archive dump file")->required();

    std::string stats_csv;
    bool stats_fit = false;
    auto* stats = app.add_subcommand("stats", "Per-group means and 95% confidence intervals of a sweep CSV");
    stats->add_option("--csv", stats_csv, "Sweep CSV")->required();
    stats->add_flag("--fit", stats_fit, "Also print log-log scaling fits per (family, variant)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::config_error;
    }

    try {
        if (*gen)
            return do_gen(gen_inst, gen_out, out, err);
        if (*run_cmd)
            return do_run(run_inst, run_opts, out);
        if (*sweep) {
            sweep_spec.instance = InstanceParams{parse_family(sweep_inst.family), 0, sweep_inst.arity,
                                                 sweep_inst.extra, sweep_inst.w_max, sweep_inst.graph_seed};
            for (const auto& v : sweep_variants)
                sweep_spec.variants.push_back(parse_variant_spec(v));
            if (sweep_budget)
                sweep_spec.budget_override = sweep_budget;
            sweep_spec.record_wall_time = !no_wall_time;
            const auto rows = run_sweep_to_file(sweep_spec);
            std::size_t completed = 0;
            for (const auto& r : rows)
                completed += r.completed;
            out << "rows=" << rows.size() << " completed=" << completed << " out=" << sweep_spec.output_path << '\n';
            return exit_code::ok;
        }
        if (*verify)
            return do_verify(verify_graph, verify_dump_path, out);
        if (*stats)
            return do_stats(stats_csv, stats_fit, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::config_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::config_error;
    }
    return exit_code::config_error;
}

} // namespace qdapsp::tools
