#include <doctest.h>

#include <cmath>

#include <qdapsp/engine.hpp>
#include <qdapsp/instances.hpp>

using namespace qdapsp;

namespace {

const Variant all_variants[] = {Variant::QdEa, Variant::QdGaStandard, Variant::QdGaImprovedXoverOnly,
                                Variant::FastQdApsp};

void check_bookkeeping(const RunResult& r)
{
    CHECK(r.evaluations + r.selection_failures == r.iterations);
    CHECK(r.crossover_attempts + r.mutation_attempts == r.evaluations);
    CHECK(r.iterations <= r.budget);
}

} // namespace

TEST_CASE("variant names and defaults")
{
    for (Variant v : all_variants)
        CHECK(parse_variant(to_string(v)) == v);
    CHECK(parse_variant("QD-EA") == Variant::QdEa);
    CHECK(parse_variant("FAST_QD_APSP") == Variant::FastQdApsp);
    CHECK_THROWS_AS(parse_variant("qd-xx"), Error);
    CHECK(default_crossover_probability(Variant::QdEa) == 0.0);
    CHECK(default_crossover_probability(Variant::QdGaImprovedXoverOnly) == 1.0);
    CHECK(default_crossover_probability(Variant::FastQdApsp) == 0.5);
    CHECK(default_budget(8) == static_cast<std::uint64_t>(std::ceil(200.0 * 512 * (1 + std::log(8.0)))));
}

TEST_CASE("configuration invariants")
{
    CHECK_THROWS_AS(validate({Variant::QdEa, 0.5, 1, 0, 0}), Error);
    CHECK_THROWS_AS(validate({Variant::QdGaImprovedXoverOnly, 0.5, 1, 0, 0}), Error);
    CHECK_THROWS_AS(validate({Variant::FastQdApsp, 0.0, 1, 0, 0}), Error);
    CHECK_THROWS_AS(validate({Variant::QdGaStandard, 1.0, 1, 0, 0}), Error);
    for (Variant v : all_variants)
        CHECK_NOTHROW(validate(RunConfig::for_variant(v, 1)));

    const Graph g = gen_complete_chain(4);
    const OracleTables o = compute_oracle(g);
    CHECK_THROWS_AS(run(g, o, {Variant::QdEa, 0.5, 1, 0, 0}), Error);
    CHECK_THROWS_AS(run(gen_complete_chain(5), o, RunConfig::for_variant(Variant::QdEa, 1)), Error);
}

TEST_CASE("a graph optimal at initialisation needs zero iterations")
{
    const Graph g = build_graph(2, {{0, 1, 1}, {1, 0, 1}});
    const OracleTables o = compute_oracle(g);
    for (Variant v : all_variants) {
        const RunResult r = run(g, o, RunConfig::for_variant(v, 3));
        CHECK(r.completed);
        CHECK(r.iterations_to_optimal == 0);
        CHECK(r.iterations == 0);
    }
}

TEST_CASE("fast variant solves the hard instance exactly")
{
    const Graph g = gen_hard_instance(2);
    const OracleTables o = compute_oracle(g);
    const RunOutcome out = run_detailed(g, o, {Variant::FastQdApsp, 0.5, 1, 0, 0});
    CHECK(out.result.completed);
    CHECK(is_complete_optimal(out.archive, o));
    std::size_t matching = 0;
    for (NodeId s = 0; s < 11; ++s)
        for (NodeId t = 0; t < 11; ++t)
            if (s != t && out.archive.at(s, t)->weight() == o.dist(s, t))
                ++matching;
    CHECK(matching == 110);
    check_bookkeeping(out.result);
}

TEST_CASE("QD-EA on the three-node chain keeps the direct back edge")
{
    const Graph g = gen_complete_chain(3);
    const OracleTables o = compute_oracle(g);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const RunOutcome out = run_detailed(g, o, RunConfig::for_variant(Variant::QdEa, seed));
        REQUIRE(out.result.completed);
        CHECK(out.archive.at(2, 0)->weight() == 3);
        CHECK(out.archive.at(2, 0)->nodes() == std::vector<NodeId>{2, 0});
        CHECK(out.archive.at(0, 2)->nodes() == std::vector<NodeId>{0, 1, 2});
    }
}

TEST_CASE("runs are deterministic and trajectories monotone")
{
    const Graph g = gen_random_scc(10, 25, 7, 4);
    const OracleTables o = compute_oracle(g);
    for (Variant v : all_variants) {
        RunConfig config = RunConfig::for_variant(v, 77);
        config.sample_interval = 50;
        const RunResult a = run(g, o, config);
        const RunResult b = run(g, o, config);
        CHECK(a.same_outcome(b));
        CHECK(a.completed);
        REQUIRE(a.trajectory.size() >= 2);
        CHECK(a.trajectory.front().iteration == 0);
        CHECK(a.trajectory.back().iteration == a.iterations);
        CHECK(a.trajectory.back().optimal_cells == g.node_count() * (g.node_count() - 1));
        for (std::size_t i = 1; i < a.trajectory.size(); ++i) {
            CHECK(a.trajectory[i].iteration > a.trajectory[i - 1].iteration);
            CHECK(a.trajectory[i].optimal_cells >= a.trajectory[i - 1].optimal_cells);
        }
        check_bookkeeping(a);

        config.seed = 78;
        CHECK_FALSE(run(g, o, config).same_outcome(a));
    }
}

TEST_CASE("branch counters respect the variant")
{
    const Graph g = gen_bidirected_balanced_tree(2, 3);
    const OracleTables o = compute_oracle(g);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const RunResult ea = run(g, o, RunConfig::for_variant(Variant::QdEa, seed));
        CHECK(ea.completed);
        CHECK(ea.crossover_attempts == 0);
        const RunResult xo = run(g, o, RunConfig::for_variant(Variant::QdGaImprovedXoverOnly, seed));
        CHECK(xo.completed);
        CHECK(xo.mutation_attempts == 0);
        CHECK(xo.crossover_attempts > 0);
        check_bookkeeping(ea);
        check_bookkeeping(xo);
    }
}

TEST_CASE("completed runs pass a full rescan")
{
    const Graph g = gen_random_scc(12, 30, 9, 12);
    const OracleTables o = compute_oracle(g);
    for (Variant v : all_variants) {
        const RunOutcome out = run_detailed(g, o, RunConfig::for_variant(v, 5));
        REQUIRE(out.result.completed);
        CHECK(is_complete_optimal(out.archive, o));
        CHECK(out.archive.audit().ok());
    }
}

TEST_CASE("budget exhaustion is reported, not thrown")
{
    const Graph g = gen_complete_chain(8);
    const OracleTables o = compute_oracle(g);
    RunConfig config = RunConfig::for_variant(Variant::QdEa, 1);
    config.budget = 10;
    const RunResult r = run(g, o, config);
    CHECK_FALSE(r.completed);
    CHECK(r.iterations == 10);
    CHECK(r.budget == 10);
}

TEST_CASE("run_batch matches sequential execution in input order")
{
    const Graph g = gen_complete_chain(8);
    const OracleTables o = compute_oracle(g);
    std::vector<RunConfig> configs;
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        configs.push_back(RunConfig::for_variant(Variant::QdEa, seed));
    configs.push_back(configs.front());

    const auto parallel = run_batch(g, o, configs, 4);
    REQUIRE(parallel.size() == configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) {
        CHECK(parallel[i].completed);
        CHECK(parallel[i].same_outcome(run(g, o, configs[i])));
    }
    CHECK(parallel.front().same_outcome(parallel.back()));
    CHECK_FALSE(parallel[0].same_outcome(parallel[1]));

    configs[3].p_c = 0.25;
    try {
        run_batch(g, o, configs);
        FAIL("expected InvalidConfig");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("config #3") != std::string::npos);
    }
}
