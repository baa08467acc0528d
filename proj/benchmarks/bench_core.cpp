#include <benchmark/benchmark.h>

#include <qdapsp/engine.hpp>
#include <qdapsp/instances.hpp>
#include <qdapsp/operators.hpp>

using namespace qdapsp;

namespace {

void BM_Mutate(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = gen_complete_chain(n);
    std::vector<NodeId> nodes(n / 2);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        nodes[i] = static_cast<NodeId>(i);
    const PathIndividual parent = make_path(g, nodes);
    Rng rng(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(mutate(g, parent, rng));
}
BENCHMARK(BM_Mutate)->Arg(16)->Arg(64)->Arg(256);

void BM_Crossover(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = gen_complete_chain(n);
    std::vector<NodeId> first, second;
    for (NodeId i = 0; i <= n / 2; ++i)
        first.push_back(i);
    for (NodeId i = static_cast<NodeId>(n / 2); i < n; ++i)
        second.push_back(i);
    const PathIndividual a = make_path(g, first), b = make_path(g, second);
    for (auto _ : state)
        benchmark::DoNotOptimize(crossover(g, a, b));
}
BENCHMARK(BM_Crossover)->Arg(16)->Arg(64)->Arg(256);

void BM_Oracle(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = gen_random_scc(n, 3 * n, 10, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_oracle(g));
}
BENCHMARK(BM_Oracle)->Arg(16)->Arg(64)->Arg(128);

void BM_ArchiveUpdate(benchmark::State& state)
{
    const Graph g = gen_complete_chain(32);
    const OracleTables oracle = compute_oracle(g);
    Archive archive = init_archive(g, &oracle);
    Rng rng(3);
    for (auto _ : state) {
        const auto& parent = archive.at(archive.cell_at(rng() % (32 * 31)));
        if (parent)
            benchmark::DoNotOptimize(archive.update(mutate(g, *parent, rng)));
    }
}
BENCHMARK(BM_ArchiveUpdate);

void BM_RunChain(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = gen_complete_chain(n);
    const OracleTables oracle = compute_oracle(g);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const RunResult r = run(g, oracle, RunConfig::for_variant(Variant::FastQdApsp, ++seed));
        state.counters["iterations"] = static_cast<double>(r.iterations);
    }
}
BENCHMARK(BM_RunChain)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
