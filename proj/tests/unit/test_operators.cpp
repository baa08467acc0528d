#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <qdapsp/instances.hpp>
#include <qdapsp/operators.hpp>
#include <qdapsp/oracle.hpp>

#include "brute_force.hpp"

using namespace qdapsp;

namespace {

const Graph& bidirected_pair()
{
    static const Graph g = build_graph(2, {{0, 1, 1}, {1, 0, 1}});
    return g;
}

// Random simple path by walking out-edges without revisiting.
PathIndividual random_path(const Graph& g, Rng& rng)
{
    for (;;) {
        std::vector<NodeId> seq{static_cast<NodeId>(rng() % g.node_count())};
        const std::size_t want = 2 + rng() % 5;
        while (seq.size() < want) {
            std::vector<NodeId> options;
            for (EdgeId id : g.out_edges(seq.back()))
                if (std::find(seq.begin(), seq.end(), g.edge(id).head) == seq.end())
                    options.push_back(g.edge(id).head);
            if (options.empty())
                break;
            seq.push_back(options[rng() % options.size()]);
        }
        if (seq.size() >= 2)
            return make_path(g, seq);
    }
}

} // namespace

TEST_CASE("toggle_edge examples")
{
    const Graph chain = gen_complete_chain(3);

    SUBCASE("extension at the target")
    {
        MutationState state(make_path(chain, {0, 1}));
        CHECK(incident_edge_count(chain, 0, 1) == 6); // the specific draw has probability 1/6
        toggle_edge(chain, state, *chain.find_edge(1, 2));
        REQUIRE(state.defined());
        CHECK(state.nodes == std::vector<NodeId>{0, 1, 2});
        CHECK(state.weight == 2);
    }
    SUBCASE("removing the only edge empties the path")
    {
        MutationState state(make_path(bidirected_pair(), {0, 1}));
        toggle_edge(bidirected_pair(), state, 0);
        CHECK(state.invalid == InvalidReason::Empty);
    }
    SUBCASE("second out-edge at the source branches")
    {
        MutationState state(make_path(chain, {0, 1}));
        toggle_edge(chain, state, *chain.find_edge(0, 2));
        CHECK(state.invalid == InvalidReason::Branching);
    }
    SUBCASE("closing the path is a cycle")
    {
        MutationState state(make_path(bidirected_pair(), {0, 1}));
        toggle_edge(bidirected_pair(), state, 1);
        CHECK(state.invalid == InvalidReason::Cycle);
    }
}

TEST_CASE("toggle_edge agrees with generic edge-set validation")
{
    // Two independent routes: incremental toggling versus rebuilding from the
    // symmetric difference of the edge set.
    Rng rng(31);
    std::size_t defined = 0, undefined = 0;
    for (int round = 0; round < 400; ++round) {
        const std::size_t n = 3 + round % 6;
        const Graph g = gen_random_scc(n, std::min<std::size_t>(3 * (round % 5), n * (n - 2)), 4, rng());
        const PathIndividual parent = random_path(g, rng);
        const auto base = parent.edge_ids(g);
        for (EdgeId e : incident_edges(g, parent.source(), parent.target())) {
            MutationState state(parent);
            toggle_edge(g, state, e);

            std::vector<EdgeId> toggled = base;
            if (auto it = std::find(toggled.begin(), toggled.end(), e); it != toggled.end())
                toggled.erase(it);
            else
                toggled.push_back(e);
            const auto expected = validate_edge_set(g, toggled);

            if (const auto* path = std::get_if<PathIndividual>(&expected)) {
                REQUIRE(state.defined());
                CHECK(state.nodes == path->nodes());
                CHECK(state.weight == path->weight());
                ++defined;
            } else {
                REQUIRE_FALSE(state.defined());
                CHECK(*state.invalid == std::get<InvalidReason>(expected));
                ++undefined;
            }
        }
    }
    CHECK(defined > 100);
    CHECK(undefined > 100);
}

TEST_CASE("draw_incident_edge is uniform over E_st")
{
    const Graph g = gen_hard_instance(2);
    const HardInstanceLayout at{2};
    const PathIndividual parent = make_path(g, {at.u(0), at.c(0), at.a(1)});
    const auto support = incident_edges(g, parent.source(), parent.target());
    std::map<EdgeId, int> counts;
    Rng rng(17);
    const int draws = 100000;
    for (int i = 0; i < draws; ++i)
        ++counts[draw_incident_edge(g, parent.source(), parent.target(), rng)];
    CHECK(counts.size() == support.size());
    for (EdgeId id : support)
        CHECK(std::abs(counts[id] / double(draws) - 1.0 / support.size()) < 0.01);
}

TEST_CASE("sample_op_count follows 1 + Pois(1)")
{
    Rng rng(123);
    const int draws = 1000000;
    std::map<unsigned, int> counts;
    double sum = 0.0;
    for (int i = 0; i < draws; ++i) {
        const unsigned k = sample_op_count(rng);
        REQUIRE(k >= 1);
        ++counts[k];
        sum += k;
    }
    const double inv_e = std::exp(-1.0);
    CHECK(std::abs(counts[1] / double(draws) - inv_e) < 0.005);
    CHECK(std::abs(counts[2] / double(draws) - inv_e) < 0.005);
    CHECK(std::abs(counts[3] / double(draws) - inv_e / 2) < 0.005);
    CHECK(std::abs(sum / draws - 2.0) < 0.005);
}

TEST_CASE("mutate examples")
{
    SUBCASE("single extension")
    {
        // op count 1 on (v1,v2): whenever the draw is (v2,v3) the offspring is (v1,v2,v3)
        const Graph chain = gen_complete_chain(3);
        const PathIndividual parent = make_path(chain, {0, 1});
        Rng rng(1);
        int hits = 0;
        for (int i = 0; i < 600; ++i) {
            Rng probe = rng;
            const EdgeId drawn = draw_incident_edge(chain, 0, 1, probe);
            const Offspring child = mutate_n(chain, parent, 1, rng);
            if (drawn == *chain.find_edge(1, 2)) {
                REQUIRE(child);
                CHECK(child->nodes() == std::vector<NodeId>{0, 1, 2});
                CHECK(child->weight() == 2);
                ++hits;
            }
        }
        CHECK(hits > 50);
    }
    SUBCASE("the two-node graph admits no valid offspring")
    {
        const PathIndividual parent = make_path(bidirected_pair(), {0, 1});
        Rng rng(2);
        for (int i = 0; i < 100; ++i)
            CHECK_FALSE(mutate_n(bidirected_pair(), parent, 1, rng));
    }
    SUBCASE("operations after an invalid state are skipped")
    {
        const PathIndividual parent = make_path(bidirected_pair(), {0, 1});
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            Rng used(seed), reference(seed);
            CHECK_FALSE(mutate_n(bidirected_pair(), parent, 2, used));
            draw_incident_edge(bidirected_pair(), 0, 1, reference);
            CHECK(used == reference); // exactly one draw consumed
        }
    }
}

TEST_CASE("valid offspring are valid paths of the ambient graph")
{
    Rng rng(8);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = 4 + round % 8;
        const Graph g = gen_random_scc(n, std::min<std::size_t>(2 * (round % 7), n * (n - 2)), 6, rng());
        for (int i = 0; i < 50; ++i) {
            const PathIndividual parent = random_path(g, rng);
            if (const Offspring child = mutate(g, parent, rng)) {
                const auto check = validate_edge_set(g, child->edge_ids(g));
                REQUIRE(std::holds_alternative<PathIndividual>(check));
                CHECK(std::get<PathIndividual>(check) == *child);
            }
            const PathIndividual other = random_path(g, rng);
            if (const Offspring child = crossover(g, parent, other)) {
                const auto check = validate_node_sequence(g, child->nodes());
                REQUIRE(std::holds_alternative<PathIndividual>(check));
                CHECK(child->weight() == parent.weight() + other.weight());
                CHECK(child->cardinality() == parent.cardinality() + other.cardinality());
                CHECK(std::get<PathIndividual>(check).weight() == child->weight());
            }
        }
    }
}

TEST_CASE("crossover examples")
{
    const Graph g = gen_complete_chain(4);
    const Offspring joined = crossover(g, make_path(g, {0, 1}), make_path(g, {1, 2}));
    REQUIRE(joined);
    CHECK(joined->nodes() == std::vector<NodeId>{0, 1, 2});
    CHECK(joined->weight() == 2);

    CHECK_FALSE(crossover(g, make_path(g, {0, 1}), make_path(g, {2, 3})));
    CHECK_FALSE(crossover(g, make_path(g, {0, 1, 2}), make_path(g, {2, 0})));
    CHECK_FALSE(crossover(g, make_path(g, {0, 1, 2}), make_path(g, {2, 1, 3}))); // revisits 1
    CHECK_FALSE(crossover(g, make_path(g, {0, 1}), make_path(g, {0, 1})));        // self-pair
}

TEST_CASE("select_standard")
{
    const Graph g = gen_complete_chain(3);
    const OracleTables o = compute_oracle(g);

    SUBCASE("uniform over all cells and never failing on a full archive")
    {
        const Archive a = init_archive(g, &o);
        Rng rng(4);
        std::map<std::pair<NodeId, NodeId>, int> counts;
        const int draws = 120000;
        for (int i = 0; i < draws; ++i) {
            const auto pick = select_standard(a, rng, false);
            REQUIRE(pick);
            ++counts[{pick->cells[0].source, pick->cells[0].target}];
        }
        CHECK(counts.size() == 6);
        for (const auto& [cell, c] : counts)
            CHECK(std::abs(c / double(draws) - 1.0 / 6) < 0.01);
    }
    SUBCASE("a single occupied cell survives two independent draws with probability 1/36")
    {
        Archive a(3);
        a.update(make_path(g, {0, 1}));
        Rng rng(5);
        const int draws = 360000;
        int ok = 0;
        for (int i = 0; i < draws; ++i) {
            const auto pick = select_standard(a, rng, true);
            if (pick) {
                CHECK(pick->cells[0] == Cell{0, 1});
                CHECK(pick->cells[1] == Cell{0, 1});
                ++ok;
            }
        }
        CHECK(std::abs(ok / double(draws) - 1.0 / 36) < 0.002);
    }
}

TEST_CASE("select_improved")
{
    SUBCASE("n = 3 forces the second cell")
    {
        const Graph g = gen_complete_chain(3);
        const Archive a = init_archive(g);
        Rng rng(6);
        for (int i = 0; i < 1000; ++i) {
            const auto pick = select_improved(a, rng);
            REQUIRE(pick);
            const Cell first = pick->cells[0], second = pick->cells[1];
            CHECK(second.source == first.target);
            CHECK(second.target == 3 - first.source - first.target);
        }
    }
    SUBCASE("an empty first cell fails")
    {
        Archive a(4);
        Rng rng(7);
        for (int i = 0; i < 100; ++i)
            CHECK_FALSE(select_improved(a, rng));
    }
    SUBCASE("every compatible pair has probability 1/(n(n-1)(n-2))")
    {
        const Graph g = gen_complete_chain(5);
        const OracleTables o = compute_oracle(g);
        const Archive a = init_archive(g, &o); // complete digraph: every cell occupied
        REQUIRE(a.occupied_count() == a.cell_count());
        Rng rng(8);
        std::map<std::tuple<NodeId, NodeId, NodeId>, int> counts;
        const int draws = 300000;
        for (int i = 0; i < draws; ++i) {
            const auto pick = select_improved(a, rng);
            REQUIRE(pick);
            const Cell first = pick->cells[0], second = pick->cells[1];
            REQUIRE(second.source == first.target);
            REQUIRE(second.target != first.source);
            REQUIRE(second.target != first.target);
            ++counts[{first.source, first.target, second.target}];
        }
        CHECK(counts.size() == 60);
        for (const auto& [triple, c] : counts)
            CHECK(std::abs(c / double(draws) - 1.0 / 60) < 0.002);
    }
    SUBCASE("requires three nodes")
    {
        Archive a = init_archive(bidirected_pair());
        Rng rng(9);
        CHECK_THROWS_AS(select_improved(a, rng), Error);
    }
}

TEST_CASE("improved selection always yields splice-compatible parents")
{
    Rng rng(10);
    for (int round = 0; round < 20; ++round) {
        const Graph g = gen_random_scc(5 + round, 3 * round, 5, rng());
        const Archive a = init_archive(g);
        for (int i = 0; i < 2000; ++i)
            if (const auto pick = select_improved(a, rng))
                CHECK(a.at(pick->cells[0])->target() == a.at(pick->cells[1])->source());
    }
}
