#include <qdapsp/operators.hpp>

#include <algorithm>
#include <cmath>

namespace qdapsp {

namespace {

bool contains(const std::vector<NodeId>& nodes, NodeId v)
{
    return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
}

} // namespace

void toggle_edge(const Graph& g, MutationState& state, EdgeId id)
{
    const Edge& e = g.edge(id);
    auto& nodes = state.nodes;
    const NodeId s = state.source(), t = state.target();
    const std::size_t k = nodes.size();

    // The only path edges touching an endpoint are the first and the last.
    const bool is_first = e.tail == s && e.head == nodes[1];
    const bool is_last = e.tail == nodes[k - 2] && e.head == t;
    if (is_first || is_last) {
        if (k == 2) {
            state.invalid = InvalidReason::Empty;
            return;
        }
        if (is_first)
            nodes.erase(nodes.begin());
        else
            nodes.pop_back();
        state.weight -= e.weight;
        return;
    }

    if (e.head == s) {
        if (e.tail == t)
            state.invalid = InvalidReason::Cycle;
        else if (contains(nodes, e.tail))
            state.invalid = InvalidReason::Branching;
        else {
            nodes.insert(nodes.begin(), e.tail);
            state.weight += e.weight;
        }
        return;
    }
    if (e.tail == t) {
        if (contains(nodes, e.head))
            state.invalid = InvalidReason::Branching;
        else {
            nodes.push_back(e.head);
            state.weight += e.weight;
        }
        return;
    }
    // A second out-edge at s or a second in-edge at t.
    state.invalid = InvalidReason::Branching;
}

EdgeId draw_incident_edge(const Graph& g, NodeId a, NodeId b, Rng& rng)
{
    const std::size_t da = g.degree(a);
    std::uniform_int_distribution<std::size_t> slot(0, da + g.degree(b) - 1);
    // Slots enumerate out(a), in(a), out(b), in(b); the copies of (a,b) and
    // (b,a) in b's lists are rejected so every distinct edge has one slot.
    for (;;) {
        std::size_t r = slot(rng);
        if (r < g.out_edges(a).size())
            return g.out_edges(a)[r];
        r -= g.out_edges(a).size();
        if (r < g.in_edges(a).size())
            return g.in_edges(a)[r];
        r -= g.in_edges(a).size();
        EdgeId id;
        if (r < g.out_edges(b).size())
            id = g.out_edges(b)[r];
        else
            id = g.in_edges(b)[r - g.out_edges(b).size()];
        const Edge& e = g.edge(id);
        if (e.tail != a && e.head != a)
            return id;
    }
}

void elementary_op(const Graph& g, MutationState& state, Rng& rng)
{
    toggle_edge(g, state, draw_incident_edge(g, state.source(), state.target(), rng));
}

unsigned sample_op_count(Rng& rng)
{
    static const double p0 = std::exp(-1.0);
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    unsigned k = 0;
    double p = p0, cumulative = p0;
    while (u >= cumulative && k < 64) {
        ++k;
        p /= k;
        cumulative += p;
    }
    return k + 1;
}

Offspring mutate_n(const Graph& g, const PathIndividual& parent, unsigned op_count, Rng& rng)
{
    MutationState state(parent);
    for (unsigned i = 0; i < op_count; ++i) {
        elementary_op(g, state, rng);
        if (!state.defined())
            return std::nullopt;
    }
    return PathIndividual(std::move(state.nodes), state.weight);
}

Offspring mutate(const Graph& g, const PathIndividual& parent, Rng& rng)
{
    return mutate_n(g, parent, sample_op_count(rng), rng);
}

Offspring crossover(const Graph&, const PathIndividual& first, const PathIndividual& second)
{
    if (first.target() != second.source() || first.source() == second.target())
        return std::nullopt;
    std::vector<NodeId> joined;
    joined.reserve(first.nodes().size() + second.nodes().size() - 1);
    joined.insert(joined.end(), first.nodes().begin(), first.nodes().end());
    joined.insert(joined.end(), second.nodes().begin() + 1, second.nodes().end());

    std::vector<NodeId> sorted(joined);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return std::nullopt;
    return PathIndividual(std::move(joined), first.weight() + second.weight());
}

std::optional<Selection> select_standard(const Archive& archive, Rng& rng, bool need_two)
{
    std::uniform_int_distribution<std::size_t> any_cell(0, archive.cell_count() - 1);
    Selection pick{};
    pick.cells[0] = archive.cell_at(any_cell(rng));
    if (need_two)
        pick.cells[1] = archive.cell_at(any_cell(rng));
    if (!archive.at(pick.cells[0]) || (need_two && !archive.at(pick.cells[1])))
        return std::nullopt;
    return pick;
}

std::optional<Selection> select_improved(const Archive& archive, Rng& rng)
{
    const std::size_t n = archive.node_count();
    if (n < 3)
        throw Error(ErrorCode::InvalidConfig, "improved selection needs at least three nodes");
    std::uniform_int_distribution<std::size_t> any_cell(0, archive.cell_count() - 1);
    Selection pick{};
    pick.cells[0] = archive.cell_at(any_cell(rng));
    if (!archive.at(pick.cells[0]))
        return std::nullopt;

    const NodeId s = pick.cells[0].source, t = pick.cells[0].target;
    const NodeId lo = std::min(s, t), hi = std::max(s, t);
    // Map 0..n-3 onto the columns other than s and t.
    NodeId column = static_cast<NodeId>(std::uniform_int_distribution<std::size_t>(0, n - 3)(rng));
    if (column >= lo)
        ++column;
    if (column >= hi)
        ++column;
    pick.cells[1] = {t, column};
    if (!archive.at(pick.cells[1]))
        return std::nullopt;
    return pick;
}

} // namespace qdapsp
