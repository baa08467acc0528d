#include <qdapsp/path.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace qdapsp {

const char* to_string(InvalidReason reason) noexcept
{
    switch (reason) {
    case InvalidReason::Empty: return "Empty";
    case InvalidReason::Branching: return "Branching";
    case InvalidReason::Disconnected: return "Disconnected";
    case InvalidReason::Cycle: return "Cycle";
    case InvalidReason::ClosedWalk: return "ClosedWalk";
    case InvalidReason::MissingEdge: return "MissingEdge";
    }
    return "Unknown";
}

std::vector<EdgeId> PathIndividual::edge_ids(const Graph& g) const
{
    std::vector<EdgeId> ids;
    ids.reserve(cardinality());
    for (std::size_t i = 0; i + 1 < _nodes.size(); ++i) {
        auto id = g.find_edge(_nodes[i], _nodes[i + 1]);
        if (!id)
            throw Error(ErrorCode::MissingEdge,
                        "(" + std::to_string(_nodes[i]) + "," + std::to_string(_nodes[i + 1]) + ")");
        ids.push_back(*id);
    }
    return ids;
}

Weight path_weight(const Graph& g, std::span<const NodeId> nodes)
{
    Weight total = 0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        auto id = g.find_edge(nodes[i], nodes[i + 1]);
        if (!id)
            throw Error(ErrorCode::MissingEdge,
                        "(" + std::to_string(nodes[i]) + "," + std::to_string(nodes[i + 1]) + ")");
        total += g.edge(*id).weight;
    }
    return total;
}

ValidationResult validate_edge_set(const Graph& g, std::span<const EdgeId> edge_ids)
{
    std::vector<EdgeId> ids(edge_ids.begin(), edge_ids.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty())
        return InvalidReason::Empty;

    struct Degrees {
        int in = 0;
        int out = 0;
        EdgeId next = 0;
    };
    std::unordered_map<NodeId, Degrees> nodes;
    nodes.reserve(2 * ids.size());
    for (EdgeId id : ids) {
        const Edge& e = g.edge(id);
        auto& tail = nodes[e.tail];
        tail.out += 1;
        tail.next = id;
        nodes[e.head].in += 1;
    }

    std::size_t sources = 0;
    NodeId start = 0;
    for (const auto& [node, d] : nodes) {
        if (d.in > 1 || d.out > 1)
            return InvalidReason::Branching;
        if (d.out == 1 && d.in == 0) {
            ++sources;
            start = node;
        }
    }
    if (sources == 0)
        return InvalidReason::Cycle;
    if (sources > 1)
        return InvalidReason::Disconnected;

    // With all degrees <= 1 and a unique source, the walk from it is a simple
    // path; anything it does not cover is a cycle component.
    std::vector<NodeId> sequence{start};
    Weight weight = 0;
    NodeId at = start;
    while (nodes[at].out == 1) {
        const Edge& e = g.edge(nodes[at].next);
        weight += e.weight;
        at = e.head;
        sequence.push_back(at);
    }
    if (sequence.size() - 1 != ids.size())
        return InvalidReason::Cycle;
    return PathIndividual(std::move(sequence), weight);
}

ValidationResult validate_node_sequence(const Graph& g, std::span<const NodeId> nodes)
{
    if (nodes.size() < 2)
        return InvalidReason::Empty;
    Weight weight = 0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        auto id = g.find_edge(nodes[i], nodes[i + 1]);
        if (!id)
            return InvalidReason::MissingEdge;
        weight += g.edge(*id).weight;
    }
    if (nodes.front() == nodes.back())
        return InvalidReason::ClosedWalk;
    std::vector<NodeId> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return InvalidReason::Cycle;
    return PathIndividual(std::vector<NodeId>(nodes.begin(), nodes.end()), weight);
}

PathIndividual make_path(const Graph& g, std::vector<NodeId> nodes)
{
    auto result = validate_node_sequence(g, nodes);
    if (auto* reason = std::get_if<InvalidReason>(&result)) {
        if (*reason == InvalidReason::MissingEdge)
            path_weight(g, nodes); // throws with the offending pair
        throw Error(ErrorCode::Format, std::string("not a simple path: ") + to_string(*reason));
    }
    return std::get<PathIndividual>(std::move(result));
}

std::string format_path(const PathIndividual& path)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < path.nodes().size(); ++i)
        os << (i ? " " : "") << path.nodes()[i];
    return os.str();
}

} // namespace qdapsp
