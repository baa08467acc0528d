#ifndef QDAPSP_PATH_HPP
#define QDAPSP_PATH_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <qdapsp/graph.hpp>

namespace qdapsp {

/// A simple directed path with at least one edge. The node sequence is the
/// stored form; the edge set is derived on demand.
class PathIndividual {
public:
    /// Trusted constructor: the caller guarantees nodes form a simple path of
    /// the given weight. Use make_path or validate_edge_set for untrusted input.
    PathIndividual(std::vector<NodeId> nodes, Weight weight) : _nodes(std::move(nodes)), _weight(weight) {}

    NodeId source() const { return _nodes.front(); }
    NodeId target() const { return _nodes.back(); }
    Cell cell() const { return {source(), target()}; }
    std::size_t cardinality() const { return _nodes.size() - 1; }
    Weight weight() const { return _weight; }
    const std::vector<NodeId>& nodes() const { return _nodes; }

    /// Edge ids along the path, in traversal order.
    std::vector<EdgeId> edge_ids(const Graph& g) const;

    friend bool operator==(const PathIndividual&, const PathIndividual&) = default;

private:
    std::vector<NodeId> _nodes;
    Weight _weight;
};

/// Offspring of a variation operator; nullopt is an invalid individual.
using Offspring = std::optional<PathIndividual>;

enum class InvalidReason {
    Empty,
    Branching,
    Disconnected,
    Cycle,
    ClosedWalk,
    MissingEdge,
};

const char* to_string(InvalidReason reason) noexcept;

using ValidationResult = std::variant<PathIndividual, InvalidReason>;

/// Sum of edge weights along a node sequence. Throws Error(MissingEdge)
/// naming the first consecutive pair that is not an edge.
Weight path_weight(const Graph& g, std::span<const NodeId> nodes);

/// Checks that an edge set is exactly one simple directed path and rebuilds it.
///   Empty        - no edges
///   Branching    - some node has in- or out-degree above one
///   Disconnected - several path components
///   Cycle        - a cycle component is present (alone or beside a path)
ValidationResult validate_edge_set(const Graph& g, std::span<const EdgeId> edge_ids);

/// Checks a node sequence: at least two nodes, consecutive pairs are edges,
/// no repeated node. A sequence returning to its first node is a ClosedWalk;
/// any other repetition is a Cycle.
ValidationResult validate_node_sequence(const Graph& g, std::span<const NodeId> nodes);

/// Throwing convenience over validate_node_sequence.
PathIndividual make_path(const Graph& g, std::vector<NodeId> nodes);

/// Space-separated node ids.
std::string format_path(const PathIndividual& path);

} // namespace qdapsp

#endif
