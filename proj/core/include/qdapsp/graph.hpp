#ifndef QDAPSP_GRAPH_HPP
#define QDAPSP_GRAPH_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <qdapsp/types.hpp>

namespace qdapsp {

struct Edge {
    NodeId tail = 0;
    NodeId head = 0;
    Weight weight = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable directed graph with positive integer weights, dense node ids
/// 0..n-1, no self-loops and at most one edge per ordered pair.
///
/// Adjacency lists are kept sorted by the opposite endpoint so edge lookup
/// is a binary search over the tail's out-list.
class Graph {
public:
    Graph() = default;

    /// Validates and indexes the edge list. Throws Error with DuplicateEdge,
    /// SelfLoop, NonPositiveWeight or NodeOutOfRange naming the offending edge.
    Graph(std::size_t node_count, std::vector<Edge> edges);

    std::size_t node_count() const noexcept { return _out.size(); }
    std::size_t edge_count() const noexcept { return _edges.size(); }

    const std::vector<Edge>& edges() const noexcept { return _edges; }
    const Edge& edge(EdgeId id) const { return _edges[id]; }

    std::span<const EdgeId> out_edges(NodeId v) const { return _out[v]; }
    std::span<const EdgeId> in_edges(NodeId v) const { return _in[v]; }

    /// Incident-edge count (in-degree plus out-degree).
    std::size_t degree(NodeId v) const { return _out[v].size() + _in[v].size(); }

    std::optional<EdgeId> find_edge(NodeId tail, NodeId head) const;
    bool has_edge(NodeId tail, NodeId head) const { return find_edge(tail, head).has_value(); }

    void check_node(NodeId v) const;

private:
    std::vector<Edge> _edges;
    std::vector<std::vector<EdgeId>> _out;
    std::vector<std::vector<EdgeId>> _in;
};

inline Graph build_graph(std::size_t node_count, std::vector<Edge> edges)
{
    return Graph(node_count, std::move(edges));
}

/// Every edge whose tail or head is a or b, each listed once, sorted by id.
std::vector<EdgeId> incident_edges(const Graph& g, NodeId a, NodeId b);

/// Number of distinct edges incident to a or b, without materialising them.
std::size_t incident_edge_count(const Graph& g, NodeId a, NodeId b);

/// Maximum incident-edge count over all nodes.
std::size_t max_incident_degree(const Graph& g);

/// Maximum number of distinct neighbours (in or out) over all nodes.
/// Diagnostic only; it differs from max_incident_degree on bidirected pairs.
std::size_t max_neighbor_degree(const Graph& g);

bool is_strongly_connected(const Graph& g);

/// Text format: "n m" header, then one "tail head weight" line per edge.
void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);

} // namespace qdapsp

#endif
