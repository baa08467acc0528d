#include <qdapsp/graph.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace qdapsp {

namespace {

std::string describe(const Edge& e)
{
    std::ostringstream os;
    os << "edge (" << e.tail << "," << e.head << "," << e.weight << ")";
    return os.str();
}

// Reachability of every node from node 0, following out-edges (forward) or in-edges.
bool reaches_all(const Graph& g, bool forward)
{
    const std::size_t n = g.node_count();
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (EdgeId id : forward ? g.out_edges(v) : g.in_edges(v)) {
            const Edge& e = g.edge(id);
            const NodeId w = forward ? e.head : e.tail;
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

} // namespace

Graph::Graph(std::size_t node_count, std::vector<Edge> edges)
    : _edges(std::move(edges)), _out(node_count), _in(node_count)
{
    if (node_count == 0)
        throw Error(ErrorCode::SizeTooSmall, "graph needs at least one node");

    for (EdgeId id = 0; id < _edges.size(); ++id) {
        const Edge& e = _edges[id];
        if (e.tail >= node_count || e.head >= node_count)
            throw Error(ErrorCode::NodeOutOfRange, describe(e));
        if (e.tail == e.head)
            throw Error(ErrorCode::SelfLoop, describe(e));
        if (e.weight < 1)
            throw Error(ErrorCode::NonPositiveWeight, describe(e));
        _out[e.tail].push_back(id);
        _in[e.head].push_back(id);
    }

    for (auto& list : _out) {
        std::sort(list.begin(), list.end(), [&](EdgeId a, EdgeId b) { return _edges[a].head < _edges[b].head; });
        auto dup = std::adjacent_find(list.begin(), list.end(),
                                      [&](EdgeId a, EdgeId b) { return _edges[a].head == _edges[b].head; });
        if (dup != list.end())
            throw Error(ErrorCode::DuplicateEdge, describe(_edges[*std::next(dup)]));
    }
    for (auto& list : _in)
        std::sort(list.begin(), list.end(), [&](EdgeId a, EdgeId b) { return _edges[a].tail < _edges[b].tail; });
}

std::optional<EdgeId> Graph::find_edge(NodeId tail, NodeId head) const
{
    if (tail >= node_count() || head >= node_count())
        return std::nullopt;
    const auto& list = _out[tail];
    auto it = std::lower_bound(list.begin(), list.end(), head,
                               [&](EdgeId id, NodeId h) { return _edges[id].head < h; });
    if (it != list.end() && _edges[*it].head == head)
        return *it;
    return std::nullopt;
}

void Graph::check_node(NodeId v) const
{
    if (v >= node_count())
        throw Error(ErrorCode::NodeOutOfRange, "node " + std::to_string(v) + " (n=" + std::to_string(node_count()) + ")");
}

std::vector<EdgeId> incident_edges(const Graph& g, NodeId a, NodeId b)
{
    g.check_node(a);
    g.check_node(b);
    std::vector<EdgeId> result;
    result.reserve(g.degree(a) + g.degree(b));
    for (NodeId v : {a, b}) {
        result.insert(result.end(), g.out_edges(v).begin(), g.out_edges(v).end());
        result.insert(result.end(), g.in_edges(v).begin(), g.in_edges(v).end());
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::size_t incident_edge_count(const Graph& g, NodeId a, NodeId b)
{
    std::size_t count = g.degree(a) + g.degree(b);
    if (a != b) {
        count -= g.has_edge(a, b) ? 1 : 0;
        count -= g.has_edge(b, a) ? 1 : 0;
    } else {
        count = g.degree(a);
    }
    return count;
}

std::size_t max_incident_degree(const Graph& g)
{
    std::size_t best = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

std::size_t max_neighbor_degree(const Graph& g)
{
    std::size_t best = 0;
    std::vector<NodeId> neighbours;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        neighbours.clear();
        for (EdgeId id : g.out_edges(v))
            neighbours.push_back(g.edge(id).head);
        for (EdgeId id : g.in_edges(v))
            neighbours.push_back(g.edge(id).tail);
        std::sort(neighbours.begin(), neighbours.end());
        best = std::max<std::size_t>(best, std::unique(neighbours.begin(), neighbours.end()) - neighbours.begin());
    }
    return best;
}

bool is_strongly_connected(const Graph& g)
{
    if (g.node_count() == 0)
        return false;
    return reaches_all(g, true) && reaches_all(g, false);
}

void write_graph(std::ostream& os, const Graph& g)
{
    os << g.node_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        os << e.tail << ' ' << e.head << ' ' << e.weight << '\n';
}

Graph read_graph(std::istream& is)
{
    long long n = 0, m = 0;
    if (!(is >> n >> m) || n <= 0 || m < 0)
        throw Error(ErrorCode::Format, "graph header must be \"n m\" with n > 0, m >= 0");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long tail = 0, head = 0, weight = 0;
        if (!(is >> tail >> head >> weight))
            throw Error(ErrorCode::Format, "expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
        if (tail < 0 || head < 0)
            throw Error(ErrorCode::NodeOutOfRange, "negative node id on edge line " + std::to_string(i + 1));
        edges.push_back({static_cast<NodeId>(tail), static_cast<NodeId>(head), weight});
    }
    std::string trailing;
    if (is >> trailing)
        throw Error(ErrorCode::Format, "trailing content after " + std::to_string(m) + " edges");
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

} // namespace qdapsp
