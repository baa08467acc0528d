#include <qdapsp/oracle.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace qdapsp {

namespace {
constexpr Weight unreachable = std::numeric_limits<Weight>::max() / 4;
}

DistanceMatrix apsp_distances(const Graph& g)
{
    const std::size_t n = g.node_count();
    DistanceMatrix dist(n, unreachable);
    for (NodeId v = 0; v < n; ++v)
        dist(v, v) = 0;
    for (const Edge& e : g.edges())
        dist(e.tail, e.head) = std::min(dist(e.tail, e.head), e.weight);

    for (NodeId k = 0; k < n; ++k)
        for (NodeId i = 0; i < n; ++i) {
            const Weight via = dist(i, k);
            if (via == unreachable)
                continue;
            for (NodeId j = 0; j < n; ++j)
                dist(i, j) = std::min(dist(i, j), via + dist(k, j));
        }

    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j)
            if (dist(i, j) >= unreachable)
                throw Error(ErrorCode::NotStronglyConnected,
                            "node " + std::to_string(j) + " unreachable from " + std::to_string(i));
    return dist;
}

MaxCardinality max_card_shortest(const Graph& g, const DistanceMatrix& dist)
{
    const std::size_t n = g.node_count();
    MaxCardinality result{CardinalityMatrix(n, 0), 0};
    std::vector<NodeId> order(n);
    std::vector<std::int64_t> longest(n);

    for (NodeId s = 0; s < n; ++s) {
        std::iota(order.begin(), order.end(), NodeId{0});
        std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return dist(s, a) < dist(s, b); });
        std::fill(longest.begin(), longest.end(), -1);
        longest[s] = 0;
        for (NodeId u : order) {
            if (longest[u] < 0)
                continue;
            for (EdgeId id : g.out_edges(u)) {
                const Edge& e = g.edge(id);
                if (dist(s, u) + e.weight == dist(s, e.head))
                    longest[e.head] = std::max(longest[e.head], longest[u] + 1);
            }
        }
        for (NodeId t = 0; t < n; ++t) {
            if (t == s)
                continue;
            result.maxcard(s, t) = static_cast<std::uint32_t>(longest[t]);
            result.ell = std::max(result.ell, result.maxcard(s, t));
        }
    }
    return result;
}

OracleTables compute_oracle(const Graph& g)
{
    OracleTables tables;
    tables.dist = apsp_distances(g);
    auto card = max_card_shortest(g, tables.dist);
    tables.maxcard = std::move(card.maxcard);
    tables.ell = card.ell;
    tables.delta = max_incident_degree(g);
    return tables;
}

} // namespace qdapsp
