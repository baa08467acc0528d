#ifndef QDAPSP_TESTS_BRUTE_FORCE_HPP
#define QDAPSP_TESTS_BRUTE_FORCE_HPP

// Exhaustive reference implementations used only by tests. They share no code
// path with the library beyond Graph's accessors.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include <qdapsp/graph.hpp>

namespace qdapsp::testing {

/// Minimum weight and largest edge count among minimum-weight simple paths,
/// for one ordered pair, by enumerating every simple path.
struct BrutePair {
    Weight dist = std::numeric_limits<Weight>::max();
    std::size_t maxcard = 0;
    bool reachable = false;
};

class SimplePathEnumerator {
public:
    explicit SimplePathEnumerator(const Graph& g) : _g(g), _on_path(g.node_count(), 0) {}

    BrutePair solve(NodeId s, NodeId t)
    {
        _best = {};
        _target = t;
        _on_path.assign(_g.node_count(), 0);
        _on_path[s] = 1;
        dfs(s, 0, 0);
        return _best;
    }

private:
    void dfs(NodeId at, Weight weight, std::size_t edges)
    {
        if (at == _target) {
            if (!_best.reachable || weight < _best.dist) {
                _best = {weight, edges, true};
            } else if (weight == _best.dist) {
                _best.maxcard = std::max(_best.maxcard, edges);
            }
            return;
        }
        for (const Edge& e : _g.edges()) {
            if (e.tail != at || _on_path[e.head])
                continue;
            _on_path[e.head] = 1;
            dfs(e.head, weight + e.weight, edges + 1);
            _on_path[e.head] = 0;
        }
    }

    const Graph& _g;
    std::vector<char> _on_path;
    NodeId _target = 0;
    BrutePair _best;
};

/// True when some ordering of the edges chains head-to-tail into a path that
/// never revisits a node. Returns that node sequence.
inline std::optional<std::vector<NodeId>> brute_force_path(const Graph& g, std::vector<EdgeId> ids)
{
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty())
        return std::nullopt;
    do {
        std::vector<NodeId> seq{g.edge(ids[0]).tail};
        bool ok = true;
        for (EdgeId id : ids) {
            const Edge& e = g.edge(id);
            if (e.tail != seq.back() || std::find(seq.begin(), seq.end(), e.head) != seq.end()) {
                ok = false;
                break;
            }
            seq.push_back(e.head);
        }
        if (ok)
            return seq;
    } while (std::next_permutation(ids.begin(), ids.end()));
    return std::nullopt;
}

/// Arbitrary digraph (not necessarily strongly connected) with each ordered
/// pair present with probability density, weights uniform in [1, w_max].
template <typename Rng>
Graph random_digraph(std::size_t n, double density, Weight w_max, Rng& rng)
{
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<Weight> weight(1, w_max);
    std::vector<Edge> edges;
    for (NodeId s = 0; s < n; ++s)
        for (NodeId t = 0; t < n; ++t)
            if (s != t && keep(rng))
                edges.push_back({s, t, weight(rng)});
    return Graph(n, std::move(edges));
}

} // namespace qdapsp::testing

#endif
