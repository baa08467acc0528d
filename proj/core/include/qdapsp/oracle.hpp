#ifndef QDAPSP_ORACLE_HPP
#define QDAPSP_ORACLE_HPP

#include <vector>

#include <qdapsp/graph.hpp>

namespace qdapsp {

/// Dense row-major n x n matrix.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    SquareMatrix(std::size_t n, T fill) : _n(n), _data(n * n, fill) {}

    std::size_t size() const noexcept { return _n; }
    T& operator()(NodeId row, NodeId col) { return _data[row * _n + col]; }
    const T& operator()(NodeId row, NodeId col) const { return _data[row * _n + col]; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t _n = 0;
    std::vector<T> _data;
};

using DistanceMatrix = SquareMatrix<Weight>;
using CardinalityMatrix = SquareMatrix<std::uint32_t>;

/// Exact all-pairs shortest-path weights (Floyd-Warshall).
/// Throws Error(NotStronglyConnected) if some ordered pair is unreachable.
DistanceMatrix apsp_distances(const Graph& g);

struct MaxCardinality {
    CardinalityMatrix maxcard;
    std::uint32_t ell = 0;
};

/// For every ordered pair, the largest edge count among minimum-weight paths.
///
/// Per source s, the tight edges {(u,v) : dist(s,u) + w(u,v) = dist(s,v)}
/// form a DAG (weights are positive, so dist strictly increases along them);
/// the answer is the longest path in that DAG, processed in order of dist.
MaxCardinality max_card_shortest(const Graph& g, const DistanceMatrix& dist);

struct OracleTables {
    DistanceMatrix dist;
    CardinalityMatrix maxcard;
    std::size_t delta = 0;
    std::uint32_t ell = 0;

    std::size_t node_count() const { return dist.size(); }
};

OracleTables compute_oracle(const Graph& g);

} // namespace qdapsp

#endif
