#include <qdapsp/instances.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace qdapsp {

Graph gen_complete_chain(std::size_t n)
{
    if (n < 2)
        throw Error(ErrorCode::SizeTooSmall, "complete chain needs n >= 2, got " + std::to_string(n));
    if (n > max_generated_nodes)
        throw Error(ErrorCode::SizeTooLarge, "complete chain with n=" + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1));
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j)
            if (i != j)
                edges.push_back({i, j, j == i + 1 ? Weight{1} : static_cast<Weight>(n)});
    return Graph(n, std::move(edges));
}

Graph gen_hard_instance(std::size_t n)
{
    if (n < 1)
        throw Error(ErrorCode::SizeTooSmall, "hard instance needs n >= 1");
    const HardInstanceLayout at{n};
    if (at.node_count() > max_generated_nodes)
        throw Error(ErrorCode::SizeTooLarge, "hard instance with n=" + std::to_string(n));

    std::vector<Edge> edges;
    edges.reserve(4 * n * n + 4 * n);
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({at.u(i), at.c(i), 1});
        edges.push_back({at.c(i), at.v(i), 1});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            edges.push_back({at.a(i), at.b(j), 1});
            edges.push_back({at.b(j), at.a(i), 1});
        }
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({at.hub(), at.u(i), 1});
        edges.push_back({at.v(i), at.hub(), 1});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            edges.push_back({at.c(i), at.a(j), 1});
            edges.push_back({at.b(j), at.c(i), 1});
        }
    return Graph(at.node_count(), std::move(edges));
}

Graph gen_bidirected_balanced_tree(std::size_t arity, std::size_t height)
{
    if (arity < 2 || height < 1)
        throw Error(ErrorCode::SizeTooSmall, "tree needs arity >= 2 and height >= 1");
    std::size_t nodes = 1, level = 1;
    for (std::size_t h = 0; h < height; ++h) {
        if (level > max_generated_nodes / arity)
            throw Error(ErrorCode::SizeTooLarge, "tree arity=" + std::to_string(arity) + " height=" + std::to_string(height));
        level *= arity;
        nodes += level;
        if (nodes > max_generated_nodes)
            throw Error(ErrorCode::SizeTooLarge, "tree arity=" + std::to_string(arity) + " height=" + std::to_string(height));
    }
    std::vector<Edge> edges;
    edges.reserve(2 * (nodes - 1));
    for (std::size_t child = 1; child < nodes; ++child) {
        const auto parent = static_cast<NodeId>((child - 1) / arity);
        edges.push_back({parent, static_cast<NodeId>(child), 1});
        edges.push_back({static_cast<NodeId>(child), parent, 1});
    }
    return Graph(nodes, std::move(edges));
}

Graph gen_random_scc(std::size_t n, std::size_t extra_edges, Weight w_max, std::uint64_t seed)
{
    if (n < 2)
        throw Error(ErrorCode::SizeTooSmall, "random graph needs n >= 2");
    if (n > max_generated_nodes)
        throw Error(ErrorCode::SizeTooLarge, "random graph with n=" + std::to_string(n));
    if (w_max < 1)
        throw Error(ErrorCode::NonPositiveWeight, "w_max must be >= 1");
    const std::size_t chords = n * (n - 1) - n;
    if (extra_edges > chords)
        throw Error(ErrorCode::TooManyEdges,
                    std::to_string(extra_edges) + " extra edges requested, at most " + std::to_string(chords) + " fit");

    Rng rng(seed);
    std::uniform_int_distribution<Weight> weight(1, w_max);

    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<char> on_cycle(n * n, 0);
    std::vector<Edge> edges;
    edges.reserve(n + extra_edges);
    for (std::size_t i = 0; i < n; ++i) {
        const NodeId tail = order[i], head = order[(i + 1) % n];
        on_cycle[tail * n + head] = 1;
        edges.push_back({tail, head, weight(rng)});
    }

    std::vector<std::pair<NodeId, NodeId>> candidates;
    candidates.reserve(chords);
    for (NodeId s = 0; s < n; ++s)
        for (NodeId t = 0; t < n; ++t)
            if (s != t && !on_cycle[s * n + t])
                candidates.emplace_back(s, t);
    // partial Fisher-Yates: the first extra_edges slots become a uniform sample
    for (std::size_t i = 0; i < extra_edges; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, candidates.size() - 1);
        std::swap(candidates[i], candidates[pick(rng)]);
        edges.push_back({candidates[i].first, candidates[i].second, weight(rng)});
    }
    return Graph(n, std::move(edges));
}

} // namespace qdapsp
