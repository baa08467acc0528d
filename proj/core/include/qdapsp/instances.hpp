#ifndef QDAPSP_INSTANCES_HPP
#define QDAPSP_INSTANCES_HPP

#include <cstdint>

#include <qdapsp/graph.hpp>

namespace qdapsp {

/// Upper bound on generated node counts.
inline constexpr std::size_t max_generated_nodes = 1u << 16;

/// Complete digraph on v_1..v_n (ids 0..n-1). w(v_i, v_{i+1}) = 1, every other edge weighs n.
Graph gen_complete_chain(std::size_t n);

/// Node ids of the hard instance for block size n.
struct HardInstanceLayout {
    std::size_t n;

    NodeId u(std::size_t i) const { return static_cast<NodeId>(i); }
    NodeId c(std::size_t i) const { return static_cast<NodeId>(n + i); }
    NodeId v(std::size_t i) const { return static_cast<NodeId>(2 * n + i); }
    NodeId a(std::size_t i) const { return static_cast<NodeId>(3 * n + i); }
    NodeId b(std::size_t i) const { return static_cast<NodeId>(4 * n + i); }
    NodeId hub() const { return static_cast<NodeId>(5 * n); }
    std::size_t node_count() const { return 5 * n + 1; }
};

/// Unit-weight graph with 5n+1 nodes: paths u_i -> c_i -> v_i, a bidirected
/// complete bipartite block A x B, a hub with (hub,u_i) and (v_i,hub), and
/// connectors (c_i,a) and (b,c_i). Numbering follows HardInstanceLayout.
Graph gen_hard_instance(std::size_t n);

/// Perfect arity-ary tree of the given height, every tree edge in both
/// directions with weight 1. Nodes are numbered breadth-first from the root (0).
Graph gen_bidirected_balanced_tree(std::size_t arity, std::size_t height);

/// Random Hamiltonian cycle plus extra_edges distinct random chords, weights
/// uniform in [1, w_max]. Deterministic in seed.
Graph gen_random_scc(std::size_t n, std::size_t extra_edges, Weight w_max, std::uint64_t seed);

} // namespace qdapsp

#endif
