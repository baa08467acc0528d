#ifndef QDAPSP_OPERATORS_HPP
#define QDAPSP_OPERATORS_HPP

#include <array>
#include <optional>

#include <qdapsp/archive.hpp>

namespace qdapsp {

/// The offspring being built by mutation. While defined, `nodes` is a valid
/// simple path; once an elementary operation breaks it, `invalid` records why
/// and `nodes` holds the last valid path (kept for diagnostics).
struct MutationState {
    std::vector<NodeId> nodes;
    Weight weight = 0;
    std::optional<InvalidReason> invalid;

    explicit MutationState(const PathIndividual& parent) : nodes(parent.nodes()), weight(parent.weight()) {}

    bool defined() const { return !invalid; }
    NodeId source() const { return nodes.front(); }
    NodeId target() const { return nodes.back(); }
};

/// Toggles edge `id` (which must be incident to the current endpoints):
/// removes it if it is on the path, adds it otherwise, and revalidates.
void toggle_edge(const Graph& g, MutationState& state, EdgeId id);

/// Uniform draw from incident_edges(g, a, b) without materialising the set.
EdgeId draw_incident_edge(const Graph& g, NodeId a, NodeId b, Rng& rng);

/// One elementary operation: draw uniformly from the edges incident to the
/// current endpoints and toggle it.
void elementary_op(const Graph& g, MutationState& state, Rng& rng);

/// 1 + Pois(1), by cumulative inversion of one uniform draw.
unsigned sample_op_count(Rng& rng);

/// Applies exactly op_count elementary operations, stopping early (and
/// returning nullopt) as soon as the offspring stops being a valid path.
Offspring mutate_n(const Graph& g, const PathIndividual& parent, unsigned op_count, Rng& rng);

/// Standard mutation: mutate_n with sample_op_count(rng) operations.
Offspring mutate(const Graph& g, const PathIndividual& parent, Rng& rng);

/// Appends second to first when first ends where second starts and the
/// result is a simple path; nullopt otherwise.
Offspring crossover(const Graph& g, const PathIndividual& first, const PathIndividual& second);

/// Parent cells picked by a selection scheme; the second entry is unused for
/// single-parent selection.
struct Selection {
    std::array<Cell, 2> cells;
};

/// Draws one or two independent cells uniformly over all n(n-1) cells.
/// Both draws are made before checking; nullopt if any drawn cell is empty.
std::optional<Selection> select_standard(const Archive& archive, Rng& rng, bool need_two);

/// Draws (s,t) uniformly over all cells, then (t,v) uniformly over row t
/// with v not in {s,t}. nullopt as soon as a drawn cell is empty. Requires n >= 3.
std::optional<Selection> select_improved(const Archive& archive, Rng& rng);

} // namespace qdapsp

#endif
