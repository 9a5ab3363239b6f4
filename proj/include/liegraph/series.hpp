#pragma once

#include <optional>

#include "liegraph/graph.hpp"

namespace liegraph {

/// Pruning stages of a graph-level series.  Stage 0 is the input graph; each
/// stage keeps the surviving vertices (marked by the `alive` masks, vertex
/// indices refer to the original graph) and the surviving/auxiliary edges.
struct GraphSeries {
    struct Stage {
        std::vector<int> vertices;  // surviving vertex indices, ascending
        std::vector<Edge> edges;
        std::vector<Edge> aux_edges;  // lower-central supplementary set
    };
    std::vector<Stage> stages;
    bool terminated = false;  // last stage has no vertices
    int stable_from = -1;     // index of the stage the series stopped changing at
};

/// Alternating vertex/edge sequence.
struct Walk {
    std::vector<int> vertices;  // v0, v1, ..., vs
    std::vector<Edge> edges;    // e0, ..., e_{s-1}
    bool closed = false;
    bool self_contained = false;

    bool well_formed() const;  // consecutive edges connect; flags consistent
};

/// Keeps the vertices that are ends of edges whose start and label both
/// survive; edges keep all three components surviving.
GraphSeries derived_graph_series(const LieGraph& g);

/// Variant that re-adds a dropped vertex whenever its element lies in the
/// span of the survivors (redundant spanning sets).
GraphSeries derived_graph_series_redundant(const LieGraph& g, const AdmissibleBasis& b);

/// Keeps the vertices targeted by surviving or auxiliary edges; the auxiliary
/// set holds edges whose endpoints survive but whose label was dropped.
GraphSeries lcs_graph_series(const LieGraph& g);

struct SolvableResult {
    bool solvable;
    std::optional<Walk> witness;  // self-contained closed walk when non-solvable
};
SolvableResult is_solvable_graph(const LieGraph& g);

struct NilpotentResult {
    bool nilpotent;
    std::optional<Walk> witness;  // closed walk in the start->end digraph
};
NilpotentResult is_nilpotent_graph(const LieGraph& g);

/// Longest directed walk length + 1 for a nilpotent non-abelian graph,
/// cross-checked against the series termination step.  nullopt for abelian or
/// non-nilpotent graphs.
std::optional<int> nilpotency_index(const LieGraph& g);

/// Vertices lying on some closed directed walk that induces a self-contained
/// subgraph (exact fixpoint computation).
std::vector<int> self_contained_cycle_vertices(const LieGraph& g);

}  // namespace liegraph
