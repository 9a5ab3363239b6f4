#pragma once

#include "liegraph/series.hpp"

namespace liegraph {

struct CentralVertices {
    std::vector<int> vertices;  // zero out-degree
    Subspace span;              // subalgebra of the center, not necessarily all of it
};
CentralVertices central_vertices(const LieGraph& g, const AdmissibleBasis& b);

/// Adjoins a basis of the center (skipping elements proportional to existing
/// vertices) and re-checks admissibility; afterwards the zero-out-degree
/// vertices span the center exactly.
AdmissibleBasis extend_basis_with_center(const LieAlgebra& g, const AdmissibleBasis& b);

/// Center from the per-target slices of alpha: intersection of their kernels,
/// mapped through the basis coordinates.  Minimal bases only.
Subspace center_via_kernels(const LieAlgebra& g, const AdmissibleBasis& b);

bool is_abelian_graph(const LieGraph& g);

/// No edge starts inside W and ends outside W.
bool satisfies_igp(const LieGraph& g, const std::vector<int>& w);

struct IdealSet {
    std::vector<int> vertices;   // generating subset, ascending
    bool is_closure = false;     // a single-seed forward-reachability closure
    Subspace span;
};
struct IdealEnumeration {
    std::vector<IdealSet> ideals;  // including {0} (empty set) and V
    bool truncated = false;        // union lattice capped (too many closures)
};
/// Forward-reachability closures from every seed, deduplicated, unioned, and
/// re-verified against the algebra.
IdealEnumeration enumerate_ideals(const LieAlgebra& g, const AdmissibleBasis& b,
                                  const LieGraph& graph);

enum class FlowClass { Lake, Tributary, DisappearingStream };
struct LTDClass {
    std::vector<FlowClass> vertex_class;
    std::vector<FlowClass> edge_class;  // parallel to g.edges
    std::vector<bool> sinkhole;         // zero out-degree
    std::vector<bool> loose_end;        // zero in-degree, at least one out-edge
};
LTDClass ltd_classification(const LieGraph& g);

/// Some closed directed walk visits every vertex (necessary for simplicity);
/// equivalently the start->end digraph is strongly connected and no proper
/// nonempty subset has the ideal-graph-property.
bool simplicity_necessary(const LieGraph& g);

struct SemisimplicityReport {
    bool sinkhole_free;
    bool loose_end_free;
    bool every_vertex_on_self_contained_closed_walk;  // conjecture-level check
    bool cartan_semisimple;                           // authoritative verdict
    bool simple_candidate;                            // semisimple + one component
    std::vector<std::vector<int>> components;         // candidate simple ideals
};
SemisimplicityReport semisimplicity_report(const LieAlgebra& g, const AdmissibleBasis& b,
                                           const LieGraph& graph);

/// support[j][k] is true iff the two-step return pattern for (j,k) occurs; on
/// minimal graphs a nonzero Killing entry forces the pattern.
std::vector<std::vector<bool>> killing_support(const LieGraph& g);
bool semisimple_killing_necessary(const LieGraph& g);

struct ZnSymmetry {
    bool symmetric;
    std::vector<int> cycle;  // witness automorphism as one n-cycle (images)
};
/// Graph automorphism that is a single n-cycle on vertices.
ZnSymmetry zn_symmetry(const LieGraph& g);

struct LeviReport {
    Subspace radical;
    int semisimple_dim;
    std::vector<int> radical_vertices;   // IGP vertex set matching the radical, if any
    bool radical_vertex_match;
    std::vector<Edge> cross_edges;       // semisimple-part start, radical end
    bool radical_nilpotent;
    int radical_lcs_steps;               // termination step of the restricted series
};
LeviReport levi_report(const LieAlgebra& g, const AdmissibleBasis& b, const LieGraph& graph);

}  // namespace liegraph
