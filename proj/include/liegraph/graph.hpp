#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liegraph/admissible.hpp"

namespace liegraph {

/// Labeled directed edge: [start, label] lands (up to a constant) on end.
struct Edge {
    int start, label, end;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled directed graph over basis indices.  Edges are kept sorted and
/// duplicate-free; aux_edges carries the supplementary set produced by the
/// lower-central-series pruning.
struct LieGraph {
    int n_vertices = 0;
    std::vector<std::string> vertex_names;
    std::vector<Edge> edges;
    std::vector<Edge> aux_edges;
    bool allow_self_label = false;  // subspace-vertex graphs may bracket with themselves

    void normalize();  // sort + dedupe
    bool has_edge(const Edge& e) const;
    int out_degree(int v) const;  // edges with start == v
    int in_degree(int v) const;   // edges with end == v
    const std::string& name(int v) const { return vertex_names[v]; }
};

/// Edges of the graph associated with an admissible spanning set: for every
/// pair with a nonvanishing bracket, (j,k,target) and (k,j,target).
LieGraph build_graph(const AdmissibleBasis& b);

struct RuleViolation {
    char rule;  // 'a', 'b' or 'c'
    Edge edge;
    std::string detail;
};
struct RuleReport {
    bool ok = true;
    std::vector<RuleViolation> violations;
};

/// (a) start != label, (b) mirrored pair present, (c) (start,label) determines
/// the end uniquely.
RuleReport validate_edge_rules(const LieGraph& g);

/// Edge-count and degree bounds for minimal graphs, including even |E|.
RuleReport validate_bounds(const LieGraph& g);

enum class SubgraphType {
    I, II, III, IV, V, VI, VII, VIII, IX, X, XI,
    InvalidXII, InvalidXIII, InvalidXIV, InvalidXV, InvalidXVI,
};

struct SubgraphClass {
    SubgraphType type;
    bool proper;
    bool choice_dependent;
};

const char* type_name(SubgraphType t);
SubgraphClass type_metadata(SubgraphType t);

/// Matches the induced three-vertex edge set against the sixteen templates up
/// to vertex relabeling; nullopt means no template fits (the graph cannot be
/// proper-minimal).
std::optional<SubgraphClass> classify_three_vertex(const LieGraph& g, int a, int b, int c);

struct TripleScan {
    std::map<std::array<int, 3>, std::optional<SubgraphClass>> triples;
    bool all_valid = true;      // every triple matched a template
    bool all_proper = true;     // matched and the template is proper
};
TripleScan scan_all_triples(const LieGraph& g);

struct DeltaCompositionResult {
    bool choice_independent_sufficient;  // all two-step targets vanish
    bool proper_minimal_necessary;       // at most one distinct nonzero two-step target
};
DeltaCompositionResult delta_composition_check(const AdmissibleBasis& b);

/// Label-preserving graph isomorphism by permutation search with degree
/// profile pruning.  Practical up to ~10 vertices.
std::optional<std::vector<int>> graph_isomorphic(const LieGraph& g1, const LieGraph& g2);

/// Connected components of the undirected start-end adjacency (labels do not
/// connect).
std::vector<std::vector<int>> unconnected_components(const LieGraph& g);

enum class EdgeKind { Wedge, Loop };
EdgeKind edge_type(const Edge& e);

}  // namespace liegraph
