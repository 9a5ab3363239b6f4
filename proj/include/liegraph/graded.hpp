#pragma once

#include "liegraph/series.hpp"

namespace liegraph {

/// Direct-sum decomposition indexed by an abelian magma, with every bracket
/// of two parts contained in a single target part ([g_j, g_k] subset of
/// g_{delta(j,k)}); delta[j][k] == kNoTarget records a vanishing bracket.
struct MagmaGradation {
    std::vector<Subspace> parts;
    std::vector<std::string> part_names;
    std::vector<std::vector<int>> delta;
    int granularity() const { return static_cast<int>(parts.size()); }
};

struct GradationCheck {
    std::optional<MagmaGradation> gradation;
    std::string error;
    int witness_j = -1, witness_k = -1;
    Vec escaping;  // bracket vector outside the stated target part

    bool ok() const { return gradation.has_value(); }
};

/// Direct-sum and containment verification; a user table entry for a pair
/// whose bracket vanishes is projected to the no-target convention.
GradationCheck verify_gradation(const LieAlgebra& g, const std::vector<Subspace>& parts,
                                const std::vector<std::vector<int>>& delta_table,
                                std::vector<std::string> part_names = {});

/// Subspace-vertex graph: one vertex per part; self-edges are allowed because
/// a part can bracket nontrivially with itself.
LieGraph build_graded_graph(const MagmaGradation& mg);

struct GradedSeriesResult {
    GraphSeries series;
    std::vector<Subspace> stage_spans;   // direct sums of surviving parts
    std::optional<int> first_mismatch;   // stage where the span disagrees with the oracle
};
GradedSeriesResult graded_derived_series(const LieAlgebra& g, const MagmaGradation& mg);
GradedSeriesResult graded_lcs(const LieAlgebra& g, const MagmaGradation& mg);

enum class FinestKnown { yes_minimal, unknown };
FinestKnown is_finest_known(const MagmaGradation& mg, const LieAlgebra& g);

/// Singleton-part gradation of a minimal admissible basis.
MagmaGradation gradation_from_minimal_basis(const LieAlgebra& g, const AdmissibleBasis& b);

}  // namespace liegraph
