#pragma once

#include "liegraph/graded.hpp"

namespace liegraph {

/// Regression expectations; unset optionals mean "not pinned for this entry".
struct Expected {
    std::optional<bool> abelian, solvable, nilpotent, semisimple, simple_candidate, reductive;
    std::optional<int> nilpotency_index, center_dim, radical_dim, components;
    std::vector<int> derived_dims;  // oracle dimensions until the fixpoint
    std::vector<int> lcs_dims;
    std::optional<int> graph_edges;
};

struct CatalogEntry {
    std::string name;
    std::string description;
    LieAlgebra algebra{1, {}, 0};
    std::optional<AdmissibleBasis> basis;      // canonical admissible spanning set
    std::optional<MagmaGradation> gradation;   // for entries carried by a gradation
    Expected expected;
};

std::vector<std::string> catalog_names();
CatalogEntry catalog_get(const std::string& name);

/// Parametric families.
LieAlgebra l3_alpha(const Rat& alpha);
LieAlgebra nq_algebra(const Rat& q);

/// Bracket tables that violate the Jacobi identity, used to exercise the
/// validators (not listed in the catalog).
LieAlgebra type_viii_table();
LieAlgebra improper_scan_table();

}  // namespace liegraph
