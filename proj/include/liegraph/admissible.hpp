#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegraph/algebra.hpp"

namespace liegraph {

constexpr int kNoTarget = -1;

/// Spanning set whose pairwise brackets are zero or proportional to a member:
/// [x_j, x_k] = alpha[j][k] * x_{delta[j][k]}, with delta[j][k] == kNoTarget
/// exactly when the bracket vanishes.
struct AdmissibleBasis {
    std::vector<Vec> elements;  // coordinates in the algebra's reference basis
    std::vector<std::string> names;
    Mat alpha;                        // antisymmetric proportionality constants
    std::vector<std::vector<int>> delta;  // symmetric target indices
    bool minimal = false;

    int size() const { return static_cast<int>(elements.size()); }
};

enum class AdmissibleError {
    none,
    zero_element,
    proportional_duplicates,
    not_spanning,
    not_closed,  // some bracket is neither zero nor proportional to a member
};

struct AdmissibleCheck {
    std::optional<AdmissibleBasis> basis;
    AdmissibleError error = AdmissibleError::none;
    int witness_j = -1, witness_k = -1;  // offending pair for the failure cases
    Vec witness_bracket;

    bool ok() const { return basis.has_value(); }
};

std::string to_string(AdmissibleError e);

/// Decides whether the given spanning set satisfies the proportionality
/// relations and packages alpha/delta on success.
AdmissibleCheck check_admissible(const LieAlgebra& g, const std::vector<Vec>& elements,
                                 std::vector<std::string> names = {});

/// For a nilpotent algebra: iteratively adjoins non-proportional bracket
/// results to the reference basis until the set is closed.  Throws if the
/// algebra is not nilpotent.
AdmissibleBasis nilpotent_closure_basis(const LieAlgebra& g);

/// Best-effort search for an admissible basis: reference basis, nilpotent
/// closure, then eigenvector replacements per ad-map with eigenvalues in
/// Q(sqrt(d)).  A nullopt result is not a proof of non-admissibility.
std::optional<AdmissibleBasis> eigen_basis_search(const LieAlgebra& g, int budget = 2000);

/// Exact characteristic polynomial, lowest degree first (coeffs[0] = det sign
/// term, coeffs[n] = 1).
std::vector<Scalar> char_poly(const Mat& m);

/// Roots of the polynomial that lie in Q(sqrt(d)); best-effort (rational root
/// enumeration plus exact quadratic formula after deflation).
std::vector<Scalar> field_roots(const std::vector<Scalar>& coeffs, int d, int budget);

std::string pretty_combination(const Vec& v, const std::vector<std::string>& names);

}  // namespace liegraph
