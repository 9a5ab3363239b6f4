#pragma once

#include <map>
#include <string>
#include <vector>

#include "liegraph/linalg.hpp"

namespace liegraph {

/// Finite-dimensional Lie algebra given by exact structure constants over
/// Q(sqrt(d)).  Brackets of basis pairs are stored for j < k; antisymmetry
/// supplies the rest.
class LieAlgebra {
  public:
    LieAlgebra(int dim, std::vector<std::string> names, int field_d);

    int dim() const { return n_; }
    int field_d() const { return d_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }

    /// Sets [x_j, x_k] = v (j != k); the mirrored pair is implied.
    void set_bracket(int j, int k, Vec v);
    const Vec& bracket_basis(int j, int k) const;  // handles antisymmetry

    Vec bracket(const Vec& x, const Vec& y) const;
    Vec zero() const { return Vec(n_); }
    Vec basis_vec(int i) const;

    /// Matrix of ad_x acting on coordinates (columns are images of basis).
    Mat ad(const Vec& x) const;

    struct JacobiViolation {
        int j, k, l;
        Vec residual;
    };
    struct LieReport {
        bool ok = true;
        std::vector<JacobiViolation> violations;
    };
    /// Checks the Jacobi identity on all ordered basis triples.
    LieReport verify_lie() const;

    /// Structure constants recomputed exactly in a new basis (must be exactly
    /// dim independent vectors; throws otherwise).
    LieAlgebra change_basis(const std::vector<Vec>& new_basis,
                            std::vector<std::string> new_names = {}) const;

    /// Subalgebra on the rref basis rows of a bracket-closed subspace.
    LieAlgebra restrict_to(const Subspace& sub) const;

  private:
    int n_;
    int d_;
    std::vector<std::string> names_;
    std::vector<std::vector<Vec>> c_;  // c_[j][k] for j < k
    Vec zero_;
    mutable Vec neg_buf_;
};

// ---- oracle operations (independent of the graph pipeline) ----

Subspace subspace_bracket(const LieAlgebra& g, const Subspace& u, const Subspace& v);

struct SeriesOracle {
    std::vector<Subspace> stages;  // stage 0 = full algebra
    bool terminated = false;       // last stage is {0}
    int stable_from = -1;          // index where the series stopped changing
};

SeriesOracle derived_series_oracle(const LieAlgebra& g);
SeriesOracle lower_central_series_oracle(const LieAlgebra& g);
bool is_solvable_oracle(const LieAlgebra& g);
bool is_nilpotent_oracle(const LieAlgebra& g);

Subspace center_oracle(const LieAlgebra& g);

Mat killing_form(const LieAlgebra& g);
bool is_semisimple_cartan(const LieAlgebra& g);

/// Largest solvable ideal, via Killing-orthogonality to the derived algebra;
/// the result is re-verified as a solvable ideal.
Subspace radical_oracle(const LieAlgebra& g);

bool is_ideal(const LieAlgebra& g, const Subspace& u);
Subspace normalizer(const LieAlgebra& g, const Subspace& u);
bool is_abelian_oracle(const LieAlgebra& g);
bool is_reductive_oracle(const LieAlgebra& g);

}  // namespace liegraph
