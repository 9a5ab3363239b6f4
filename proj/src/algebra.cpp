#include "liegraph/algebra.hpp"

#include <stdexcept>

namespace liegraph {

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> names, int field_d)
    : n_(dim), d_(field_d), names_(std::move(names)), zero_(dim) {
    if (n_ <= 0) throw std::invalid_argument("dimension must be positive");
    if (names_.empty())
        for (int i = 0; i < n_; ++i) names_.push_back("x" + std::to_string(i + 1));
    if (static_cast<int>(names_.size()) != n_)
        throw std::invalid_argument("name count mismatch");
    c_.assign(n_, {});
    for (int j = 0; j < n_; ++j) c_[j].assign(n_, Vec(n_));
}

void LieAlgebra::set_bracket(int j, int k, Vec v) {
    if (j == k) throw std::invalid_argument("bracket of an element with itself is zero");
    if (j < 0 || k < 0 || j >= n_ || k >= n_ || static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("bracket index/dimension out of range");
    if (j > k) {
        std::swap(j, k);
        for (auto& s : v) s = -s;
    }
    Vec neg(n_);
    for (int i = 0; i < n_; ++i) neg[i] = -v[i];
    c_[j][k] = std::move(v);
    c_[k][j] = std::move(neg);
}

const Vec& LieAlgebra::bracket_basis(int j, int k) const {
    if (j == k) return zero_;
    return c_[j][k];
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
        throw std::invalid_argument("bracket dimension mismatch");
    Vec out(n_);
    for (int j = 0; j < n_; ++j) {
        if (x[j].is_zero()) continue;
        for (int k = 0; k < n_; ++k) {
            if (y[k].is_zero() || j == k) continue;
            Scalar f = x[j] * y[k];
            const Vec& c = bracket_basis(j, k);
            for (int l = 0; l < n_; ++l)
                if (!c[l].is_zero()) out[l] += f * c[l];
        }
    }
    return out;
}

Vec LieAlgebra::basis_vec(int i) const {
    Vec v(n_);
    v[i] = Scalar(1);
    return v;
}

Mat LieAlgebra::ad(const Vec& x) const {
    Mat m(n_, n_);
    for (int j = 0; j < n_; ++j) {
        Vec img = bracket(x, basis_vec(j));
        for (int l = 0; l < n_; ++l) m.at(l, j) = img[l];
    }
    return m;
}

LieAlgebra::LieReport LieAlgebra::verify_lie() const {
    LieReport rep;
    for (int j = 0; j < n_; ++j)
        for (int k = j + 1; k < n_; ++k)
            for (int l = k + 1; l < n_; ++l) {
                Vec r = bracket(basis_vec(j), bracket_basis(k, l));
                r = r + bracket(basis_vec(k), bracket_basis(l, j));
                r = r + bracket(basis_vec(l), bracket_basis(j, k));
                if (!is_zero(r)) {
                    rep.ok = false;
                    rep.violations.push_back({j, k, l, std::move(r)});
                }
            }
    return rep;
}

LieAlgebra LieAlgebra::change_basis(const std::vector<Vec>& new_basis,
                                    std::vector<std::string> new_names) const {
    if (static_cast<int>(new_basis.size()) != n_)
        throw std::invalid_argument("change_basis needs exactly dim vectors");
    Subspace sp = Subspace::span(n_, new_basis);
    if (sp.dim() != n_) throw std::invalid_argument("new basis is dependent or deficient");
    // solve B^T y = v for coordinates in the new basis
    Mat bt(n_, n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) bt.at(r, c) = new_basis[c][r];
    auto coords = [&](const Vec& v) {
        Mat aug = bt;
        Mat m(n_, n_ + 1);
        for (int r = 0; r < n_; ++r) {
            for (int c = 0; c < n_; ++c) m.at(r, c) = aug.at(r, c);
            m.at(r, n_) = v[r];
        }
        auto [rr, rank] = rref(m);
        Vec y(n_);
        for (int row = 0; row < rank; ++row) {
            int c = 0;
            while (c <= n_ && rr.at(row, c).is_zero()) ++c;
            if (c == n_) throw std::invalid_argument("inconsistent coordinate solve");
            y[c] = rr.at(row, n_);
        }
        return y;
    };
    LieAlgebra out(n_, std::move(new_names), d_);
    for (int j = 0; j < n_; ++j)
        for (int k = j + 1; k < n_; ++k)
            out.set_bracket(j, k, coords(bracket(new_basis[j], new_basis[k])));
    return out;
}

LieAlgebra LieAlgebra::restrict_to(const Subspace& sub) const {
    int m = sub.dim();
    if (m == 0) throw std::invalid_argument("cannot restrict to the zero subspace");
    std::vector<Vec> rows;
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) {
        rows.push_back(sub.basis().row(i));
        names.push_back("u" + std::to_string(i + 1));
    }
    LieAlgebra out(m, std::move(names), d_);
    for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
            Vec br = bracket(rows[j], rows[k]);
            auto co = sub.coordinates(br);
            if (!co) throw std::invalid_argument("subspace is not closed under the bracket");
            out.set_bracket(j, k, *co);
        }
    return out;
}

Subspace subspace_bracket(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
    std::vector<Vec> gens;
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < v.dim(); ++j) gens.push_back(g.bracket(u.basis().row(i), v.basis().row(j)));
    return Subspace::span(g.dim(), gens);
}

static SeriesOracle run_series(const LieAlgebra& g, bool lower_central) {
    SeriesOracle s;
    Subspace cur = Subspace::full(g.dim());
    s.stages.push_back(cur);
    const Subspace whole = cur;
    while (true) {
        Subspace next = lower_central ? subspace_bracket(g, whole, cur) : subspace_bracket(g, cur, cur);
        if (next == cur) {
            s.stable_from = static_cast<int>(s.stages.size()) - 1;
            break;
        }
        s.stages.push_back(next);
        if (next.is_zero()) {
            s.terminated = true;
            s.stable_from = static_cast<int>(s.stages.size()) - 1;
            break;
        }
        cur = next;
    }
    return s;
}

SeriesOracle derived_series_oracle(const LieAlgebra& g) { return run_series(g, false); }
SeriesOracle lower_central_series_oracle(const LieAlgebra& g) { return run_series(g, true); }
bool is_solvable_oracle(const LieAlgebra& g) { return derived_series_oracle(g).terminated; }
bool is_nilpotent_oracle(const LieAlgebra& g) { return lower_central_series_oracle(g).terminated; }

Subspace center_oracle(const LieAlgebra& g) {
    int n = g.dim();
    // x central <=> sum_j x_j [e_j, e_k] = 0 for all k
    Mat m(n * n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (int j = 0; j < n; ++j) m.at(k * n + l, j) = g.bracket_basis(j, k)[l];
    return Subspace::span(n, kernel(m));
}

Mat killing_form(const LieAlgebra& g) {
    int n = g.dim();
    std::vector<Mat> ads;
    for (int i = 0; i < n; ++i) ads.push_back(g.ad(g.basis_vec(i)));
    Mat b(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            Scalar t = (ads[j] * ads[k]).trace();
            b.at(j, k) = t;
            b.at(k, j) = t;
        }
    return b;
}

bool is_semisimple_cartan(const LieAlgebra& g) {
    auto [r, rank] = rref(killing_form(g));
    (void)r;
    return rank == g.dim();
}

bool is_ideal(const LieAlgebra& g, const Subspace& u) {
    Subspace br = subspace_bracket(g, Subspace::full(g.dim()), u);
    return u.contains(br);
}

Subspace radical_oracle(const LieAlgebra& g) {
    int n = g.dim();
    Mat b = killing_form(g);
    Subspace d1 = subspace_bracket(g, Subspace::full(n), Subspace::full(n));
    // rad = {x : B(x, y) = 0 for all y in the derived algebra}
    Mat m(d1.dim(), n);
    for (int i = 0; i < d1.dim(); ++i) {
        Vec by = b.apply(d1.basis().row(i));
        for (int j = 0; j < n; ++j) m.at(i, j) = by[j];
    }
    Subspace rad = d1.dim() == 0 ? Subspace::full(n) : Subspace::span(n, kernel(m));
    if (!is_ideal(g, rad)) throw std::logic_error("radical candidate is not an ideal");
    if (!rad.is_zero() && !is_solvable_oracle(g.restrict_to(rad)))
        throw std::logic_error("radical candidate is not solvable");
    return rad;
}

Subspace normalizer(const LieAlgebra& g, const Subspace& u) {
    int n = g.dim();
    if (u.dim() == 0) return Subspace::full(n);
    // x in normalizer <=> [x, u_i] reduces to zero modulo u, for each basis u_i
    std::vector<Vec> rows;
    for (int i = 0; i < u.dim(); ++i) {
        std::vector<Vec> cols;  // cols[j] = reduce([e_j, u_i])
        for (int j = 0; j < n; ++j) cols.push_back(u.reduce(g.bracket(g.basis_vec(j), u.basis().row(i))));
        for (int l = 0; l < n; ++l) {
            Vec row(n);
            bool nonzero = false;
            for (int j = 0; j < n; ++j) {
                row[j] = cols[j][l];
                nonzero = nonzero || !row[j].is_zero();
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return Subspace::full(n);
    return Subspace::span(n, kernel(Mat(rows)));
}

bool is_abelian_oracle(const LieAlgebra& g) {
    Subspace d1 = subspace_bracket(g, Subspace::full(g.dim()), Subspace::full(g.dim()));
    return d1.is_zero();
}

bool is_reductive_oracle(const LieAlgebra& g) {
    int n = g.dim();
    Subspace d1 = subspace_bracket(g, Subspace::full(n), Subspace::full(n));
    Subspace z = center_oracle(g);
    if (d1.dim() + z.dim() != n) return false;
    if (sum(d1, z).dim() != n) return false;
    if (d1.dim() == 0) return true;  // abelian
    return is_semisimple_cartan(g.restrict_to(d1));
}

}  // namespace liegraph
