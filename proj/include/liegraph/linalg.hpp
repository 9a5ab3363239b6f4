#pragma once

#include <optional>
#include <vector>

#include "liegraph/scalar.hpp"

namespace liegraph {

using Vec = std::vector<Scalar>;

bool is_zero(const Vec& v);
Vec operator+(const Vec& l, const Vec& r);
Vec operator-(const Vec& l, const Vec& r);
Vec operator*(const Scalar& c, const Vec& v);
bool operator==(const Vec& l, const Vec& r);

/// Dense exact matrix; rows of equal length.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : cols_(cols), rows_(rows, Vec(cols)) {}
    explicit Mat(std::vector<Vec> rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return rows_[r][c]; }
    const Scalar& at(int r, int c) const { return rows_[r][c]; }
    const Vec& row(int r) const { return rows_[r]; }
    const std::vector<Vec>& row_data() const { return rows_; }
    void push_row(Vec v);

    static Mat identity(int n);
    Mat transposed() const;
    Mat operator*(const Mat& o) const;
    Vec apply(const Vec& v) const;  // matrix * column vector
    Scalar trace() const;

    friend bool operator==(const Mat& l, const Mat& r) {
        return l.cols_ == r.cols_ && l.rows_ == r.rows_;
    }

  private:
    int cols_ = 0;
    std::vector<Vec> rows_;
};

/// Reduced row-echelon form with deterministic pivoting (leftmost column,
/// topmost remaining row).  Returns the form and its rank.
std::pair<Mat, int> rref(const Mat& m);

/// Exact basis of the null space {v : m v = 0}; empty iff full column rank.
std::vector<Vec> kernel(const Mat& m);

/// If u = k*v with k != 0 returns k; the zero vector is proportional only to
/// itself (returns 1).  Throws on length mismatch.
std::optional<Scalar> proportional(const Vec& u, const Vec& v);

/// Linear subspace in canonical form: row-reduced independent basis rows.
class Subspace {
  public:
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}
    static Subspace span(int ambient, const std::vector<Vec>& gens);
    static Subspace full(int ambient);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    bool is_zero() const { return dim() == 0; }
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Coordinates of v in the rref basis rows, if v lies in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const;

    /// v minus its projection onto this subspace, i.e. v reduced by the rref
    /// rows; the result vanishes on all pivot columns.
    Vec reduce(const Vec& v) const;
    const std::vector<int>& pivots() const { return pivots_; }

    friend Subspace sum(const Subspace& l, const Subspace& r);
    friend Subspace intersection(const Subspace& l, const Subspace& r);
    friend bool operator==(const Subspace& l, const Subspace& r) {
        return l.ambient_ == r.ambient_ && l.basis_ == r.basis_;
    }

  private:
    int ambient_;
    Mat basis_;
    std::vector<int> pivots_;
};

bool in_span(const Vec& v, const std::vector<Vec>& basis);

}  // namespace liegraph
