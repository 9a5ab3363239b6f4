#include "liegraph/linalg.hpp"

#include <stdexcept>

namespace liegraph {

bool is_zero(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

static void check_len(const Vec& l, const Vec& r) {
    if (l.size() != r.size()) throw std::invalid_argument("vector length mismatch");
}

Vec operator+(const Vec& l, const Vec& r) {
    check_len(l, r);
    Vec out(l);
    for (size_t i = 0; i < r.size(); ++i) out[i] += r[i];
    return out;
}

Vec operator-(const Vec& l, const Vec& r) {
    check_len(l, r);
    Vec out(l);
    for (size_t i = 0; i < r.size(); ++i) out[i] -= r[i];
    return out;
}

Vec operator*(const Scalar& c, const Vec& v) {
    Vec out(v);
    for (auto& s : out) s *= c;
    return out;
}

bool operator==(const Vec& l, const Vec& r) {
    if (l.size() != r.size()) return false;
    for (size_t i = 0; i < l.size(); ++i)
        if (l[i] != r[i]) return false;
    return true;
}

Mat::Mat(std::vector<Vec> rows) : rows_(std::move(rows)) {
    cols_ = rows_.empty() ? 0 : static_cast<int>(rows_[0].size());
    for (const auto& r : rows_)
        if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix");
}

void Mat::push_row(Vec v) {
    if (rows_.empty())
        cols_ = static_cast<int>(v.size());
    else if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("row length mismatch");
    rows_.push_back(std::move(v));
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows());
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Mat out(rows(), o.cols());
    for (int i = 0; i < rows(); ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols(); ++j) out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

Vec Mat::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply shape mismatch");
    Vec out(rows());
    for (int i = 0; i < rows(); ++i) {
        Scalar s;
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) s += at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

Scalar Mat::trace() const {
    Scalar s;
    for (int i = 0; i < rows() && i < cols_; ++i) s += at(i, i);
    return s;
}

std::pair<Mat, int> rref(const Mat& m) {
    Mat a = m;
    int rank = 0;
    for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
        int piv = -1;
        for (int r = rank; r < a.rows(); ++r)
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(rank, c));
        Scalar inv = a.at(rank, col).inverse();
        for (int c = 0; c < a.cols(); ++c) a.at(rank, c) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == rank || a.at(r, col).is_zero()) continue;
            Scalar f = a.at(r, col);
            for (int c = 0; c < a.cols(); ++c) a.at(r, c) -= f * a.at(rank, c);
        }
        ++rank;
    }
    return {a, rank};
}

std::vector<Vec> kernel(const Mat& m) {
    auto [r, rank] = rref(m);
    int n = m.cols();
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (int row = 0; row < rank; ++row) {
        int c = 0;
        while (c < n && r.at(row, c).is_zero()) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<Vec> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n);
        v[free] = Scalar(1);
        for (int row = 0; row < rank; ++row) v[pivot_col[row]] = -r.at(row, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Scalar> proportional(const Vec& u, const Vec& v) {
    check_len(u, v);
    std::optional<Scalar> k;
    for (size_t i = 0; i < u.size(); ++i) {
        if (v[i].is_zero()) {
            if (!u[i].is_zero()) return std::nullopt;
            continue;
        }
        Scalar q = u[i] / v[i];
        if (!k)
            k = q;
        else if (*k != q)
            return std::nullopt;
    }
    if (!k) return Scalar(1);  // both zero
    if (k->is_zero()) return std::nullopt;
    return k;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& gens) {
    Subspace s(ambient);
    s.basis_ = Mat(0, ambient);
    if (gens.empty()) return s;
    Mat m(gens);
    if (m.cols() != ambient) throw std::invalid_argument("generator dimension mismatch");
    auto [r, rank] = rref(m);
    for (int row = 0; row < rank; ++row) {
        s.basis_.push_row(r.row(row));
        int c = 0;
        while (c < ambient && r.at(row, c).is_zero()) ++c;
        s.pivots_.push_back(c);
    }
    if (rank == 0) s.basis_ = Mat(0, ambient);
    return s;
}

Subspace Subspace::full(int ambient) {
    std::vector<Vec> rows;
    for (int i = 0; i < ambient; ++i) {
        Vec v(ambient);
        v[i] = Scalar(1);
        rows.push_back(std::move(v));
    }
    return span(ambient, rows);
}

Vec Subspace::reduce(const Vec& v) const {
    Vec w = v;
    for (int row = 0; row < dim(); ++row) {
        const Scalar& c = w[pivots_[row]];
        if (c.is_zero()) continue;
        Scalar f = c;
        for (int j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(row, j);
    }
    return w;
}

bool Subspace::contains(const Vec& v) const { return liegraph::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (int r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec coords(dim());
    for (int row = 0; row < dim(); ++row) coords[row] = v[pivots_[row]];
    return coords;
}

Subspace sum(const Subspace& l, const Subspace& r) {
    if (l.ambient_ != r.ambient_) throw std::invalid_argument("ambient mismatch");
    std::vector<Vec> gens;
    for (int i = 0; i < l.dim(); ++i) gens.push_back(l.basis_.row(i));
    for (int i = 0; i < r.dim(); ++i) gens.push_back(r.basis_.row(i));
    return Subspace::span(l.ambient_, gens);
}

Subspace intersection(const Subspace& l, const Subspace& r) {
    if (l.ambient_ != r.ambient_) throw std::invalid_argument("ambient mismatch");
    // x = a*L = b*R  <=>  (L^T | -R^T) (a;b) = 0
    int ra = l.dim(), rb = r.dim();
    Mat m(l.ambient_, ra + rb);
    for (int row = 0; row < l.ambient_; ++row) {
        for (int i = 0; i < ra; ++i) m.at(row, i) = l.basis_.at(i, row);
        for (int j = 0; j < rb; ++j) m.at(row, ra + j) = -r.basis_.at(j, row);
    }
    std::vector<Vec> gens;
    for (const auto& nv : kernel(m)) {
        Vec x(l.ambient_);
        for (int i = 0; i < ra; ++i)
            if (!nv[i].is_zero()) x = x + nv[i] * l.basis_.row(i);
        gens.push_back(std::move(x));
    }
    return Subspace::span(l.ambient_, gens);
}

bool in_span(const Vec& v, const std::vector<Vec>& basis) {
    if (basis.empty()) return is_zero(v);
    return Subspace::span(static_cast<int>(v.size()), basis).contains(v);
}

}  // namespace liegraph
