#pragma once

#include "gdaha/scalar_field.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace gdaha {

/// Dense matrix over an exact field type (Scalar, Rational) or complex<double>.
/// Products skip zero entries, which keeps the cost near the sparse one for
/// the structured operators built in this library.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, T(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

    bool is_zero_matrix() const {
        for (const T& x : a_)
            if (!is_zero(x)) return false;
        return true;
    }

    Matrix operator-() const {
        Matrix r(*this);
        for (T& x : r.a_) x = -x;
        return r;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        require_same_shape(a, b);
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        require_same_shape(a, b);
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (is_zero(bkj)) continue;
                    c(i, j) += aik * bkj;
                }
            }
        }
        return c;
    }
    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix r(m);
        for (T& x : r.a_) x = s * x;
        return r;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("Matrix: apply shape mismatch");
        std::vector<T> y(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!is_zero((*this)(i, j)) && !is_zero(x[j])) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ia = 0; ia < a.rows(); ++ia)
        for (int ja = 0; ja < a.cols(); ++ja) {
            if (is_zero(a(ia, ja))) continue;
            for (int ib = 0; ib < b.rows(); ++ib)
                for (int jb = 0; jb < b.cols(); ++jb) {
                    if (is_zero(b(ib, jb))) continue;
                    c(ia * b.rows() + ib, ja * b.cols() + jb) = a(ia, ja) * b(ib, jb);
                }
        }
    return c;
}

/// Reduced row echelon form in place (exact arithmetic). Returns pivot columns.
template <class T>
std::vector<int> rref_rows(std::vector<std::vector<T>>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int ncols = static_cast<int>(rows[0].size());
    int r = 0;
    for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (!is_zero(rows[i][c])) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        const T inv = T(1) / rows[r][c];
        for (int j = c; j < ncols; ++j)
            if (!is_zero(rows[r][j])) rows[r][j] = inv * rows[r][j];
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || is_zero(rows[i][c])) continue;
            const T f = rows[i][c];
            for (int j = c; j < ncols; ++j)
                if (!is_zero(rows[r][j])) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

/// Subspace of a coordinate space, stored as the unique reduced-echelon basis
/// (basis vectors are the rows; pivot columns strictly increase, pivot entries
/// are 1 and are the only nonzero entries in their columns).
template <class T>
struct Subspace {
    int ambient = 0;
    std::vector<std::vector<T>> basis;
    std::vector<int> pivots;

    int dim() const { return static_cast<int>(basis.size()); }
};

template <class T>
Subspace<T> span_of(int ambient, std::vector<std::vector<T>> vectors) {
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != ambient)
            throw std::invalid_argument("span_of: vector length mismatch");
    Subspace<T> s;
    s.ambient = ambient;
    s.pivots = rref_rows(vectors);
    s.basis = std::move(vectors);
    return s;
}

template <class T>
Subspace<T> full_space(int ambient) {
    std::vector<std::vector<T>> rows(ambient, std::vector<T>(ambient, T(0)));
    for (int i = 0; i < ambient; ++i) rows[i][i] = T(1);
    Subspace<T> s;
    s.ambient = ambient;
    s.basis = std::move(rows);
    for (int i = 0; i < ambient; ++i) s.pivots.push_back(i);
    return s;
}

/// Null space of m as a canonical subspace of the column coordinate space.
template <class T>
Subspace<T> kernel(const Matrix<T>& m) {
    std::vector<std::vector<T>> rows(m.rows(), std::vector<T>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    const std::vector<int> piv = rref_rows(rows);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::vector<T>> null_rows;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[f] = T(1);
        for (std::size_t j = 0; j < piv.size(); ++j) v[piv[j]] = -rows[j][f];
        null_rows.push_back(std::move(v));
    }
    return span_of(m.cols(), std::move(null_rows));
}

template <class T>
int rank(const Matrix<T>& m) {
    std::vector<std::vector<T>> rows(m.rows(), std::vector<T>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return static_cast<int>(rref_rows(rows).size());
}

/// Coefficients of v in the echelon basis, or nullopt when v lies outside.
template <class T>
std::optional<std::vector<T>> coordinates_in(const Subspace<T>& s, const std::vector<T>& v) {
    if (static_cast<int>(v.size()) != s.ambient)
        throw std::invalid_argument("coordinates_in: length mismatch");
    std::vector<T> x(s.basis.size(), T(0));
    for (std::size_t j = 0; j < s.basis.size(); ++j) x[j] = v[s.pivots[j]];
    std::vector<T> rec(s.ambient, T(0));
    for (std::size_t j = 0; j < s.basis.size(); ++j) {
        if (is_zero(x[j])) continue;
        for (int c = 0; c < s.ambient; ++c)
            if (!is_zero(s.basis[j][c])) rec[c] += x[j] * s.basis[j][c];
    }
    for (int c = 0; c < s.ambient; ++c)
        if (!(rec[c] == v[c])) return std::nullopt;
    return x;
}

template <class T>
bool contains(const Subspace<T>& s, const std::vector<T>& v) {
    return coordinates_in(s, v).has_value();
}

/// Columns are the basis vectors.
template <class T>
Matrix<T> basis_matrix(const Subspace<T>& s) {
    Matrix<T> b(s.ambient, s.dim());
    for (int j = 0; j < s.dim(); ++j)
        for (int i = 0; i < s.ambient; ++i) b(i, j) = s.basis[j][i];
    return b;
}

/// Matrix of op on the subspace basis. Aborts (throws) when op does not map
/// the subspace into itself; callers rely on this as an integrity check.
template <class T>
Matrix<T> restrict_operator(const Matrix<T>& op, const Subspace<T>& s) {
    Matrix<T> r(s.dim(), s.dim());
    for (int j = 0; j < s.dim(); ++j) {
        const std::vector<T> img = op.apply(s.basis[j]);
        const auto x = coordinates_in(s, img);
        if (!x) throw std::runtime_error("restrict_operator: operator does not preserve the subspace");
        for (int i = 0; i < s.dim(); ++i) r(i, j) = (*x)[i];
    }
    return r;
}

/// Vectors v in s with m v = 0, as a canonical subspace of the ambient space.
template <class T>
Subspace<T> intersect_with_kernel(const Subspace<T>& s, const Matrix<T>& m) {
    if (m.cols() != s.ambient) throw std::invalid_argument("intersect_with_kernel: shape mismatch");
    // Solve for coefficient vectors x with m (sum_j x_j b_j) = 0.
    Matrix<T> mb(m.rows(), s.dim());
    for (int j = 0; j < s.dim(); ++j) {
        const std::vector<T> img = m.apply(s.basis[j]);
        for (int i = 0; i < m.rows(); ++i) mb(i, j) = img[i];
    }
    const Subspace<T> coeff = kernel(mb);
    std::vector<std::vector<T>> vecs;
    for (const auto& x : coeff.basis) {
        std::vector<T> v(s.ambient, T(0));
        for (int j = 0; j < s.dim(); ++j) {
            if (is_zero(x[j])) continue;
            for (int c = 0; c < s.ambient; ++c)
                if (!is_zero(s.basis[j][c])) v[c] += x[j] * s.basis[j][c];
        }
        vecs.push_back(std::move(v));
    }
    return span_of(s.ambient, std::move(vecs));
}

}  // namespace gdaha
