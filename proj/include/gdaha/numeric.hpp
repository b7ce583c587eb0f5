#pragma once

#include "gdaha/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace gdaha {

using Complex = std::complex<double>;
using CMatrix = Matrix<Complex>;

inline double max_abs(const CMatrix& m) {
    double mx = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) mx = std::max(mx, std::abs(m(i, j)));
    return mx;
}

/// Gauss-Jordan inverse with partial pivoting.
inline CMatrix invert(CMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("invert: matrix must be square");
    const int d = a.rows();
    CMatrix inv = CMatrix::identity(d);
    for (int col = 0; col < d; ++col) {
        int pivot = col;
        for (int r = col + 1; r < d; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) < 1e-14)
            throw std::runtime_error("invert: matrix is numerically singular");
        if (pivot != col)
            for (int j = 0; j < d; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const Complex scale = Complex(1.0) / a(col, col);
        for (int j = 0; j < d; ++j) {
            a(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (int r = 0; r < d; ++r) {
            if (r == col) continue;
            const Complex f = a(r, col);
            if (std::abs(f) == 0.0) continue;
            for (int j = 0; j < d; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

inline Complex trace(const CMatrix& m) {
    Complex t = 0.0;
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

/// Characteristic polynomial via the Faddeev-LeVerrier recurrence.
/// Returns monic coefficients c[0..d] with p(x) = sum c[k] x^k, c[d] = 1.
inline std::vector<Complex> char_poly(const CMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: matrix must be square");
    const int d = a.rows();
    std::vector<Complex> c(d + 1, Complex(0.0));
    c[d] = 1.0;
    CMatrix m = a;
    for (int k = 1; k <= d; ++k) {
        if (k > 1) {
            CMatrix shifted = m;
            for (int i = 0; i < d; ++i) shifted(i, i) += c[d - k + 1];
            m = a * shifted;
        }
        c[d - k] = -trace(m) / Complex(static_cast<double>(k));
    }
    return c;
}

inline Complex eval_poly(const std::vector<Complex>& coeffs, Complex x) {
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// All roots of a monic polynomial by Durand-Kerner iteration.
inline std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
    const int d = static_cast<int>(coeffs.size()) - 1;
    if (d <= 0) return {};
    double radius = 0.0;
    for (int k = 0; k < d; ++k) radius = std::max(radius, std::abs(coeffs[k]));
    radius = 1.0 + radius;

    std::vector<Complex> r(d);
    const Complex seed(0.4, 0.9);
    Complex p = 1.0;
    for (int j = 0; j < d; ++j) {
        p *= seed;
        r[j] = p * radius;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        double moved = 0.0;
        for (int j = 0; j < d; ++j) {
            Complex denom = 1.0;
            for (int k = 0; k < d; ++k)
                if (k != j) denom *= (r[j] - r[k]);
            if (std::abs(denom) < 1e-300) denom = Complex(1e-300, 0.0);
            const Complex delta = eval_poly(coeffs, r[j]) / denom;
            r[j] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-13) break;
    }
    return r;
}

/// Greedy matching of two root multisets; returns the largest matched distance.
inline double match_roots(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) throw std::invalid_argument("match_roots: size mismatch");
    double worst = 0.0;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        int best = -1;
        double best_dist = 0.0;
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double dist = std::abs(x - b[j]);
            if (best < 0 || dist < best_dist) {
                best = static_cast<int>(j);
                best_dist = dist;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_dist);
    }
    return worst;
}

}  // namespace gdaha
