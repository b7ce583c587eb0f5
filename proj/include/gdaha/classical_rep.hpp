#pragma once

#include "gdaha/linalg.hpp"
#include "gdaha/quantum_rep.hpp"
#include "gdaha/weights.hpp"

#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdaha {

/// Matrix units of gl_N acting diagonally (Leibniz rule) on (C^N)^{tensor d},
/// over the rationals. Only the simple raising/lowering operators are stored;
/// Cartan data lives in basis_weight.
struct ClassicalAmbient {
    int N = 0;
    int d = 0;
    std::vector<Matrix<Rational>> raising;   // e_{i,i+1} for i = 1..N-1
    std::vector<Matrix<Rational>> lowering;  // e_{i+1,i}
    std::vector<std::vector<int>> letters;   // 0-based letters per basis index
    std::vector<Weight> basis_weight;

    int dim() const {
        int t = 1;
        for (int k = 0; k < d; ++k) t *= N;
        return t;
    }
};

inline ClassicalAmbient classical_tensor_power(int N, int d) {
    if (N < 2) throw std::invalid_argument("classical_tensor_power: need N >= 2");
    if (d < 0) throw std::invalid_argument("classical_tensor_power: need d >= 0");
    ClassicalAmbient a{N, d, {}, {}, {}, {}};
    const int dim = a.dim();

    a.letters.assign(dim, std::vector<int>(d, 0));
    a.basis_weight.assign(dim, Weight(N, 0));
    for (int idx = 0; idx < dim; ++idx) {
        int rest = idx;
        for (int p = d - 1; p >= 0; --p) {
            a.letters[idx][p] = rest % N;
            rest /= N;
        }
        for (int p = 0; p < d; ++p) a.basis_weight[idx][a.letters[idx][p]] += 1;
    }

    int stride = 1;  // stride of position p in the index: N^{d-1-p}
    std::vector<int> strides(d, 1);
    for (int p = d - 1; p >= 0; --p) {
        strides[p] = stride;
        stride *= N;
    }
    for (int i = 1; i <= N - 1; ++i) {
        Matrix<Rational> up(dim, dim), down(dim, dim);
        for (int idx = 0; idx < dim; ++idx)
            for (int p = 0; p < d; ++p) {
                const int letter = a.letters[idx][p];
                if (letter == i) up(idx - strides[p], idx) += Rational(1);
                if (letter == i - 1) down(idx + strides[p], idx) += Rational(1);
            }
        a.raising.push_back(std::move(up));
        a.lowering.push_back(std::move(down));
    }
    return a;
}

namespace detail {
/// Rows selecting the coordinates whose basis weight differs from mu; the
/// kernel of their span is the mu-weight subspace.
inline Subspace<Rational> classical_weight_space(const ClassicalAmbient& a, const Weight& mu,
                                                 const Subspace<Rational>& within) {
    const int dim = a.dim();
    std::vector<int> off;
    for (int idx = 0; idx < dim; ++idx)
        if (a.basis_weight[idx] != mu) off.push_back(idx);
    Matrix<Rational> selector(static_cast<int>(off.size()), dim);
    for (int r = 0; r < static_cast<int>(off.size()); ++r) selector(r, off[r]) = Rational(1);
    return intersect_with_kernel(within, selector);
}
}  // namespace detail

inline Subspace<Rational> classical_highest_weight_vectors(const ClassicalAmbient& a, const Weight& mu,
                                                           const Subspace<Rational>& within) {
    Subspace<Rational> s = detail::classical_weight_space(a, mu, within);
    for (const auto& e : a.raising) {
        if (s.dim() == 0) break;
        s = intersect_with_kernel(s, e);
    }
    return s;
}

/// chi-isotypic vectors for the determinant-power character: balanced weight
/// (d/N,...,d/N) killed by every raising operator. Empty when N does not
/// divide the tensor degree.
inline Subspace<Rational> classical_trivial_isotypic(const ClassicalAmbient& a,
                                                     const Subspace<Rational>& within) {
    if (a.d % a.N != 0) return Subspace<Rational>{a.dim(), {}, {}};
    return classical_highest_weight_vectors(a, Weight(a.N, a.d / a.N), within);
}

struct ClassicalIrrep {
    Weight mu;
    ClassicalAmbient host;
    Subspace<Rational> carrier;
};

/// V_mu inside (C^N)^{tensor |mu|}: the lowering-closure of the first
/// canonical highest weight vector, dimension-checked against Weyl's formula.
inline ClassicalIrrep classical_irrep(int N, const Weight& mu) {
    if (static_cast<int>(mu.size()) != N || !is_partition(mu))
        throw std::invalid_argument("classical_irrep: weight must be a partition with N parts");
    ClassicalIrrep rep{mu, classical_tensor_power(N, total(mu)), {}};
    const auto& a = rep.host;

    const auto hw = classical_highest_weight_vectors(a, mu, full_space<Rational>(a.dim()));
    if (hw.dim() == 0) throw std::runtime_error("classical_irrep: no highest weight vector found");

    std::vector<std::vector<Rational>> vecs{hw.basis[0]};
    Subspace<Rational> span = span_of(a.dim(), vecs);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<Rational>> next = span.basis;
        for (const auto& f : a.lowering)
            for (const auto& v : span.basis) next.push_back(f.apply(v));
        Subspace<Rational> bigger = span_of(a.dim(), std::move(next));
        if (bigger.dim() > span.dim()) {
            span = std::move(bigger);
            grew = true;
        }
    }
    rep.carrier = std::move(span);

    const Integer expected = weyl_dim(rep.mu);
    if (Integer(rep.carrier.dim()) != expected) {
        std::ostringstream os;
        os << "classical_irrep: carrier dimension " << rep.carrier.dim()
           << " does not match the Weyl dimension " << expected;
        throw std::runtime_error(os.str());
    }
    return rep;
}

struct ClassicalProduct {
    ClassicalAmbient ambient;
    std::vector<int> block_sizes;
    std::vector<int> block_offsets;
    Subspace<Rational> carrier;
};

inline ClassicalProduct make_classical_product(int N, const std::vector<Weight>& mus) {
    int d = 0;
    std::vector<int> sizes, offsets;
    for (const auto& mu : mus) {
        offsets.push_back(d);
        sizes.push_back(total(mu));
        d += total(mu);
    }
    ClassicalProduct prod{classical_tensor_power(N, d), std::move(sizes), std::move(offsets), {}};

    Matrix<Rational> joint = Matrix<Rational>::identity(1);
    for (const auto& mu : mus) joint = kron(joint, basis_matrix(classical_irrep(N, mu).carrier));
    std::vector<std::vector<Rational>> cols(joint.cols(), std::vector<Rational>(joint.rows()));
    for (int j = 0; j < joint.cols(); ++j)
        for (int i = 0; i < joint.rows(); ++i) cols[j][i] = joint(i, j);
    prod.carrier = span_of(prod.ambient.dim(), std::move(cols));
    return prod;
}

/// Flip of tensor positions p and q (1-based) on (C^N)^{tensor d}; this is
/// the realized gl_N Casimir tensor between two vector factors.
inline Matrix<Rational> strand_flip(const ClassicalAmbient& a, int p, int q) {
    if (p < 1 || q < 1 || p > a.d || q > a.d || p == q)
        throw std::invalid_argument("strand_flip: positions out of range");
    const int dim = a.dim();
    Matrix<Rational> m(dim, dim);
    for (int idx = 0; idx < dim; ++idx) {
        std::vector<int> word = a.letters[idx];
        std::swap(word[p - 1], word[q - 1]);
        int target = 0;
        for (int s = 0; s < a.d; ++s) target = target * a.N + word[s];
        m(target, idx) = Rational(1);
    }
    return m;
}

/// Montarani's representation data on the invariant fiber, kept exact: the
/// generators scale linearly with nu, so we store the nu-independent seeds
///   Y_{i,k} = -nu * omega_seed[i][k],     gamma_{k,j} = -nu * gamma_seed[k][j]
/// and realize complex matrices on demand.
struct ClassicalRep {
    RepSpec spec;
    double nu = 0.0;
    ClassicalProduct product;
    Subspace<Rational> fiber;
    std::vector<std::vector<Matrix<Rational>>> omega_seed;  // [i-1][k-1] on the fiber
    std::vector<std::vector<Matrix<Rational>>> flip;        // [i-1][j-1], i != j, on the fiber
    std::vector<std::vector<Rational>> gamma_seed;          // [k-1][j-1] = w_j + (N-c)/m

    int fiber_dim() const { return fiber.dim(); }

    Matrix<std::complex<double>> Y(int i, int k) const {
        return to_complex(omega_seed[i - 1][k - 1], std::complex<double>(-nu, 0.0));
    }
    Matrix<std::complex<double>> s(int i, int j) const {
        return to_complex(flip[i - 1][j - 1], std::complex<double>(1.0, 0.0));
    }
    double gamma(int k, int j) const { return -nu * to_double(gamma_seed[k - 1][j - 1]); }

    static Matrix<std::complex<double>> to_complex(const Matrix<Rational>& m,
                                                   std::complex<double> scale) {
        Matrix<std::complex<double>> out(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!is_zero(m(i, j))) out(i, j) = scale * to_double(m(i, j));
        return out;
    }
};

inline ClassicalRep montarani_rep(const RepSpec& s, double nu) {
    validate_spec(s);
    std::vector<Weight> factors = s.mus;
    factors.insert(factors.end(), s.n, eps(1, s.N));

    ClassicalRep rep{s, nu, make_classical_product(s.N, factors), {}, {}, {}, {}};
    rep.fiber = classical_trivial_isotypic(rep.product.ambient, rep.product.carrier);

    const int m = s.m();
    const Rational c = central_slope(s);
    const Rational common_shift = (Rational(s.N) - c) / m;
    const auto id = Matrix<Rational>::identity(rep.fiber.dim());

    // omega_seed[i][k] = restriction of Omega^{gl}_{k, m+i} + (N-c)/m, with the
    // twist acting as a formal central parameter: the realized block flips give
    // the traceless part plus |mu_k|/N, corrected to lambda_k/N.
    for (int i = 1; i <= s.n; ++i) {
        std::vector<Matrix<Rational>> row;
        const int strand = rep.product.block_offsets[m + i - 1] + 1;  // 1-based position
        for (int k = 1; k <= m; ++k) {
            Matrix<Rational> omega(rep.product.ambient.dim(), rep.product.ambient.dim());
            for (int p = 0; p < rep.product.block_sizes[k - 1]; ++p)
                omega = omega + strand_flip(rep.product.ambient,
                                            rep.product.block_offsets[k - 1] + p + 1, strand);
            const Rational central = (s.lambdas[k - 1] - total(s.mus[k - 1])) / s.N;
            row.push_back(restrict_operator(omega, rep.fiber) + (central + common_shift) * id);
        }
        rep.omega_seed.push_back(std::move(row));
    }

    for (int i = 1; i <= s.n; ++i) {
        std::vector<Matrix<Rational>> row;
        for (int j = 1; j <= s.n; ++j) {
            if (i == j) {
                row.push_back(id);
                continue;
            }
            const int pi = rep.product.block_offsets[m + i - 1] + 1;
            const int pj = rep.product.block_offsets[m + j - 1] + 1;
            row.push_back(restrict_operator(strand_flip(rep.product.ambient, pi, pj), rep.fiber));
        }
        rep.flip.push_back(std::move(row));
    }

    // gamma_seed[k][j] = w_j + (N-c)/m with w_j the formal Casimir eigenvalue
    // on the j-th Pieri summand of V_k tensor C^N.
    for (int k = 1; k <= m; ++k) {
        const Weight& mu = s.mus[k - 1];
        const Rational central = (s.lambdas[k - 1] - total(mu)) / s.N;
        std::vector<Rational> seeds;
        for (const auto& eta : pieri(s.N, mu)) {
            const Rational w =
                (gl_casimir(eta) - gl_casimir(mu) - gl_casimir(eps(1, s.N))) / 2 + central;
            seeds.push_back(w + common_shift);
        }
        rep.gamma_seed.push_back(std::move(seeds));
    }
    return rep;
}

struct RgdahaReport {
    bool pass = true;
    int checks = 0;
    double max_deviation = 0.0;
    std::vector<std::string> failures;
};

namespace detail {
inline double max_abs_entry(const Matrix<std::complex<double>>& m) {
    double mx = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) mx = std::max(mx, std::abs(m(i, j)));
    return mx;
}
}  // namespace detail

/// Check the six defining relation families numerically on the fiber.
inline RgdahaReport check_rgdaha_relations(const ClassicalRep& rep, double tol = 1e-12) {
    RgdahaReport report;
    const int n = rep.spec.n, m = rep.spec.m();
    using CMatrix = Matrix<std::complex<double>>;
    const CMatrix id = ClassicalRep::to_complex(Matrix<Rational>::identity(rep.fiber_dim()),
                                                std::complex<double>(1.0, 0.0));

    const auto record = [&](const CMatrix& difference, const std::string& what) {
        const double dev = detail::max_abs_entry(difference);
        report.max_deviation = std::max(report.max_deviation, dev);
        ++report.checks;
        if (!(dev <= tol)) {
            report.pass = false;
            std::ostringstream os;
            os << what << " (deviation " << dev << ")";
            report.failures.push_back(os.str());
        }
    };
    const auto label = [](const char* fmt, int a, int b, int c = 0) {
        std::ostringstream os;
        os << fmt << " (" << a << ", " << b;
        if (c) os << ", " << c;
        os << ")";
        return os.str();
    };

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            // (1) s_{ij} Y_{i,k} = Y_{j,k} s_{ij}; also s_{ij}^2 = Id.
            record(rep.s(i, j) * rep.s(i, j) - id, label("flip squared", i, j));
            for (int k = 1; k <= m; ++k)
                record(rep.s(i, j) * rep.Y(i, k) - rep.Y(j, k) * rep.s(i, j),
                       label("relation 1: s Y_i = Y_j s", i, j, k));
            // (2) s_{ij} commutes with Y_{h,k} for h distinct from i, j.
            for (int h = 1; h <= n; ++h) {
                if (h == i || h == j) continue;
                for (int k = 1; k <= m; ++k)
                    record(rep.s(i, j) * rep.Y(h, k) - rep.Y(h, k) * rep.s(i, j),
                           label("relation 2: [s_{ij}, Y_h] = 0", i, j, k));
            }
        }

    // (3) eigenvalue polynomial of Y_{i,k}.
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= m; ++k) {
            CMatrix p = id;
            for (size_t j = 0; j < rep.gamma_seed[k - 1].size(); ++j) {
                const std::complex<double> gamma(rep.gamma(k, static_cast<int>(j + 1)), 0.0);
                p = p * (rep.Y(i, k) - gamma * id);
            }
            record(p, label("relation 3: eigenvalue polynomial of Y", i, k));
        }

    // (4) sum over legs balances the flips.
    for (int i = 1; i <= n; ++i) {
        CMatrix lhs(rep.fiber_dim(), rep.fiber_dim());
        for (int k = 1; k <= m; ++k) lhs = lhs + rep.Y(i, k);
        CMatrix rhs(rep.fiber_dim(), rep.fiber_dim());
        for (int j = 1; j <= n; ++j)
            if (j != i) rhs = rhs + rep.s(i, j);
        record(lhs - std::complex<double>(rep.nu, 0.0) * rhs, label("relation 4: sum rule", i, 0));
    }

    // (5) same-leg commutator; (6) distinct legs commute.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int k = 1; k <= m; ++k) {
                const CMatrix lhs = rep.Y(i, k) * rep.Y(j, k) - rep.Y(j, k) * rep.Y(i, k);
                const CMatrix rhs = std::complex<double>(rep.nu, 0.0) *
                                    ((rep.Y(i, k) - rep.Y(j, k)) * rep.s(i, j));
                record(lhs - rhs, label("relation 5: same-leg commutator", i, j, k));
                for (int l = 1; l <= m; ++l) {
                    if (l == k) continue;
                    record(rep.Y(i, k) * rep.Y(j, l) - rep.Y(j, l) * rep.Y(i, k),
                           label("relation 6: distinct legs commute", i, j, k));
                }
            }
        }

    return report;
}

}  // namespace gdaha
