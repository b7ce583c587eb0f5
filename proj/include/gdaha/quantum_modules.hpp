#pragma once

#include "gdaha/linalg.hpp"
#include "gdaha/scalar_field.hpp"
#include "gdaha/weights.hpp"

#include <string>
#include <vector>

namespace gdaha {

/// The quantum group acting on (C^N)^{tensor d}: generator matrices obtained
/// by iterating the coproduct D(E_i) = E_i ox K_i + 1 ox E_i,
/// D(F_i) = F_i ox 1 + K_i^{-1} ox F_i, D(K_i) = K_i ox K_i left to right.
/// Basis vectors are indexed with the first tensor factor most significant;
/// basis vector e_{j_1} ox ... ox e_{j_d} has gl weight eps_{j_1}+...+eps_{j_d}.
struct AmbientRealization {
    int N = 0;
    int d = 0;
    ScalarField field;
    std::vector<Matrix<Scalar>> E, F, K, Kinv;  // indexed by i-1, i = 1..N-1
    std::vector<std::vector<int>> letters;      // 0-based letters per basis index
    std::vector<Weight> basis_weight;

    int dim() const {
        int t = 1;
        for (int k = 0; k < d; ++k) t *= N;
        return t;
    }
};

inline AmbientRealization tensor_power_action(int N, int d, const ScalarField& field) {
    if (N < 2) throw std::invalid_argument("tensor_power_action: need N >= 2");
    if (d < 0) throw std::invalid_argument("tensor_power_action: need d >= 0");
    AmbientRealization a{N, d, field, {}, {}, {}, {}, {}, {}};

    // Single-site matrices.
    std::vector<Matrix<Scalar>> E1(N - 1, Matrix<Scalar>(N, N)), F1 = E1, K1 = E1, K1inv = E1;
    for (int i = 1; i <= N - 1; ++i) {
        E1[i - 1](i - 1, i) = Scalar(1);
        F1[i - 1](i, i - 1) = Scalar(1);
        for (int j = 0; j < N; ++j) {
            Scalar diag(1);
            if (j == i - 1) diag = field.q();
            if (j == i) diag = field.q().inverse();
            K1[i - 1](j, j) = diag;
            K1inv[i - 1](j, j) = diag.inverse();
        }
    }

    const int dim = a.dim();
    const Matrix<Scalar> id1 = Matrix<Scalar>::identity(N);
    for (int i = 0; i < N - 1; ++i) {
        Matrix<Scalar> E(dim, dim), F(dim, dim), K = Matrix<Scalar>::identity(1), Kinv = K;
        for (int p = 0; p < d; ++p) {
            // Term with E at site p: identity left of p, K_i right of p.
            Matrix<Scalar> termE = Matrix<Scalar>::identity(1), termF = termE;
            for (int s = 0; s < d; ++s) {
                termE = kron(termE, s < p ? id1 : (s == p ? E1[i] : K1[i]));
                termF = kron(termF, s < p ? K1inv[i] : (s == p ? F1[i] : id1));
            }
            E = E + termE;
            F = F + termF;
            K = kron(K, K1[i]);
            Kinv = kron(Kinv, K1inv[i]);
        }
        a.E.push_back(E);
        a.F.push_back(F);
        a.K.push_back(K);
        a.Kinv.push_back(Kinv);
    }

    a.letters.resize(dim);
    a.basis_weight.resize(dim);
    for (int idx = 0; idx < dim; ++idx) {
        std::vector<int> ls(d);
        int rem = idx;
        for (int p = d - 1; p >= 0; --p) {
            ls[p] = rem % N;
            rem /= N;
        }
        Weight w(N, 0);
        for (int l : ls) ++w[l];
        a.letters[idx] = std::move(ls);
        a.basis_weight[idx] = std::move(w);
    }
    return a;
}

inline AmbientRealization vector_rep(int N, const ScalarField& field) {
    return tensor_power_action(N, 1, field);
}

struct UqReport {
    bool pass = true;
    std::string failure;  // first failing relation, empty when pass
};

/// Checks the defining relations of the quantum group on the realized
/// generator matrices: Cartan commutations, [E_i, F_j], and the q-Serre
/// relations for both E and F families. All checks are exact.
inline UqReport validate_uq_relations(const AmbientRealization& a) {
    UqReport rep;
    const int n = a.N - 1;
    const ScalarField& F = a.field;
    auto fail = [&](const std::string& what) {
        if (rep.pass) {
            rep.pass = false;
            rep.failure = what;
        }
    };
    auto cartan = [&](int i, int j) { return i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0); };

    for (int i = 0; i < n && rep.pass; ++i) {
        if (!(a.K[i] * a.Kinv[i] == Matrix<Scalar>::identity(a.dim()))) fail("K K^{-1} = 1");
        for (int j = 0; j < n && rep.pass; ++j) {
            if (!(a.K[i] * a.K[j] == a.K[j] * a.K[i])) fail("[K_i, K_j] = 0");
            const Scalar qa = F.q_pow(Rational(cartan(i + 1, j + 1)));
            if (!(a.K[i] * a.E[j] == qa * (a.E[j] * a.K[i]))) fail("K_i E_j = q^{a_ij} E_j K_i");
            if (!(a.K[i] * a.F[j] == qa.inverse() * (a.F[j] * a.K[i]))) fail("K_i F_j = q^{-a_ij} F_j K_i");
        }
    }
    const Scalar qdiff = F.q() - F.q().inverse();
    for (int i = 0; i < n && rep.pass; ++i) {
        for (int j = 0; j < n && rep.pass; ++j) {
            const Matrix<Scalar> lhs = a.E[i] * a.F[j] - a.F[j] * a.E[i];
            if (i == j) {
                const Matrix<Scalar> rhs = qdiff.inverse() * (a.K[i] - a.Kinv[i]);
                if (!(lhs == rhs)) fail("[E_i, F_i] = (K_i - K_i^{-1})/(q - q^{-1})");
            } else if (!lhs.is_zero_matrix()) {
                fail("[E_i, F_j] = 0 for i != j");
            }
        }
    }
    // q-Serre relations.
    auto serre = [&](const std::vector<Matrix<Scalar>>& X, const char* name) {
        for (int i = 0; i < n && rep.pass; ++i) {
            for (int j = 0; j < n && rep.pass; ++j) {
                if (i == j) continue;
                const int s = 1 - cartan(i + 1, j + 1);
                Matrix<Scalar> acc(a.dim(), a.dim());
                for (int r = 0; r <= s; ++r) {
                    Matrix<Scalar> term = Matrix<Scalar>::identity(a.dim());
                    for (int t = 0; t < s - r; ++t) term = term * X[i];
                    term = term * X[j];
                    for (int t = 0; t < r; ++t) term = term * X[i];
                    Scalar coeff = F.q_binom(s, r);
                    if (r % 2 == 1) coeff = -coeff;
                    acc = acc + coeff * term;
                }
                if (!acc.is_zero_matrix()) fail(std::string("q-Serre relation for ") + name);
            }
        }
    };
    serre(a.E, "E");
    serre(a.F, "F");
    return rep;
}

/// Vectors of exact gl weight mu annihilated by every E_i, inside `within`.
inline Subspace<Scalar> highest_weight_vectors(const AmbientRealization& a, const Weight& mu,
                                               const Subspace<Scalar>& within) {
    if (static_cast<int>(mu.size()) != a.N)
        throw std::invalid_argument("highest_weight_vectors: weight length must be N");
    if (!is_dominant(mu)) throw std::invalid_argument("highest_weight_vectors: weight must be dominant");
    if (total(mu) != a.d)
        throw std::invalid_argument("highest_weight_vectors: weight size must match tensor degree");
    // Coordinate selectors for the weight space.
    std::vector<int> off_weight;
    for (int idx = 0; idx < a.dim(); ++idx)
        if (a.basis_weight[idx] != mu) off_weight.push_back(idx);
    Matrix<Scalar> sel(static_cast<int>(off_weight.size()), a.dim());
    for (std::size_t r = 0; r < off_weight.size(); ++r) sel(static_cast<int>(r), off_weight[r]) = Scalar(1);
    Subspace<Scalar> s = intersect_with_kernel(within, sel);
    for (const auto& e : a.E) {
        if (s.dim() == 0) break;
        s = intersect_with_kernel(s, e);
    }
    return s;
}

inline Subspace<Scalar> highest_weight_vectors(const AmbientRealization& a, const Weight& mu) {
    return highest_weight_vectors(a, mu, full_space<Scalar>(a.dim()));
}

/// Irreducible module V(mu) realized inside (C^N)^{tensor |mu|}: the carrier is
/// generated from the first echelon highest weight vector by the lowering
/// operators. The dimension is validated against the Weyl formula.
struct IrrepRealization {
    Weight mu;
    AmbientRealization host;
    Subspace<Scalar> carrier;
};

inline IrrepRealization irrep_realization(int N, const Weight& mu, const ScalarField& field) {
    if (!is_partition(mu) || static_cast<int>(mu.size()) != N)
        throw std::invalid_argument("irrep_realization: mu must be a partition of length N");
    IrrepRealization ir{mu, tensor_power_action(N, total(mu), field), {}};
    const Subspace<Scalar> hw = highest_weight_vectors(ir.host, mu);
    if (hw.dim() < 1) throw std::runtime_error("irrep_realization: no highest weight vector found");
    std::vector<std::vector<Scalar>> gen = {hw.basis.front()};
    Subspace<Scalar> span = span_of(ir.host.dim(), gen);
    // Closure under the lowering operators.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<Scalar>> next = span.basis;
        for (const auto& b : span.basis) {
            for (const auto& f : ir.host.F) {
                std::vector<Scalar> w = f.apply(b);
                bool zero = true;
                for (const auto& x : w) {
                    if (!is_zero(x)) {
                        zero = false;
                        break;
                    }
                }
                if (!zero && !contains(span, w)) {
                    next.push_back(std::move(w));
                    grew = true;
                }
            }
            if (grew) {
                span = span_of(ir.host.dim(), next);
                break;  // re-sweep with the enlarged span
            }
        }
    }
    ir.carrier = span;
    if (Integer(ir.carrier.dim()) != weyl_dim(mu))
        throw std::runtime_error("irrep_realization: dimension disagrees with the Weyl formula");
    return ir;
}

/// Sum of the trivial-module summands of `within`: vectors of sl weight zero
/// annihilated by every raising operator. Empty when N does not divide d.
inline Subspace<Scalar> zero_isotypic(const AmbientRealization& a, const Subspace<Scalar>& within) {
    if (a.d % a.N != 0) {
        Subspace<Scalar> empty;
        empty.ambient = a.dim();
        return empty;
    }
    const Weight target(a.N, a.d / a.N);
    std::vector<int> off_weight;
    for (int idx = 0; idx < a.dim(); ++idx)
        if (a.basis_weight[idx] != target) off_weight.push_back(idx);
    Matrix<Scalar> sel(static_cast<int>(off_weight.size()), a.dim());
    for (std::size_t r = 0; r < off_weight.size(); ++r) sel(static_cast<int>(r), off_weight[r]) = Scalar(1);
    Subspace<Scalar> s = intersect_with_kernel(within, sel);
    for (const auto& e : a.E) {
        if (s.dim() == 0) break;
        s = intersect_with_kernel(s, e);
    }
    return s;
}

/// Ordered tensor product of irreducible factors realized inside one ambient
/// tensor power; block k occupies elementary positions
/// [offset_k, offset_k + size_k).
struct ProductRealization {
    AmbientRealization ambient;
    std::vector<IrrepRealization> factors;
    std::vector<int> block_sizes;
    std::vector<int> block_offsets;
    Subspace<Scalar> carrier;
};

inline ProductRealization make_product(int N, const ScalarField& field, const std::vector<Weight>& mus) {
    int d = 0;
    for (const auto& mu : mus) d += total(mu);
    ProductRealization pr{tensor_power_action(N, d, field), {}, {}, {}, {}};
    Matrix<Scalar> basis = Matrix<Scalar>::identity(1);
    int offset = 0;
    for (const auto& mu : mus) {
        IrrepRealization ir = irrep_realization(N, mu, field);
        basis = kron(basis, basis_matrix(ir.carrier));
        pr.block_sizes.push_back(total(mu));
        pr.block_offsets.push_back(offset);
        offset += total(mu);
        pr.factors.push_back(std::move(ir));
    }
    std::vector<std::vector<Scalar>> cols(basis.cols(), std::vector<Scalar>(basis.rows()));
    for (int j = 0; j < basis.cols(); ++j)
        for (int i = 0; i < basis.rows(); ++i) cols[j][i] = basis(i, j);
    pr.carrier = span_of(pr.ambient.dim(), std::move(cols));
    return pr;
}

}  // namespace gdaha
