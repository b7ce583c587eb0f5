#pragma once

#include "gdaha/braiding.hpp"
#include "gdaha/quantum_modules.hpp"
#include "gdaha/weights.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gdaha {

/// Input data for one representation: rank N, number of moving strands n,
/// and one (partition, rational twist) pair per leg of the star.
struct RepSpec {
    int N = 2;
    int n = 1;
    std::vector<Weight> mus;
    std::vector<Rational> lambdas;

    int m() const { return static_cast<int>(mus.size()); }
};

inline void validate_spec(const RepSpec& s) {
    if (s.N < 2) throw std::invalid_argument("spec: N must be at least 2");
    if (s.n < 1) throw std::invalid_argument("spec: n must be at least 1");
    if (s.mus.empty()) throw std::invalid_argument("spec: need at least one leg");
    if (s.lambdas.size() != s.mus.size())
        throw std::invalid_argument("spec: need exactly one twist per leg");
    for (const auto& mu : s.mus) {
        if (static_cast<int>(mu.size()) != s.N)
            throw std::invalid_argument("spec: each leg weight must have N parts");
        if (!is_partition(mu))
            throw std::invalid_argument("spec: each leg weight must be a partition");
    }
}

/// c = (n + sum of twists) / N; enters every eigenvalue exponent.
inline Rational central_slope(const RepSpec& s) {
    Rational sum = Rational(s.n);
    for (const auto& l : s.lambdas) sum += l;
    return sum / s.N;
}

/// Smallest root order D such that every exponent appearing in the
/// representation (multiples of 1/N, 1/(N m), and twists over N) has
/// an integer multiple of 1/D: D = N * m * lcm of twist denominators.
inline int derive_root_order(const RepSpec& s) {
    validate_spec(s);
    Integer l = 1;
    for (const auto& lam : s.lambdas)
        l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(lam)));
    const Integer d = Integer(s.N) * s.m() * l;
    if (d > 1'000'000) throw std::invalid_argument("spec: root order overflow; twist denominators too large");
    return static_cast<int>(d);
}

/// One eigenvalue of a leg generator: the dominant weight eta = mu + eps_j it
/// belongs to, the exponent, and the realized field element q^{exponent}.
struct EigenvalueData {
    Weight eta;
    Rational exponent;
    Scalar value;
};

/// The scalar parameters (t; u_{k,j}) attached to a spec, plus the exponents
/// behind them. u lists follow the Pieri order (eta lexicographically
/// decreasing), matching the order the eigenvalues are quoted in.
struct GraphParams {
    Scalar t;
    Rational t_exponent = Rational(1);
    std::vector<Rational> prefactor_exponents;     // per leg: 2[(N-c)/m + lambda_k/N]
    std::vector<std::vector<EigenvalueData>> u;    // per leg, per Pieri weight
};

inline GraphParams gdaha_parameters(const RepSpec& s, const ScalarField& field) {
    validate_spec(s);
    GraphParams p;
    p.t = field.q();
    const Rational c = central_slope(s);
    for (int k = 0; k < s.m(); ++k) {
        const Rational pref = 2 * ((Rational(s.N) - c) / s.m() + s.lambdas[k] / s.N);
        p.prefactor_exponents.push_back(pref);
        const Rational cas_mu = sl_casimir(s.mus[k]);
        std::vector<EigenvalueData> us;
        for (const auto& eta : pieri(s.N, s.mus[k])) {
            const Rational e = pref - cas_mu + sl_casimir(eta) - s.N + Rational(1, s.N);
            us.push_back({eta, e, field.q_pow(e)});
        }
        p.u.push_back(std::move(us));
    }
    return p;
}

/// A realized representation: the product module, the invariant multiplicity
/// space E, and the generator matrices restricted to E. A spec whose product
/// contains no invariants yields E = 0 and empty generator matrices; such a
/// representation is vacuous and every relation holds trivially.
struct QuantumRep {
    RepSpec spec;
    ScalarField field;
    GraphParams params;
    ProductRealization product;
    Subspace<Scalar> E;
    std::vector<Matrix<Scalar>> T, Tinv;  // indexed by i-1, i = 1..n-1
    std::vector<Matrix<Scalar>> U, Uinv;  // indexed by k-1, k = 1..m

    bool vacuous() const { return E.dim() == 0; }
};

inline QuantumRep build_quantum_rep(const RepSpec& s) {
    validate_spec(s);
    const ScalarField field = make_field(derive_root_order(s));

    std::vector<Weight> factors = s.mus;
    factors.insert(factors.end(), s.n, eps(1, s.N));

    QuantumRep rep{s, field, gdaha_parameters(s, field), make_product(s.N, field, factors),
                   {}, {}, {}, {}, {}};
    rep.E = zero_isotypic(rep.product.ambient, rep.product.carrier);

    const int m = s.m();
    const BlockStructure blocks{rep.product.block_sizes};
    const auto restricted = [&](const std::vector<BlockLetter>& letters, const Rational& pref_exp) {
        const Matrix<Scalar> op = block_word_operator(blocks, letters, s.N, field);
        return field.q_pow(pref_exp) * restrict_operator(op, rep.E);
    };

    for (int i = 1; i <= s.n - 1; ++i) {
        rep.T.push_back(restricted({{m + i, 1}}, Rational(1, s.N)));
        rep.Tinv.push_back(restricted({{m + i, -1}}, Rational(-1, s.N)));
    }
    for (int k = 1; k <= m; ++k) {
        // Written operator R_m ... R_{k+1} R_k^2 R_{k+1}^{-1} ... R_m^{-1};
        // letters are listed in acting order (rightmost written factor first).
        std::vector<BlockLetter> word;
        for (int j = m; j > k; --j) word.push_back({j, -1});
        word.push_back({k, 1});
        word.push_back({k, 1});
        for (int j = k + 1; j <= m; ++j) word.push_back({j, 1});

        std::vector<BlockLetter> inverse_word;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            inverse_word.push_back({it->pos, -it->sign});

        const Rational& pref = rep.params.prefactor_exponents[k - 1];
        rep.U.push_back(restricted(word, pref));
        rep.Uinv.push_back(restricted(inverse_word, -pref));
    }
    return rep;
}

struct RelationReport {
    bool pass = true;
    int checks = 0;
    std::vector<std::string> failures;

    void record(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

/// Verify every defining relation exactly on E. All comparisons are equality
/// in the scalar field; there are no tolerances on this path.
inline RelationReport check_gdaha_relations(const QuantumRep& rep) {
    RelationReport report;
    const int n = rep.spec.n, m = rep.spec.m();
    const auto id = Matrix<Scalar>::identity(rep.E.dim());
    const auto name = [](const char* fmt, int a, int b = 0) {
        std::ostringstream os;
        os << fmt << " (indices " << a;
        if (b) os << ", " << b;
        os << ")";
        return os.str();
    };

    // (1) U_1 ... U_m T_1 ... T_{n-2} T_{n-1}^2 T_{n-2} ... T_1 = 1.
    {
        Matrix<Scalar> p = id;
        for (int k = 0; k < m; ++k) p = p * rep.U[k];
        if (n >= 2) {
            std::vector<int> seq;
            for (int i = 1; i <= n - 2; ++i) seq.push_back(i);
            seq.push_back(n - 1);
            seq.push_back(n - 1);
            for (int i = n - 2; i >= 1; --i) seq.push_back(i);
            for (int i : seq) p = p * rep.T[i - 1];
        }
        report.record(p == id, "long relation U_1..U_m T_1..T_{n-1}^2..T_1 = 1");
    }

    // (2) braid relation between adjacent T's.
    for (int i = 1; i + 1 <= n - 1; ++i)
        report.record(rep.T[i - 1] * rep.T[i] * rep.T[i - 1] == rep.T[i] * rep.T[i - 1] * rep.T[i],
                      name("braid relation T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}", i));

    // (3) far commutation of T's.
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            report.record(rep.T[i - 1] * rep.T[j - 1] == rep.T[j - 1] * rep.T[i - 1],
                          name("commutation T_i T_j = T_j T_i", i, j));

    // (4) U_i commutes with T_j for j >= 2.
    for (int i = 1; i <= m; ++i)
        for (int j = 2; j <= n - 1; ++j)
            report.record(rep.U[i - 1] * rep.T[j - 1] == rep.T[j - 1] * rep.U[i - 1],
                          name("commutation U_i T_j = T_j U_i", i, j));

    // (5) U_i commutes with T_1 U_i T_1.
    if (n >= 2)
        for (int i = 1; i <= m; ++i) {
            const Matrix<Scalar> a = rep.T[0] * rep.U[i - 1] * rep.T[0];
            report.record(rep.U[i - 1] * a == a * rep.U[i - 1],
                          name("commutation [U_i, T_1 U_i T_1] = 0", i));
        }

    // (6) U_i commutes with T_1^{-1} U_j T_1 for i < j.
    if (n >= 2)
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                const Matrix<Scalar> a = rep.Tinv[0] * rep.U[j - 1] * rep.T[0];
                report.record(rep.U[i - 1] * a == a * rep.U[i - 1],
                              name("commutation [U_i, T_1^{-1} U_j T_1] = 0", i, j));
            }

    // (7) each U_k satisfies its eigenvalue polynomial.
    for (int k = 1; k <= m; ++k) {
        Matrix<Scalar> p = id;
        for (const auto& ev : rep.params.u[k - 1]) p = p * (rep.U[k - 1] - ev.value * id);
        report.record(p.is_zero_matrix(), name("eigenvalue polynomial of U_k", k));
    }

    // (8) quadratic relation for the T's.
    {
        const Scalar rhs = rep.params.t - rep.params.t.inverse();
        for (int i = 1; i <= n - 1; ++i)
            report.record(rep.T[i - 1] - rep.Tinv[i - 1] == rhs * id,
                          name("quadratic relation T_i - T_i^{-1} = t - t^{-1}", i));
    }

    // Inverse bookkeeping (not a defining relation; guards the word expansion).
    for (int i = 1; i <= n - 1; ++i)
        report.record(rep.T[i - 1] * rep.Tinv[i - 1] == id, name("T_i inverse consistency", i));
    for (int k = 1; k <= m; ++k)
        report.record(rep.U[k - 1] * rep.Uinv[k - 1] == id, name("U_k inverse consistency", k));

    return report;
}

namespace detail {

/// Splits a restriction into (is-scalar, the scalar, witness text).
inline std::tuple<bool, Scalar, std::string> as_scalar(const Matrix<Scalar>& op) {
    const Scalar value = op(0, 0);
    for (int r = 0; r < op.rows(); ++r)
        for (int c = 0; c < op.cols(); ++c) {
            if (r == c && !(op(r, c) == value)) {
                std::ostringstream os;
                os << "diagonal entries differ: (" << r << "," << r << ")";
                return {false, value, os.str()};
            }
            if (r != c && !op(r, c).is_zero()) {
                std::ostringstream os;
                os << "off-diagonal entry (" << r << "," << c << ") is nonzero";
                return {false, value, os.str()};
            }
        }
    return {true, value, {}};
}

}  // namespace detail

/// Result of the full-twist scalar check: one distinguished strand is crossed
/// positively past every other tensor factor and back again, and the
/// restriction to the invariant fiber must be the scalar q^{-2N + 2/N}.
struct LongWordReport {
    int dim = 0;  // invariant-fiber dimension
    bool vacuous = false;
    bool pass = false;
    Scalar scalar;    // observed scalar (meaningful when not vacuous)
    Scalar expected;  // q^{-2N + 2/N}
    std::string failure;
};

inline LongWordReport long_word_check(const RepSpec& s) {
    validate_spec(s);
    const ScalarField field = make_field(derive_root_order(s));

    // Product with the distinguished strand first, then the legs, then the
    // remaining strands.
    std::vector<Weight> factors;
    factors.push_back(eps(1, s.N));
    for (const auto& mu : s.mus) factors.push_back(mu);
    factors.insert(factors.end(), s.n - 1, eps(1, s.N));

    const auto product = make_product(s.N, field, factors);
    const auto fiber = zero_isotypic(product.ambient, product.carrier);

    LongWordReport report;
    report.dim = fiber.dim();
    report.expected = field.q_pow(Rational(2 - 2 * s.N * s.N, s.N));
    if (fiber.dim() == 0) {
        report.vacuous = true;
        report.pass = true;
        return report;
    }

    const int block_count = s.m() + s.n;
    std::vector<BlockLetter> letters;
    for (int j = 1; j <= block_count - 1; ++j) letters.push_back({j, 1});
    for (int j = block_count - 1; j >= 1; --j) letters.push_back({j, 1});

    const BlockStructure blocks{product.block_sizes};
    const auto restricted =
        restrict_operator(block_word_operator(blocks, letters, s.N, field), fiber);
    const auto [is_scalar, value, witness] = detail::as_scalar(restricted);
    report.scalar = value;
    if (!is_scalar) {
        report.failure = "full-twist restriction is not scalar: " + witness;
        return report;
    }
    if (!(value == report.expected)) {
        report.failure = "full-twist scalar is " + to_string(value) + ", expected " +
                         to_string(report.expected);
        return report;
    }
    report.pass = true;
    return report;
}

/// Per-summand verdicts for the squared block crossing on V(mu) ⊗ V(mu'):
/// each highest-weight summand eta must see the exact scalar
/// q^{-(mu,mu+2rho) - (mu',mu'+2rho) + (eta,eta+2rho)}.
struct RSquaredEntry {
    Weight eta;
    int multiplicity = 0;
    Scalar expected;
    bool pass = false;
};

struct RSquaredReport {
    bool pass = true;
    std::vector<RSquaredEntry> entries;
    std::vector<std::string> failures;
};

inline RSquaredReport r_squared_spectrum_check(int N, const Weight& mu, const Weight& mup,
                                               const ScalarField& field) {
    if (static_cast<int>(mu.size()) != N || static_cast<int>(mup.size()) != N)
        throw std::invalid_argument("r_squared_spectrum_check: weights must have N parts");
    if (!is_partition(mu) || !is_partition(mup))
        throw std::invalid_argument("r_squared_spectrum_check: weights must be partitions");

    const auto product = make_product(N, field, {mu, mup});
    const BlockStructure blocks{product.block_sizes};
    const Matrix<Scalar> squared =
        block_word_operator(blocks, {{1, 1}, {1, 1}}, N, field);

    RSquaredReport report;
    const Rational base = -sl_casimir(mu) - sl_casimir(mup);
    for (const auto& eta : partitions_into(total(mu) + total(mup), N)) {
        const auto hw = highest_weight_vectors(product.ambient, eta, product.carrier);
        if (hw.dim() == 0) continue;
        RSquaredEntry entry{eta, hw.dim(), field.q_pow(base + sl_casimir(eta)), false};
        const auto [is_scalar, value, witness] = detail::as_scalar(restrict_operator(squared, hw));
        if (!is_scalar)
            report.failures.push_back("summand is not scalar: " + witness);
        else if (!(value == entry.expected))
            report.failures.push_back("summand scalar is " + to_string(value) + ", expected " +
                                      to_string(entry.expected));
        else
            entry.pass = true;
        report.pass = report.pass && entry.pass;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace gdaha
