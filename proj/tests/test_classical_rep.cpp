#include <catch2/catch_amalgamated.hpp>

#include "gdaha/classical_rep.hpp"
#include "gdaha/quantum_rep.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace gdaha;

namespace {

const double kNu = 1.0 / 3.141592653589793238462643;

Matrix<Rational> zero_like(const Matrix<Rational>& m) { return Matrix<Rational>(m.rows(), m.cols()); }

}  // namespace

TEST_CASE("classical tensor power realizes the matrix-unit action") {
    const auto a = classical_tensor_power(2, 1);
    REQUIRE(a.dim() == 2);
    REQUIRE(a.raising[0](0, 1) == Rational(1));
    REQUIRE(a.raising[0](0, 0) == Rational(0));
    REQUIRE(a.lowering[0](1, 0) == Rational(1));
    REQUIRE(a.basis_weight[0] == Weight{1, 0});
    REQUIRE(a.basis_weight[1] == Weight{0, 1});

    // [e_{i,i+1}, e_{i+1,i}] acts diagonally by the weight difference.
    for (int N : {2, 3})
        for (int d : {2, 3}) {
            const auto amb = classical_tensor_power(N, d);
            for (int i = 0; i < N - 1; ++i) {
                const auto comm = amb.raising[i] * amb.lowering[i] - amb.lowering[i] * amb.raising[i];
                for (int idx = 0; idx < amb.dim(); ++idx) {
                    const auto& w = amb.basis_weight[idx];
                    REQUIRE(comm(idx, idx) == Rational(w[i] - w[i + 1]));
                }
            }
        }
}

TEST_CASE("classical irreducible carriers have Weyl dimensions") {
    REQUIRE(classical_irrep(2, {2, 0}).carrier.dim() == 3);
    REQUIRE(classical_irrep(2, {1, 1}).carrier.dim() == 1);
    REQUIRE(classical_irrep(2, {2, 1}).carrier.dim() == 2);
    REQUIRE(classical_irrep(2, {0, 0}).carrier.dim() == 1);
    REQUIRE(classical_irrep(3, {1, 1, 0}).carrier.dim() == 3);
    REQUIRE(classical_irrep(3, {2, 0, 0}).carrier.dim() == 6);
    REQUIRE_THROWS_AS(classical_irrep(2, {0, 1}), std::invalid_argument);
}

TEST_CASE("classical invariant fiber dimensions match the quantum multiplicity space") {
    const std::vector<RepSpec> specs = {
        {2, 1, {{1, 0}}, {Rational(0)}},
        {2, 2, {{2, 0}}, {Rational(0)}},
        {2, 2, {{1, 0}, {1, 0}}, {Rational(0), Rational(0)}},
        {3, 2, {{1, 0, 0}}, {Rational(1, 2)}},
        {2, 3, {{1, 0}}, {Rational(0)}},
        {2, 2, {{1, 0}}, {Rational(0)}},  // vacuous on both sides
    };
    for (const auto& s : specs) {
        const auto classical = montarani_rep(s, kNu);
        const auto quantum = build_quantum_rep(s);
        INFO("spec with N=" << s.N << " n=" << s.n << " m=" << s.m());
        REQUIRE(classical.fiber_dim() == quantum.E.dim());
    }
}

TEST_CASE("strand flips square to the identity and commute with the diagonal action") {
    const auto a = classical_tensor_power(2, 3);
    const auto f = strand_flip(a, 2, 3);
    REQUIRE(f * f == Matrix<Rational>::identity(a.dim()));
    for (int i = 0; i < 1; ++i) {
        REQUIRE(f * a.raising[i] == a.raising[i] * f);
        REQUIRE(f * a.lowering[i] == a.lowering[i] * f);
    }
    REQUIRE_THROWS_AS(strand_flip(a, 1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(strand_flip(a, 0, 2), std::invalid_argument);
}

TEST_CASE("rational relation seeds satisfy exact matrix identities") {
    const std::vector<RepSpec> specs = {
        {2, 2, {{2, 0}}, {Rational(0)}},
        {2, 2, {{1, 0}, {1, 0}}, {Rational(0), Rational(0)}},
        {3, 2, {{1, 0, 0}}, {Rational(1, 2)}},
        {2, 3, {{1, 0}}, {Rational(0)}},
        {2, 3, {{2, 0}, {1, 1}}, {Rational(1, 3), Rational(-2)}},
    };
    for (const auto& s : specs) {
        const auto rep = montarani_rep(s, kNu);
        INFO("spec with N=" << s.N << " n=" << s.n << " m=" << s.m());
        const int n = s.n, m = s.m();
        const auto id = Matrix<Rational>::identity(rep.fiber_dim());

        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                const auto& sij = rep.flip[i - 1][j - 1];
                REQUIRE(sij * sij == id);
                for (int k = 1; k <= m; ++k) {
                    // Seed form of relation 1.
                    REQUIRE(sij * rep.omega_seed[i - 1][k - 1] ==
                            rep.omega_seed[j - 1][k - 1] * sij);
                    // Seed form of relation 5: [W_i, W_j] = -(W_i - W_j) s.
                    const auto& wi = rep.omega_seed[i - 1][k - 1];
                    const auto& wj = rep.omega_seed[j - 1][k - 1];
                    REQUIRE(wi * wj - wj * wi == zero_like(id) - (wi - wj) * sij);
                    // Seed form of relation 6.
                    for (int l = 1; l <= m; ++l) {
                        if (l == k) continue;
                        const auto& wl = rep.omega_seed[j - 1][l - 1];
                        REQUIRE(wi * wl == wl * wi);
                    }
                }
                for (int h = 1; h <= n; ++h) {
                    if (h == i || h == j) continue;
                    for (int k = 1; k <= m; ++k)
                        REQUIRE(sij * rep.omega_seed[h - 1][k - 1] ==
                                rep.omega_seed[h - 1][k - 1] * sij);
                }
            }

        // Seed form of relation 4: sum of seeds = -(sum of flips).
        for (int i = 1; i <= n; ++i) {
            Matrix<Rational> lhs = zero_like(id);
            for (int k = 1; k <= m; ++k) lhs = lhs + rep.omega_seed[i - 1][k - 1];
            Matrix<Rational> rhs = zero_like(id);
            for (int j = 1; j <= n; ++j)
                if (j != i) rhs = rhs - rep.flip[i - 1][j - 1];
            REQUIRE(lhs == rhs);
        }

        // Seed form of relation 3: the eigenvalue polynomial annihilates exactly.
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= m; ++k) {
                Matrix<Rational> p = id;
                for (const auto& g : rep.gamma_seed[k - 1])
                    p = p * (rep.omega_seed[i - 1][k - 1] - g * id);
                REQUIRE(p.is_zero_matrix());
            }
    }
}

TEST_CASE("classical eigenvalue seeds are half the quantum exponents") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> pick_n(1, 3), pick_parts(0, 2), pick_num(-3, 3),
        pick_den(1, 4), pick_rank(2, 4), pick_legs(1, 3);
    for (int trial = 0; trial < 15; ++trial) {
        RepSpec s;
        s.N = pick_rank(rng);
        s.n = pick_n(rng);
        const int m = pick_legs(rng);
        for (int k = 0; k < m; ++k) {
            Weight mu(s.N, 0);
            for (int i = 0; i < s.N; ++i) mu[i] = pick_parts(rng);
            std::sort(mu.begin(), mu.end(), std::greater<int>());
            s.mus.push_back(mu);
            s.lambdas.emplace_back(pick_num(rng), pick_den(rng));
        }
        const auto field = make_field(derive_root_order(s));
        const auto params = gdaha_parameters(s, field);

        // Only the parameter seeds are needed; build them without the fiber.
        const Rational c = central_slope(s);
        for (int k = 1; k <= m; ++k) {
            const Weight& mu = s.mus[k - 1];
            const auto etas = pieri(s.N, mu);
            for (size_t j = 0; j < etas.size(); ++j) {
                const Rational w = (gl_casimir(etas[j]) - gl_casimir(mu) - gl_casimir(eps(1, s.N))) / 2 +
                                   (s.lambdas[k - 1] - total(mu)) / s.N;
                const Rational seed = w + (Rational(s.N) - c) / m;
                REQUIRE(params.u[k - 1][j].exponent == 2 * seed);
            }
        }
    }
}

TEST_CASE("quantum eigenvalues specialize to the exponentials of the classical parameters") {
    const RepSpec s{2, 2, {{2, 0}}, {Rational(0)}};
    const auto rep = montarani_rep(s, kNu);
    const auto field = make_field(derive_root_order(s));
    const auto params = gdaha_parameters(s, field);
    const std::complex<double> q0 = std::exp(std::complex<double>(0.0, -3.141592653589793238462643 * kNu));
    for (size_t j = 0; j < params.u[0].size(); ++j) {
        const auto quantum = field.specialize(params.u[0][j].value, q0);
        const double g = rep.gamma(1, static_cast<int>(j + 1));
        const auto classical = std::exp(std::complex<double>(0.0, 2.0 * 3.141592653589793238462643 * g));
        REQUIRE(std::abs(quantum - classical) < 1e-12);
    }
}

TEST_CASE("numeric relation report passes for the acceptance specs") {
    const std::vector<RepSpec> specs = {
        {2, 1, {{1, 0}}, {Rational(0)}},
        {2, 2, {{2, 0}}, {Rational(0)}},
        {2, 2, {{1, 0}, {1, 0}}, {Rational(0), Rational(0)}},
        {3, 2, {{1, 0, 0}}, {Rational(1, 2)}},
    };
    for (const auto& s : specs) {
        const auto rep = montarani_rep(s, kNu);
        const auto report = check_rgdaha_relations(rep);
        INFO("spec with N=" << s.N << " n=" << s.n << " m=" << s.m());
        REQUIRE(report.pass);
        REQUIRE(report.max_deviation <= 1e-12);
        if (s.n >= 2) REQUIRE(report.checks > 0);
    }
}

TEST_CASE("relation checker flags corrupted classical operators") {
    const RepSpec s{2, 2, {{1, 0}, {1, 0}}, {Rational(0), Rational(0)}};
    auto rep = montarani_rep(s, kNu);
    rep.omega_seed[0][0] = rep.omega_seed[0][0] + Matrix<Rational>::identity(rep.fiber_dim());
    const auto report = check_rgdaha_relations(rep);
    REQUIRE_FALSE(report.pass);
    REQUIRE_FALSE(report.failures.empty());
}

TEST_CASE("zero coupling yields vanishing Y operators") {
    const RepSpec s{2, 2, {{2, 0}}, {Rational(0)}};
    const auto rep = montarani_rep(s, 0.0);
    for (int i = 1; i <= s.n; ++i)
        for (int k = 1; k <= s.m(); ++k) {
            const auto y = rep.Y(i, k);
            for (int r = 0; r < y.rows(); ++r)
                for (int c = 0; c < y.cols(); ++c) REQUIRE(std::abs(y(r, c)) == 0.0);
        }
    REQUIRE(check_rgdaha_relations(rep).pass);
}
