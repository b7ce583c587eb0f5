#include "gdaha/scalar_field.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

using namespace gdaha;

namespace {

Scalar random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), exp(-5, 5), num(-9, 9), den(1, 9);
    LaurentPoly p;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) p.add_term(exp(rng), Rational(num(rng), den(rng)));
    return Scalar(p);
}

Scalar random_scalar(std::mt19937& rng) {
    Scalar n = random_laurent(rng);
    Scalar d = random_laurent(rng);
    if (d.is_zero()) d = Scalar(1);
    return n / d;
}

}  // namespace

TEST_CASE("quantum integers match their balanced expansions", "[scalar]") {
    ScalarField F = make_field(1);
    CHECK(F.q_int(0).is_zero());
    CHECK(F.q_int(1).is_one());
    CHECK(F.q_int(2) == parse_scalar("v^-1 + v"));
    CHECK(F.q_int(-3) == parse_scalar("-v^-2 - 1 - v^2"));
    for (long long n = -6; n <= 6; ++n) CHECK(F.q_int(n) == -F.q_int(-n));
}

TEST_CASE("quantum integers satisfy the defining ratio", "[scalar]") {
    // Oracle: [n] * (q - q^{-1}) must equal q^n - q^{-n} as Laurent polynomials.
    for (int D : {1, 3}) {
        ScalarField F = make_field(D);
        const Scalar lhs_factor = F.q() - F.q().inverse();
        for (long long n = -6; n <= 6; ++n) {
            CHECK(F.q_int(n) * lhs_factor == F.q_pow(Rational(n)) - F.q_pow(Rational(-n)));
        }
    }
}

TEST_CASE("quantum factorial at 3 has the frozen expansion", "[scalar]") {
    ScalarField F = make_field(1);
    CHECK(F.q_factorial(0).is_one());
    CHECK(F.q_factorial(3) == parse_scalar("v^-3 + 2*v^-1 + 2*v + v^3"));
}

TEST_CASE("quantum binomials are Laurent and match frozen values", "[scalar]") {
    ScalarField F = make_field(1);
    CHECK(F.q_binom(4, 2) == parse_scalar("v^-4 + v^-2 + 2 + v^2 + v^4"));
    for (long long a = 0; a <= 10; ++a) {
        for (long long n = 0; n <= a; ++n) {
            const Scalar b = F.q_binom(a, n);
            CHECK(b.is_laurent());
            CHECK(b == F.q_binom(a, a - n));
            // Exactness oracle: the denominator product divides back out.
            Scalar lhs = b * F.q_factorial(n);
            Scalar rhs(1);
            for (long long t = 0; t < n; ++t) rhs *= F.q_int(a - t);
            CHECK(lhs == rhs);
        }
    }
    CHECK(F.q_binom(-1, 1) == Scalar(-1));
    CHECK(F.q_binom(3, 0).is_one());
}

TEST_CASE("canonical form cancels common factors and v powers", "[scalar]") {
    const LaurentPoly v = LaurentPoly::monomial(1, 1);
    const LaurentPoly one{Rational(1)};
    // (v^2 - 1)/(v^3 - v) == v^{-1}.
    Scalar a = Scalar::fraction(v * v - one, v * v * v - v);
    CHECK(a == Scalar(LaurentPoly::monomial(1, -1)));
    CHECK(a.is_laurent());
    // (v + 1)/(2v^2 + 2v) == (1/2) v^{-1}: monic normalization moves the 2 up.
    Scalar b = Scalar::fraction(v + one, (v * v + v).scaled(2));
    CHECK(b == Scalar(LaurentPoly::monomial(Rational(1, 2), -1)));
    // v/(v^2 + 1) is already reduced; denominator is monic with constant term.
    Scalar c = Scalar::fraction(v, v * v + one);
    CHECK(c.num() == v);
    CHECK(c.den() == v * v + one);
    CHECK((c - c).is_zero());
    CHECK((c * c.inverse()).is_one());
    CHECK_THROWS_AS(Scalar::fraction(one, LaurentPoly()), std::domain_error);
    CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
}

TEST_CASE("field axioms hold exactly on random elements", "[scalar][property]") {
    std::mt19937 rng(20260816);
    for (int trial = 0; trial < 60; ++trial) {
        const Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
        CHECK((x - x).is_zero());
    }
}

TEST_CASE("serialization round-trips and rejects malformed input", "[scalar][io]") {
    CHECK(to_string(parse_scalar("v^-3 + 2*v^2")) == "v^-3 + 2*v^2");
    CHECK(to_string(Scalar()) == "0");
    CHECK(parse_scalar("0").is_zero());
    // Printing is canonical: terms in ascending exponent order.
    CHECK(to_string(parse_scalar("-1/3*v + 4")) == "4 - 1/3*v");
    const Scalar f = Scalar::fraction(LaurentPoly::monomial(1, 1),
                                      LaurentPoly::monomial(1, 2) + LaurentPoly(Rational(1)));
    CHECK(to_string(f) == "(v)/(1 + v^2)");
    CHECK(parse_scalar(to_string(f)) == f);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Scalar x = random_scalar(rng);
        CHECK(parse_scalar(to_string(x)) == x);
    }

    for (const char* bad : {"v^", "1//2", "(v", "v + ", "2v", "", "q", "v^2^3", "(v)/(0)"}) {
        CHECK_THROWS_AS(parse_scalar(bad), std::exception);
    }
}

TEST_CASE("specialization evaluates at the principal root", "[scalar]") {
    using cplx = std::complex<double>;
    ScalarField F1 = make_field(1);
    CHECK(std::abs(F1.specialize(F1.q_int(2), cplx(2.0, 0.0)) - cplx(2.5, 0.0)) < 1e-14);
    ScalarField F2 = make_field(2);
    CHECK(std::abs(F2.specialize(F2.q(), cplx(4.0, 0.0)) - cplx(4.0, 0.0)) < 1e-12);
    CHECK(std::abs(F2.specialize(F2.q_pow(Rational(1, 2)), cplx(4.0, 0.0)) - cplx(2.0, 0.0)) < 1e-12);
    // Pole detection: 1/(v - 1) at v = 1.
    const Scalar pole =
        Scalar::fraction(LaurentPoly(Rational(1)), LaurentPoly::monomial(1, 1) - LaurentPoly(Rational(1)));
    CHECK_THROWS_AS(F1.specialize(pole, cplx(1.0, 0.0)), PoleError);
    CHECK_THROWS_AS(F1.specialize(F1.q(), cplx(0.0, 0.0)), std::domain_error);
}

TEST_CASE("specialization is a homomorphism", "[scalar][property]") {
    using cplx = std::complex<double>;
    ScalarField F = make_field(3);
    const cplx q0(1.7, 0.3);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const Scalar x = random_laurent(rng), y = random_laurent(rng);
        const cplx sx = F.specialize(x, q0), sy = F.specialize(y, q0);
        CHECK(std::abs(F.specialize(x + y, q0) - (sx + sy)) < 1e-9 * (1.0 + std::abs(sx) + std::abs(sy)));
        CHECK(std::abs(F.specialize(x * y, q0) - sx * sy) < 1e-9 * (1.0 + std::abs(sx * sy)));
    }
}

TEST_CASE("root order gates rational powers of q", "[scalar]") {
    CHECK_THROWS_AS(make_field(0), std::invalid_argument);
    ScalarField F = make_field(2);
    CHECK(F.q_representable(Rational(3, 2)));
    CHECK(F.q_pow(Rational(3, 2)) == Scalar(LaurentPoly::monomial(1, 3)));
    CHECK(!F.q_representable(Rational(1, 3)));
    CHECK_THROWS_AS(F.q_pow(Rational(1, 3)), std::domain_error);
    ScalarField F6 = make_field(6);
    CHECK(F6.q_pow(Rational(-8, 3)) == Scalar(LaurentPoly::monomial(1, -16)));
}
