#include "gdaha/weights.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gdaha;

TEST_CASE("pairing normalization anchor", "[weights]") {
    for (int N = 2; N <= 5; ++N) {
        const Weight e1 = eps(1, N);
        CHECK(sl_pairing(e1, add(e1, two_rho(N))) == Rational(N) - Rational(1, N));
        CHECK(sl_casimir(e1) == Rational(N) - Rational(1, N));
    }
}

TEST_CASE("pairing vanishes on the determinant direction and is symmetric", "[weights]") {
    const Weight ones = {1, 1, 1};
    const Weight w = {3, 1, 0};
    CHECK(sl_pairing(ones, w) == 0);
    CHECK(sl_pairing(w, ones) == 0);
    CHECK(sl_pairing(w, add(w, ones)) == sl_pairing(w, w));
    // Simple roots have square length 2.
    for (int N = 2; N <= 4; ++N) {
        for (int i = 1; i < N; ++i) {
            Weight alpha(N, 0);
            alpha[i - 1] = 1;
            alpha[i] = -1;
            CHECK(sl_pairing(alpha, alpha) == 2);
        }
    }
}

TEST_CASE("frozen Casimir values", "[weights]") {
    CHECK(sl_casimir({2, 0}) == 4);
    CHECK(sl_casimir({1, 1}) == 0);
    CHECK(sl_casimir({3, 0}) == Rational(15, 2));
    CHECK(sl_casimir({2, 1}) == Rational(3, 2));
    CHECK(sl_casimir({2, 0, 0}) == Rational(20, 3));
    CHECK(sl_casimir({1, 1, 0}) == Rational(8, 3));
    CHECK(gl_casimir({2, 0}) == 6);
    CHECK(gl_casimir({3, 0}) == 12);
    CHECK(gl_casimir({2, 1}) == 6);
    CHECK(gl_casimir({1, 0}) == 2);
    // sl value equals gl value minus |mu|^2/N.
    for (const Weight& mu : std::vector<Weight>{{4, 2, 1}, {3, 3, 0}, {5, 0}, {2, 2, 2}}) {
        const int N = static_cast<int>(mu.size());
        CHECK(sl_casimir(mu) == gl_casimir(mu) - Rational(total(mu)) * total(mu) / N);
    }
}

TEST_CASE("box additions keep dominance and decreasing lex order", "[weights]") {
    CHECK(pieri(2, {1, 0}) == std::vector<Weight>{{2, 0}, {1, 1}});
    CHECK(pieri(2, {2, 2}) == std::vector<Weight>{{3, 2}});
    CHECK(pieri(3, {1, 1, 0}) == std::vector<Weight>{{2, 1, 0}, {1, 1, 1}});
    CHECK(pieri(3, {0, 0, 0}) == std::vector<Weight>{{1, 0, 0}});
    const auto out = pieri(4, {3, 1, 1, 0});
    CHECK(out == std::vector<Weight>{{4, 1, 1, 0}, {3, 2, 1, 0}, {3, 1, 1, 1}});
    for (const auto& w : out) CHECK(is_partition(w));
    CHECK_THROWS_AS(pieri(2, {0, 1}), std::invalid_argument);
}

TEST_CASE("Weyl dimension formula on known modules", "[weights]") {
    CHECK(weyl_dim({1, 0}) == 2);
    CHECK(weyl_dim({2, 0}) == 3);
    CHECK(weyl_dim({1, 1}) == 1);
    CHECK(weyl_dim({1, 0, 0}) == 3);
    CHECK(weyl_dim({1, 1, 0}) == 3);
    CHECK(weyl_dim({2, 0, 0}) == 6);
    CHECK(weyl_dim({2, 1, 0}) == 8);
    CHECK(weyl_dim({1, 1, 0, 0}) == 6);
    CHECK(weyl_dim({0, 0, 0}) == 1);
}

TEST_CASE("weight predicates", "[weights]") {
    CHECK(is_dominant({3, 1, 1}));
    CHECK(!is_dominant({1, 2}));
    CHECK(is_partition({2, 0}));
    CHECK(!is_partition({1, -1}));
    CHECK(sl_equal({2, 1, 1}, {1, 0, 0}));
    CHECK(!sl_equal({2, 1, 1}, {1, 0, 1}));
    CHECK(total({3, 1, 0}) == 4);
}

TEST_CASE("partitions enumerate in lexicographically decreasing order", "[weights]") {
    const auto p = partitions_into(4, 2);
    REQUIRE(p == std::vector<Weight>{{4, 0}, {3, 1}, {2, 2}});
    const auto q = partitions_into(3, 3);
    REQUIRE(q == std::vector<Weight>{{3, 0, 0}, {2, 1, 0}, {1, 1, 1}});
    REQUIRE(partitions_into(0, 2) == std::vector<Weight>{{0, 0}});
    REQUIRE(partitions_into(5, 1) == std::vector<Weight>{{5}});
    for (const auto& w : partitions_into(6, 3)) REQUIRE(is_partition(w));
    REQUIRE(partitions_into(6, 3).size() == 7);
    REQUIRE_THROWS_AS(partitions_into(-1, 2), std::invalid_argument);
}
