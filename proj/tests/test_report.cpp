#include "gdaha/report.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gdaha;

namespace {

const RepSpec kTwoLegs{2, 2, {{1, 0}, {1, 0}}, {Rational(0), Rational(0)}};
const RepSpec kFractional{3, 2, {{1, 0, 0}}, {Rational(1, 2)}};

}  // namespace

TEST_CASE("spec serialization round-trips, including fractional twists") {
    for (const RepSpec& spec : {kTwoLegs, kFractional}) {
        const json j = spec_to_json(spec);
        const RepSpec back = spec_from_json(j);
        REQUIRE(back.N == spec.N);
        REQUIRE(back.n == spec.n);
        REQUIRE(back.mus == spec.mus);
        REQUIRE(back.lambdas == spec.lambdas);
    }
}

TEST_CASE("spec parsing validates its input") {
    json bad = spec_to_json(kTwoLegs);
    bad["legs"][0]["mu"] = std::vector<int>{0, 1};  // not weakly decreasing
    REQUIRE_THROWS_AS(spec_from_json(bad), std::invalid_argument);
}

TEST_CASE("exact matrices round-trip through scalar strings") {
    const QuantumRep rep = build_quantum_rep(kTwoLegs);
    for (const auto& mat : {rep.T[0], rep.U[0], rep.U[1]}) {
        const Matrix<Scalar> back = matrix_from_json(matrix_to_json(mat));
        REQUIRE(back == mat);
    }
}

TEST_CASE("parameter and relation reports serialize with exact values") {
    const QuantumRep rep = build_quantum_rep(kTwoLegs);
    const json params = params_to_json(rep.params);
    REQUIRE(params.at("t").get<std::string>() == to_string(rep.params.t));
    REQUIRE(params.at("u").size() == 2);
    // Exponent strings must re-parse to the original rationals.
    for (size_t k = 0; k < 2; ++k)
        for (size_t j = 0; j < params.at("u").at(k).size(); ++j) {
            const auto& entry = params.at("u").at(k).at(j);
            REQUIRE(parse_rational(entry.at("exponent").get<std::string>()) ==
                    rep.params.u[k][j].exponent);
        }

    const json relations = relation_report_to_json(check_gdaha_relations(rep));
    REQUIRE(relations.at("pass").get<bool>());
    REQUIRE(relations.at("checks").size() > 0);
}

TEST_CASE("loop serialization samples closed curves around the right data") {
    MonodromyConfig cfg;
    const json j = loop_to_json(loop_puncture(1, 2, 2, cfg));
    REQUIRE(j.at("punctures").size() == 2);
    REQUIRE(j.at("basepoint").size() == 2);
    REQUIRE(j.at("pieces").size() == 7);
    // Each sampled piece starts where the previous one ended, in every strand.
    const auto& pieces = j.at("pieces");
    for (size_t p = 1; p < pieces.size(); ++p) {
        const auto& prev = pieces.at(p - 1).back();
        const auto& next = pieces.at(p).front();
        REQUIRE(prev.size() == next.size());
        for (size_t pt = 0; pt < prev.size(); ++pt)
            for (int part = 0; part < 2; ++part)
                REQUIRE(std::abs(prev.at(pt).at(part).get<double>() -
                                 next.at(pt).at(part).get<double>()) < 1e-12);
    }
    const json ex = loop_to_json(loop_exchange(1, 2, 2, cfg));
    REQUIRE(ex.at("exchange").at(0).get<int>() == 1);
    REQUIRE(ex.at("exchange").at(1).get<int>() == 2);
}

TEST_CASE("monodromy reports carry matrices, char polys, and word traces") {
    MonodromyConfig cfg;
    cfg.tol = 1e-8;
    const MonodromyReport report =
        compare_reps(RepSpec{2, 2, {{2, 0}}, {Rational(0)}}, 1.0 / 3.0, cfg, 1e-4);
    const json j = monodromy_report_to_json(report);
    REQUIRE(j.at("pass").get<bool>() == report.pass);
    REQUIRE(j.at("generators").size() == 2);
    for (const auto& gen : j.at("generators")) {
        REQUIRE(gen.contains("monodromy_matrix"));
        REQUIRE(gen.contains("quantum_matrix"));
        REQUIRE(gen.at("monodromy_charpoly").size() ==
                static_cast<size_t>(report.fiber_dim) + 1);
        REQUIRE(gen.at("charpoly_delta").get<double>() >= 0.0);
    }
    REQUIRE(j.at("word_traces").size() == report.traces.size());
    REQUIRE(j.at("max_trace_delta").get<double>() == report.max_trace_delta);
    // The serialized report is valid JSON end to end.
    REQUIRE(json::parse(j.dump()) == j);
}
