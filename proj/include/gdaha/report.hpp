#pragma once

#include "gdaha/monodromy.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gdaha {

using nlohmann::json;

inline constexpr const char* kReportSchema = "gdaha-report/1";

// ---------------------------------------------------------------------------
// Exact data: specs, scalars, matrices, subspaces, parameters.

inline json spec_to_json(const RepSpec& s) {
    json legs = json::array();
    for (int k = 0; k < s.m(); ++k)
        legs.push_back({{"mu", s.mus[k]}, {"lambda", to_string(s.lambdas[k])}});
    return {{"N", s.N}, {"n", s.n}, {"legs", legs}};
}

inline RepSpec spec_from_json(const json& j) {
    RepSpec s;
    s.N = j.at("N").get<int>();
    s.n = j.at("n").get<int>();
    for (const auto& leg : j.at("legs")) {
        s.mus.push_back(leg.at("mu").get<Weight>());
        s.lambdas.push_back(parse_rational(leg.at("lambda").get<std::string>()));
    }
    validate_spec(s);
    return s;
}

inline json matrix_to_json(const Matrix<Scalar>& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix<Scalar> matrix_from_json(const json& j) {
    const int rows = static_cast<int>(j.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
    Matrix<Scalar> m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = parse_scalar(j.at(r).at(c).get<std::string>());
    return m;
}

inline json subspace_to_json(const Subspace<Scalar>& s) {
    return {{"ambient", s.ambient},
            {"dim", s.dim()},
            {"pivots", s.pivots},
            {"basis", matrix_to_json(basis_matrix(s))}};
}

inline json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline json cvector_to_json(const std::vector<Complex>& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back(complex_to_json(z));
    return out;
}

inline json cmatrix_to_json(const CMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json braid_word_to_json(const BraidWord& w) {
    return {{"strands", w.strands}, {"letters", w.letters}};
}

inline json params_to_json(const GraphParams& p) {
    json u = json::array();
    for (const auto& leg : p.u) {
        json row = json::array();
        for (const auto& e : leg)
            row.push_back({{"eta", e.eta},
                           {"exponent", to_string(e.exponent)},
                           {"value", to_string(e.value)}});
        u.push_back(std::move(row));
    }
    json prefactors = json::array();
    for (const auto& e : p.prefactor_exponents) prefactors.push_back(to_string(e));
    return {{"t", to_string(p.t)},
            {"t_exponent", to_string(p.t_exponent)},
            {"prefactor_exponents", prefactors},
            {"u", u}};
}

// ---------------------------------------------------------------------------
// Check reports.

inline json relation_report_to_json(const RelationReport& r) {
    return {{"pass", r.pass}, {"checks", r.checks}, {"failures", r.failures}};
}

inline json long_word_report_to_json(const LongWordReport& r) {
    json out = {{"pass", r.pass},
                {"vacuous", r.vacuous},
                {"dim", r.dim},
                {"expected", to_string(r.expected)}};
    if (!r.vacuous) out["scalar"] = to_string(r.scalar);
    if (!r.failure.empty()) out["failure"] = r.failure;
    return out;
}

inline json r_squared_report_to_json(const RSquaredReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"eta", e.eta},
                           {"multiplicity", e.multiplicity},
                           {"expected", to_string(e.expected)},
                           {"pass", e.pass}});
    return {{"pass", r.pass}, {"entries", entries}, {"failures", r.failures}};
}

inline json rgdaha_report_to_json(const RgdahaReport& r) {
    return {{"pass", r.pass},
            {"checks", r.checks},
            {"max_deviation", r.max_deviation},
            {"failures", r.failures}};
}

// ---------------------------------------------------------------------------
// Monodromy reports.

inline json loop_to_json(const Loop& loop, int samples_per_piece = 32) {
    json pieces = json::array();
    for (size_t p = 0; p < loop.pieces.size(); ++p) {
        json samples = json::array();
        for (int s = 0; s <= samples_per_piece; ++s) {
            const auto z = loop.at(static_cast<int>(p), static_cast<double>(s) / samples_per_piece);
            samples.push_back(cvector_to_json(z));
        }
        pieces.push_back(std::move(samples));
    }
    json out = {{"punctures", loop.punctures},
                {"basepoint", cvector_to_json(loop.basepoint)},
                {"pieces", pieces}};
    if (loop.exchange)
        out["exchange"] = json::array({loop.exchange->first, loop.exchange->second});
    return out;
}

inline json monodromy_report_to_json(const MonodromyReport& r) {
    json generators = json::array();
    for (const auto& g : r.generators)
        generators.push_back({{"name", g.name},
                              {"monodromy_matrix", cmatrix_to_json(g.monodromy_matrix)},
                              {"quantum_matrix", cmatrix_to_json(g.quantum_matrix)},
                              {"monodromy_charpoly", cvector_to_json(g.monodromy_charpoly)},
                              {"quantum_charpoly", cvector_to_json(g.quantum_charpoly)},
                              {"charpoly_delta", g.charpoly_delta},
                              {"eigenvalue_delta", g.eigenvalue_delta}});
    json traces = json::array();
    for (const auto& t : r.traces)
        traces.push_back({{"word", t.word},
                          {"monodromy", complex_to_json(t.monodromy)},
                          {"quantum", complex_to_json(t.quantum)},
                          {"delta", t.delta}});
    return {{"pass", r.pass},
            {"fiber_dim", r.fiber_dim},
            {"nu", r.nu},
            {"compare_tol", r.tol},
            {"max_charpoly_delta", r.max_charpoly_delta},
            {"max_trace_delta", r.max_trace_delta},
            {"max_eigenvalue_delta", r.max_eigenvalue_delta},
            {"total_steps", r.total_steps},
            {"generators", generators},
            {"word_traces", traces},
            {"failures", r.failures}};
}

}  // namespace gdaha
