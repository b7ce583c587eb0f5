#pragma once

#include "gdaha/classical_rep.hpp"
#include "gdaha/numeric.hpp"
#include "gdaha/quantum_rep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gdaha {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Geometry and integration constants. The loop shapes are fixed by the
/// calibration identity (transport around one puncture with no exchanges
/// gives the identity through the long relation); the constants here place
/// the paths safely away from punctures and diagonals.
struct MonodromyConfig {
    double exchange_radius = 0.5;  // half-circle radius for exchange loops
    double depth = 0.5;            // descent below the real axis for puncture loops
    double puncture_radius = 0.3;  // circle radius around the target puncture
    double clearance = 0.2;        // minimum distance to punctures and diagonals
    double tol = 1e-10;            // integrator relative step tolerance
    int clearance_samples = 256;   // samples per piece for the clearance check
    int jobs = 1;                  // concurrent generator transports in comparisons
};

/// One coordinate over one smooth piece: constant, straight line, circular
/// arc, or any of those plus a smooth interior bump that vanishes at the
/// endpoints (used for homotopy-stability tests).
struct Curve {
    enum class Kind { Constant, Line, Arc };
    Kind kind = Kind::Constant;
    Complex a{0.0, 0.0}, b{0.0, 0.0};  // Constant: a; Line: from a to b
    Complex center{0.0, 0.0};          // Arc data
    double radius = 0.0, theta0 = 0.0, theta1 = 0.0;
    Complex wobble{0.0, 0.0};  // amplitude of the interior bump

    Complex at(double s) const {
        Complex z;
        switch (kind) {
            case Kind::Constant: z = a; break;
            case Kind::Line: z = a + s * (b - a); break;
            case Kind::Arc: {
                const double th = theta0 + s * (theta1 - theta0);
                z = center + radius * Complex(std::cos(th), std::sin(th));
                break;
            }
        }
        return z + wobble * std::sin(kPi * s);
    }
    Complex deriv(double s) const {
        Complex dz;
        switch (kind) {
            case Kind::Constant: dz = Complex(0.0, 0.0); break;
            case Kind::Line: dz = b - a; break;
            case Kind::Arc: {
                const double th = theta0 + s * (theta1 - theta0);
                dz = radius * (theta1 - theta0) * Complex(-std::sin(th), std::cos(th));
                break;
            }
        }
        return dz + wobble * kPi * std::cos(kPi * s);
    }
};

struct LoopPiece {
    std::vector<Curve> coords;  // one per moving-point coordinate
};

struct Loop {
    std::vector<LoopPiece> pieces;
    std::vector<double> punctures;
    std::vector<Complex> basepoint;
    std::optional<std::pair<int, int>> exchange;  // 1-based coordinates swapped at the end

    std::vector<Complex> at(int piece, double s) const {
        std::vector<Complex> z(pieces[piece].coords.size());
        for (size_t i = 0; i < z.size(); ++i) z[i] = pieces[piece].coords[i].at(s);
        return z;
    }
};

inline std::vector<double> puncture_positions(int m) {
    std::vector<double> alpha(m);
    for (int k = 1; k <= m; ++k) alpha[k - 1] = static_cast<double>(-m - 1 + k);
    return alpha;
}

inline std::vector<Complex> base_configuration(int n) {
    std::vector<Complex> z(n);
    for (int i = 1; i <= n; ++i) z[i - 1] = Complex(static_cast<double>(i), 0.0);
    return z;
}

/// Minimum distance from any moving point to punctures and between distinct
/// points, sampled along every piece. Throws when the clearance is violated.
inline void check_clearance(const Loop& loop, const MonodromyConfig& cfg) {
    for (size_t piece = 0; piece < loop.pieces.size(); ++piece)
        for (int step = 0; step <= cfg.clearance_samples; ++step) {
            const double s = static_cast<double>(step) / cfg.clearance_samples;
            const auto z = loop.at(static_cast<int>(piece), s);
            for (size_t i = 0; i < z.size(); ++i) {
                for (double alpha : loop.punctures)
                    if (std::abs(z[i] - alpha) < cfg.clearance)
                        throw std::runtime_error("loop violates clearance near a puncture");
                for (size_t j = i + 1; j < z.size(); ++j)
                    if (std::abs(z[i] - z[j]) < cfg.clearance)
                        throw std::runtime_error("loop violates clearance near a diagonal");
            }
        }
}

/// Counterclockwise exchange of z_i and z_{i+1} along the circle through both.
inline Loop loop_exchange(int i, int n, int m, const MonodromyConfig& cfg) {
    if (i < 1 || i >= n) throw std::invalid_argument("loop_exchange: index out of range");
    Loop loop;
    loop.punctures = puncture_positions(m);
    loop.basepoint = base_configuration(n);
    loop.exchange = std::make_pair(i, i + 1);

    const Complex center(i + 0.5, 0.0);
    LoopPiece piece;
    piece.coords.assign(n, Curve{});
    for (int j = 1; j <= n; ++j) {
        Curve& c = piece.coords[j - 1];
        if (j == i) {
            c.kind = Curve::Kind::Arc;
            c.center = center;
            c.radius = cfg.exchange_radius;
            c.theta0 = kPi;       // starts at z_i, passes below,
            c.theta1 = 2 * kPi;   // ends at z_{i+1}
        } else if (j == i + 1) {
            c.kind = Curve::Kind::Arc;
            c.center = center;
            c.radius = cfg.exchange_radius;
            c.theta0 = 0.0;  // starts at z_{i+1}, passes above, ends at z_i
            c.theta1 = kPi;
        } else {
            c.kind = Curve::Kind::Constant;
            c.a = loop.basepoint[j - 1];
        }
    }
    loop.pieces.push_back(std::move(piece));
    check_clearance(loop, cfg);
    return loop;
}

/// z_1 dives below the real axis, travels left underneath any punctures
/// between it and the target, circles the target puncture once
/// counterclockwise, and retraces the outbound tail. Because the tail is
/// retraced exactly, the winding of z_1 - alpha_j is 0 for every other
/// puncture and the full circle contributes winding +1 around alpha_k; the
/// result is the standard based generator, conjugated only by the tail
/// transport (which the retrace composes away up to the enclosed circle).
inline Loop loop_puncture(int k, int n, int m, const MonodromyConfig& cfg) {
    if (k < 1 || k > m) throw std::invalid_argument("loop_puncture: index out of range");
    Loop loop;
    loop.punctures = puncture_positions(m);
    loop.basepoint = base_configuration(n);

    const Complex start(1.0, 0.0);
    const double alpha = loop.punctures[k - 1];
    const Complex down(0.0, -cfg.depth);

    const auto add_line = [&](Complex from, Complex to) {
        LoopPiece piece;
        piece.coords.assign(n, Curve{});
        for (int j = 2; j <= n; ++j) {
            piece.coords[j - 1].kind = Curve::Kind::Constant;
            piece.coords[j - 1].a = loop.basepoint[j - 1];
        }
        piece.coords[0].kind = Curve::Kind::Line;
        piece.coords[0].a = from;
        piece.coords[0].b = to;
        loop.pieces.push_back(std::move(piece));
    };

    add_line(start, start + down);
    add_line(start + down, Complex(alpha, 0.0) + down);
    add_line(Complex(alpha, 0.0) + down, Complex(alpha, -cfg.puncture_radius));
    {
        LoopPiece piece;
        piece.coords.assign(n, Curve{});
        for (int j = 2; j <= n; ++j) {
            piece.coords[j - 1].kind = Curve::Kind::Constant;
            piece.coords[j - 1].a = loop.basepoint[j - 1];
        }
        Curve& c = piece.coords[0];
        c.kind = Curve::Kind::Arc;
        c.center = Complex(alpha, 0.0);
        c.radius = cfg.puncture_radius;
        c.theta0 = -kPi / 2;           // enter at the bottom of the circle,
        c.theta1 = -kPi / 2 + 2 * kPi; // one full counterclockwise turn
        loop.pieces.push_back(std::move(piece));
    }
    add_line(Complex(alpha, -cfg.puncture_radius), Complex(alpha, 0.0) + down);
    add_line(Complex(alpha, 0.0) + down, start + down);
    add_line(start + down, start);

    check_clearance(loop, cfg);
    return loop;
}

/// Smooth interior displacement of every moving coordinate, endpoints fixed,
/// for homotopy-stability tests. The loop stays closed and, after the
/// clearance re-check, homotopic to the original.
inline Loop perturb_loop(const Loop& loop, double magnitude, unsigned seed,
                         const MonodromyConfig& cfg) {
    Loop out = loop;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    for (auto& piece : out.pieces)
        for (auto& curve : piece.coords) {
            if (curve.kind == Curve::Kind::Constant) continue;
            const double th = angle(rng);
            curve.wobble = magnitude * Complex(std::cos(th), std::sin(th));
        }
    check_clearance(out, cfg);
    return out;
}

/// Time-reversal of a loop; transport along the result inverts transport
/// along the original. Exchange loops are rejected: their monodromy picks up
/// the fiber transposition on the far side under reversal, so their inverses
/// are taken algebraically instead.
inline Loop reverse_loop(const Loop& loop) {
    if (loop.exchange)
        throw std::invalid_argument("reverse_loop: invert exchange monodromy algebraically");
    Loop out = loop;
    out.pieces.clear();
    for (auto it = loop.pieces.rbegin(); it != loop.pieces.rend(); ++it) {
        LoopPiece piece = *it;
        for (auto& c : piece.coords) {
            switch (c.kind) {
                case Curve::Kind::Constant: break;
                case Curve::Kind::Line: std::swap(c.a, c.b); break;
                case Curve::Kind::Arc: std::swap(c.theta0, c.theta1); break;
            }
        }
        out.pieces.push_back(std::move(piece));
    }
    return out;
}

struct TransportResult {
    CMatrix matrix;
    double error_estimate = 0.0;
    long accepted_steps = 0;
    long rejected_steps = 0;
};

namespace detail {

/// Realized generator matrices of one fiber, shared by coefficient
/// evaluations:  A_i(z) = sum_k Y_{i,k}/(z_i - alpha_k)
///                        - nu sum_{j != i} s_{ij}/(z_i - z_j).
struct ConnectionTables {
    int n = 0, m = 0, dim = 0;
    Complex nu;
    std::vector<double> punctures;
    std::vector<std::vector<CMatrix>> y, s;

    static ConnectionTables make(const ClassicalRep& rep) {
        ConnectionTables t;
        t.n = rep.spec.n;
        t.m = rep.spec.m();
        t.dim = rep.fiber_dim();
        t.nu = Complex(rep.nu, 0.0);
        t.punctures = puncture_positions(t.m);
        t.y.resize(t.n);
        t.s.resize(t.n);
        for (int i = 1; i <= t.n; ++i) {
            for (int k = 1; k <= t.m; ++k) t.y[i - 1].push_back(rep.Y(i, k));
            for (int j = 1; j <= t.n; ++j)
                t.s[i - 1].push_back(i == j ? CMatrix(t.dim, t.dim) : rep.s(i, j));
        }
        return t;
    }

    CMatrix coefficient(const std::vector<Complex>& z, int i) const {
        CMatrix a(dim, dim);
        for (int k = 0; k < m; ++k) a = a + (Complex(1.0) / (z[i] - punctures[k])) * y[i][k];
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            a = a - (nu / (z[i] - z[j])) * s[i][j];
        }
        return a;
    }
};

}  // namespace detail

/// Connection coefficients A_1(z), ..., A_n(z) at a configuration z; the
/// transport equation along a path z(t) reads
///   Phi'(t) = (sum_i A_i(z(t)) z_i'(t)) Phi(t).
/// Throws when z sits closer than `clearance` to a puncture or a diagonal.
inline std::vector<CMatrix> ego_coefficients(const ClassicalRep& rep,
                                             const std::vector<Complex>& z,
                                             double clearance = 0.0) {
    if (static_cast<int>(z.size()) != rep.spec.n)
        throw std::invalid_argument("ego_coefficients: configuration has wrong size");
    const auto tables = detail::ConnectionTables::make(rep);
    for (size_t i = 0; i < z.size(); ++i) {
        for (double alpha : tables.punctures)
            if (std::abs(z[i] - alpha) <= clearance)
                throw std::runtime_error("ego_coefficients: configuration too close to a puncture");
        for (size_t j = i + 1; j < z.size(); ++j)
            if (std::abs(z[i] - z[j]) <= clearance)
                throw std::runtime_error("ego_coefficients: configuration too close to a diagonal");
    }
    std::vector<CMatrix> out;
    for (int i = 0; i < tables.n; ++i) out.push_back(tables.coefficient(z, i));
    return out;
}

namespace detail {

/// Dormand-Prince 5(4) embedded pair on Phi' = A(s) Phi over one piece.
struct Dopri5 {
    static constexpr double c[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
    static constexpr double a2[1] = {1.0 / 5};
    static constexpr double a3[2] = {3.0 / 40, 9.0 / 40};
    static constexpr double a4[3] = {44.0 / 45, -56.0 / 15, 32.0 / 9};
    static constexpr double a5[4] = {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729};
    static constexpr double a6[5] = {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176,
                                     -5103.0 / 18656};
    static constexpr double b5[7] = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784,
                                     11.0 / 84, 0.0};
    static constexpr double b4[7] = {5179.0 / 57600, 0.0,       7571.0 / 16695, 393.0 / 640,
                                     -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};
};

}  // namespace detail

/// Transport along the loop for the flat first-order system
///   Phi'(t) = (sum_i A_i(z(t)) z_i'(t)) Phi(t),
///   A_i(z) = sum_k Y_{i,k} / (z_i - alpha_k) - nu sum_{j != i} s_{ij} / (z_i - z_j).
/// For exchange loops the result is composed with the fiber transposition so
/// it acts on the fiber at the basepoint.
inline TransportResult parallel_transport(const Loop& loop, const ClassicalRep& rep,
                                          const MonodromyConfig& cfg) {
    const int dim = rep.fiber_dim();
    const int n = rep.spec.n;
    if (static_cast<int>(loop.basepoint.size()) != n)
        throw std::invalid_argument("parallel_transport: loop and fiber have different strand counts");

    const auto tables = detail::ConnectionTables::make(rep);
    if (loop.punctures != tables.punctures)
        throw std::invalid_argument("parallel_transport: loop punctures disagree with the fiber");
    TransportResult result{CMatrix::identity(dim), 0.0, 0, 0};

    for (size_t piece = 0; piece < loop.pieces.size(); ++piece) {
        const auto& curves = loop.pieces[piece].coords;
        const auto rhs = [&](double t, const CMatrix& phi) {
            std::vector<Complex> z(n), dz(n);
            for (int i = 0; i < n; ++i) {
                z[i] = curves[i].at(t);
                dz[i] = curves[i].deriv(t);
            }
            CMatrix a(dim, dim);
            for (int i = 0; i < n; ++i) {
                if (std::abs(dz[i]) == 0.0) continue;
                a = a + dz[i] * tables.coefficient(z, i);
            }
            return a * phi;
        };

        double t = 0.0, h = 0.05;
        CMatrix phi = result.matrix;
        while (t < 1.0) {
            h = std::min(h, 1.0 - t);
            const CMatrix k1 = rhs(t, phi);
            using D = detail::Dopri5;
            const CMatrix k2 = rhs(t + D::c[1] * h, phi + (h * D::a2[0]) * k1);
            const CMatrix k3 = rhs(t + D::c[2] * h, phi + (h * D::a3[0]) * k1 + (h * D::a3[1]) * k2);
            const CMatrix k4 =
                rhs(t + D::c[3] * h,
                    phi + (h * D::a4[0]) * k1 + (h * D::a4[1]) * k2 + (h * D::a4[2]) * k3);
            const CMatrix k5 = rhs(t + D::c[4] * h, phi + (h * D::a5[0]) * k1 + (h * D::a5[1]) * k2 +
                                                        (h * D::a5[2]) * k3 + (h * D::a5[3]) * k4);
            const CMatrix k6 =
                rhs(t + h, phi + (h * D::a6[0]) * k1 + (h * D::a6[1]) * k2 + (h * D::a6[2]) * k3 +
                               (h * D::a6[3]) * k4 + (h * D::a6[4]) * k5);
            const CMatrix y5 = phi + (h * D::b5[0]) * k1 + (h * D::b5[2]) * k3 + (h * D::b5[3]) * k4 +
                               (h * D::b5[4]) * k5 + (h * D::b5[5]) * k6;
            const CMatrix k7 = rhs(t + h, y5);
            const CMatrix y4 = phi + (h * D::b4[0]) * k1 + (h * D::b4[2]) * k3 + (h * D::b4[3]) * k4 +
                               (h * D::b4[4]) * k5 + (h * D::b4[5]) * k6 + (h * D::b4[6]) * k7;

            const double scale = std::max(1.0, max_abs(phi));
            const double err = max_abs(y5 - y4);
            if (err <= cfg.tol * scale) {
                t += h;
                phi = y5;
                result.error_estimate += err;
                ++result.accepted_steps;
            } else {
                ++result.rejected_steps;
            }
            const double grow = err > 0.0 ? 0.9 * std::pow(cfg.tol * scale / err, 0.2) : 5.0;
            h *= std::clamp(grow, 0.2, 5.0);
            if (h < 1e-12) throw std::runtime_error("parallel_transport: step size underflow");
            if (result.accepted_steps + result.rejected_steps > 2'000'000)
                throw std::runtime_error("parallel_transport: step budget exhausted");
        }
        result.matrix = phi;
    }

    if (loop.exchange) {
        const auto [i, j] = *loop.exchange;
        result.matrix = rep.s(i, j) * result.matrix;
    }
    return result;
}

/// Letters for word-trace comparison: +i / -i for T_i^{±1} (1 <= i <= n-1),
/// +(n-1+k) / -(n-1+k) for U_k^{±1}.
struct GeneratorSet {
    std::vector<CMatrix> mats;     // indexed by letter-1
    std::vector<CMatrix> inverses;

    const CMatrix& letter(int l) const { return l > 0 ? mats[l - 1] : inverses[-l - 1]; }
    CMatrix word(const std::vector<int>& w) const {
        CMatrix acc = CMatrix::identity(mats.empty() ? 0 : mats[0].rows());
        for (int l : w) acc = acc * letter(l);
        return acc;
    }
};

struct GeneratorComparison {
    std::string name;
    CMatrix monodromy_matrix, quantum_matrix;
    std::vector<Complex> monodromy_charpoly, quantum_charpoly;
    double charpoly_delta = 0.0;
    double eigenvalue_delta = 0.0;  // roots matched against the predicted eigenvalue set
};

struct WordTrace {
    std::vector<int> word;
    Complex monodromy, quantum;
    double delta = 0.0;
};

struct MonodromyReport {
    bool pass = true;
    int fiber_dim = 0;
    double nu = 0.0;
    double tol = 0.0;
    double max_charpoly_delta = 0.0;
    double max_trace_delta = 0.0;
    double max_eigenvalue_delta = 0.0;
    long total_steps = 0;
    std::vector<GeneratorComparison> generators;
    std::vector<WordTrace> traces;
    std::vector<std::string> failures;
};

inline std::vector<std::vector<int>> all_words(int alphabet, int max_len) {
    std::vector<std::vector<int>> words;
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (int l = 1; l <= alphabet; ++l)
                for (int sign : {1, -1}) {
                    auto ext = w;
                    ext.push_back(sign * l);
                    words.push_back(ext);
                    next.push_back(std::move(ext));
                }
        frontier = std::move(next);
    }
    return words;
}

/// Independent end-to-end comparison of the monodromy representation with the
/// quantum representation specialized at q = e^{-pi i nu}: characteristic
/// polynomials per generator, eigenvalue sets against the predicted values,
/// and traces of words (all words up to length 4, then random longer words).
inline MonodromyReport compare_reps(const RepSpec& spec, double nu, const MonodromyConfig& cfg,
                                    double compare_tol = 1e-6) {
    const auto classical = montarani_rep(spec, nu);
    const auto quantum = build_quantum_rep(spec);
    const int n = spec.n, m = spec.m();

    MonodromyReport report;
    report.nu = nu;
    report.tol = compare_tol;
    report.fiber_dim = classical.fiber_dim();
    if (classical.fiber_dim() != quantum.E.dim()) {
        report.pass = false;
        report.failures.push_back("fiber dimensions differ between the two constructions");
        return report;
    }
    if (classical.fiber_dim() == 0) return report;  // vacuous: nothing to compare

    const Complex q0 = std::exp(Complex(0.0, -kPi * nu));
    const auto specialize_matrix = [&](const Matrix<Scalar>& mat) {
        CMatrix out(mat.rows(), mat.cols());
        for (int i = 0; i < mat.rows(); ++i)
            for (int j = 0; j < mat.cols(); ++j)
                if (!(mat(i, j) == Scalar(0))) out(i, j) = quantum.field.specialize(mat(i, j), q0);
        return out;
    };

    std::vector<Loop> loops;
    std::vector<std::string> names;
    GeneratorSet mono, quant;
    for (int i = 1; i <= n - 1; ++i) {
        loops.push_back(loop_exchange(i, n, m, cfg));
        names.push_back("T_" + std::to_string(i));
        quant.mats.push_back(specialize_matrix(quantum.T[i - 1]));
    }
    for (int k = 1; k <= m; ++k) {
        loops.push_back(loop_puncture(k, n, m, cfg));
        names.push_back("U_" + std::to_string(k));
        quant.mats.push_back(specialize_matrix(quantum.U[k - 1]));
    }

    // Transport the generator loops, at most cfg.jobs at a time; the results
    // are deterministic either way (pure function of loop and fiber).
    std::vector<TransportResult> transported(loops.size());
    const size_t jobs = static_cast<size_t>(std::max(1, cfg.jobs));
    for (size_t begin = 0; begin < loops.size(); begin += jobs) {
        const size_t end = std::min(loops.size(), begin + jobs);
        std::vector<std::future<TransportResult>> batch;
        for (size_t g = begin + 1; g < end; ++g)
            batch.push_back(std::async(std::launch::async, [&loops, &classical, &cfg, g] {
                return parallel_transport(loops[g], classical, cfg);
            }));
        transported[begin] = parallel_transport(loops[begin], classical, cfg);
        for (size_t g = begin + 1; g < end; ++g) transported[g] = batch[g - begin - 1].get();
    }
    for (const auto& t : transported) {
        report.total_steps += t.accepted_steps;
        mono.mats.push_back(t.matrix);
    }
    for (const auto& g : mono.mats) mono.inverses.push_back(invert(g));
    for (const auto& g : quant.mats) quant.inverses.push_back(invert(g));

    // Predicted eigenvalue sets: {t, -1/t} for exchanges, {e^{2 pi i gamma}} for punctures.
    const Complex t0 = q0;
    for (size_t g = 0; g < mono.mats.size(); ++g) {
        GeneratorComparison cmp;
        cmp.name = names[g];
        cmp.monodromy_matrix = mono.mats[g];
        cmp.quantum_matrix = quant.mats[g];
        cmp.monodromy_charpoly = char_poly(mono.mats[g]);
        cmp.quantum_charpoly = char_poly(quant.mats[g]);
        for (size_t c = 0; c < cmp.monodromy_charpoly.size(); ++c)
            cmp.charpoly_delta = std::max(
                cmp.charpoly_delta, std::abs(cmp.monodromy_charpoly[c] - cmp.quantum_charpoly[c]));

        const auto roots = poly_roots(cmp.monodromy_charpoly);
        std::vector<Complex> allowed;
        if (static_cast<int>(g) < n - 1) {
            allowed = {t0, -Complex(1.0) / t0};
        } else {
            const int k = static_cast<int>(g) - (n - 1) + 1;
            for (size_t j = 0; j < classical.gamma_seed[k - 1].size(); ++j)
                allowed.push_back(
                    std::exp(Complex(0.0, 2 * kPi * classical.gamma(k, static_cast<int>(j) + 1))));
        }
        for (const auto& r : roots) {
            double best = std::abs(r - allowed[0]);
            for (const auto& a : allowed) best = std::min(best, std::abs(r - a));
            cmp.eigenvalue_delta = std::max(cmp.eigenvalue_delta, best);
        }

        report.max_charpoly_delta = std::max(report.max_charpoly_delta, cmp.charpoly_delta);
        report.max_eigenvalue_delta = std::max(report.max_eigenvalue_delta, cmp.eigenvalue_delta);
        if (cmp.charpoly_delta > compare_tol) {
            report.pass = false;
            report.failures.push_back("characteristic polynomial mismatch for " + cmp.name);
        }
        if (cmp.eigenvalue_delta > compare_tol) {
            report.pass = false;
            report.failures.push_back("eigenvalues of " + cmp.name + " off the predicted set");
        }
        report.generators.push_back(std::move(cmp));
    }

    // Word traces: exhaustive to length 4, then random words of length <= 8.
    const int alphabet = static_cast<int>(mono.mats.size());
    auto words = all_words(alphabet, 4);
    std::mt19937 rng(987654321u);
    std::uniform_int_distribution<int> pick_letter(1, alphabet), pick_len(5, 8), pick_sign(0, 1);
    for (int extra = 0; extra < 50; ++extra) {
        std::vector<int> w(pick_len(rng));
        for (auto& l : w) l = pick_letter(rng) * (pick_sign(rng) ? 1 : -1);
        words.push_back(std::move(w));
    }
    for (const auto& w : words) {
        WordTrace entry;
        entry.word = w;
        entry.monodromy = trace(mono.word(w));
        entry.quantum = trace(quant.word(w));
        entry.delta = std::abs(entry.monodromy - entry.quantum);
        report.max_trace_delta = std::max(report.max_trace_delta, entry.delta);
        if (entry.delta > compare_tol) {
            report.pass = false;
            std::ostringstream os;
            os << "word trace mismatch (delta " << entry.delta << ") for word";
            for (int l : w) os << ' ' << l;
            report.failures.push_back(os.str());
        }
        report.traces.push_back(std::move(entry));
    }
    return report;
}

}  // namespace gdaha
