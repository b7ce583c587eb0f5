// Batch front end: construct representations, run the exact and numeric
// verification suites, and emit versioned JSON reports.
//
// Subcommands:
//   build      construct the representation and report its parameters/matrices
//   check      run the exact relation audits (exit 1 on any failure)
//   monodromy  run the numeric transport comparison (exit 1 on any failure)
//
// Exit codes: 0 pass (or vacuous), 1 mathematical failure, 2 usage error.

#include "gdaha/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gdaha;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void progress(const std::string& what, const Timer& timer) {
    std::fprintf(stderr, "[gdaha] %s (%.2fs)\n", what.c_str(), timer.seconds());
}

// --------------------------------------------------------------------------
// Leg grammar: "mu=[2,0]" or "mu=[2,0],lambda=1/2" (whitespace ignored).

std::pair<Weight, Rational> parse_leg(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
    const auto fail = [&](const std::string& why) {
        throw std::invalid_argument("leg '" + raw + "': " + why +
                                    " (expected mu=[a,b,...] or mu=[a,b,...],lambda=p/q)");
    };
    if (text.rfind("mu=[", 0) != 0) fail("must start with mu=[");
    const auto close = text.find(']');
    if (close == std::string::npos) fail("missing ]");
    Weight mu;
    std::stringstream parts(text.substr(4, close - 4));
    std::string part;
    while (std::getline(parts, part, ',')) {
        try {
            size_t used = 0;
            mu.push_back(std::stoi(part, &used));
            if (used != part.size()) fail("bad integer '" + part + "'");
        } catch (const std::logic_error&) {
            fail("bad integer '" + part + "'");
        }
    }
    if (mu.empty()) fail("mu must list at least one part");
    Rational lambda(0);
    const std::string rest = text.substr(close + 1);
    if (!rest.empty()) {
        if (rest.rfind(",lambda=", 0) != 0) fail("unexpected trailing text '" + rest + "'");
        try {
            lambda = parse_rational(rest.substr(8));
        } catch (const std::exception&) {
            fail("bad rational '" + rest.substr(8) + "'");
        }
    }
    return {mu, lambda};
}

// --------------------------------------------------------------------------
// Config file: one `key = value` per line, `#` starts a comment.
// Keys: nu, tol, compare_tol, exchange_radius, depth, puncture_radius,
// clearance, jobs, seed, perturb. Explicit command-line flags win.

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    static const std::vector<std::string> known = {
        "nu",        "tol",  "compare_tol", "exchange_radius", "depth",
        "puncture_radius", "clearance", "jobs", "seed",        "perturb"};
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string stripped;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) stripped.push_back(c);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " is not key=value");
        const std::string key = stripped.substr(0, eq), value = stripped.substr(eq + 1);
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw std::invalid_argument("config: unknown key '" + key + "'");
        if (value.empty())
            throw std::invalid_argument("config: empty value for '" + key + "'");
        out[key] = value;
    }
    return out;
}

double config_double(const std::map<std::string, std::string>& cfg, const std::string& key,
                     double fallback) {
    const auto it = cfg.find(key);
    if (it == cfg.end()) return fallback;
    size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size())
        throw std::invalid_argument("config: bad number for '" + key + "'");
    return v;
}

// --------------------------------------------------------------------------
// Shared spec/report plumbing.

struct CommonOptions {
    int N = 0;
    int n = 0;
    std::vector<std::string> legs;
    std::string out;
    std::string golden;
    std::string config;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--N", opts.N, "rank of the underlying special linear group")->required();
    cmd->add_option("--n", opts.n, "number of moving strands")->required();
    cmd->add_option("--legs", opts.legs,
                    "one leg per occurrence: \"mu=[2,0]\" or \"mu=[2,0],lambda=1/2\"")
        ->required();
    cmd->add_option("--out", opts.out, "write the JSON report here (default: stdout)");
    cmd->add_option("--golden", opts.golden,
                    "golden report path: written when absent, compared when present "
                    "(timings are ignored in the comparison)");
    cmd->add_option("--config", opts.config,
                    "key=value config file for tolerances and loop geometry");
}

RepSpec spec_from(const CommonOptions& opts) {
    RepSpec spec;
    spec.N = opts.N;
    spec.n = opts.n;
    for (const auto& leg : opts.legs) {
        auto [mu, lambda] = parse_leg(leg);
        if (static_cast<int>(mu.size()) != opts.N)
            throw std::invalid_argument("leg '" + leg + "': mu must have exactly N = " +
                                        std::to_string(opts.N) + " parts");
        spec.mus.push_back(std::move(mu));
        spec.lambdas.push_back(lambda);
    }
    validate_spec(spec);
    return spec;
}

void emit(const json& report, const std::string& out) {
    if (out.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream file(out);
    if (!file) throw std::invalid_argument("cannot open output file " + out);
    file << report.dump(2) << "\n";
    progress("report written to " + out, Timer{});
}

json strip_timings(json j) {
    j.erase("timings");
    return j;
}

// Returns 0 on golden match (or first write), 1 on mismatch.
int handle_golden(const json& report, const std::string& path) {
    const json stripped = strip_timings(report);
    if (!std::filesystem::exists(path)) {
        std::ofstream file(path);
        if (!file) throw std::invalid_argument("cannot open golden file " + path);
        file << stripped.dump(2) << "\n";
        std::fprintf(stderr, "[gdaha] golden report written to %s\n", path.c_str());
        return 0;
    }
    std::ifstream file(path);
    json golden;
    try {
        file >> golden;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("golden file " + path + " is not valid JSON: " + e.what());
    }
    if (strip_timings(golden) == stripped) {
        std::fprintf(stderr, "[gdaha] report matches golden %s\n", path.c_str());
        return 0;
    }
    std::fprintf(stderr, "[gdaha] report DIFFERS from golden %s\n", path.c_str());
    return 1;
}

Integer predicted_carrier_dim(const RepSpec& spec) {
    Integer dim = 1;
    for (const auto& mu : spec.mus) dim *= weyl_dim(mu);
    for (int i = 0; i < spec.n; ++i) dim *= spec.N;
    return dim;
}

Integer predicted_tensor_dim(const RepSpec& spec) {
    int boxes = spec.n;
    for (const auto& mu : spec.mus) boxes += total(mu);
    Integer dim = 1;
    for (int i = 0; i < boxes; ++i) dim *= spec.N;
    return dim;
}

json generator_words_json(const QuantumRep& rep) {
    const BlockStructure blocks{rep.product.block_sizes};
    const int m = rep.spec.m();
    json t_words = json::array(), u_words = json::array();
    for (int i = 1; i <= rep.spec.n - 1; ++i)
        t_words.push_back(braid_word_to_json(block_word(blocks, {{m + i, 1}})));
    for (int k = 1; k <= m; ++k) {
        std::vector<BlockLetter> word;
        for (int j = m; j > k; --j) word.push_back({j, -1});
        word.push_back({k, 1});
        word.push_back({k, 1});
        for (int j = k + 1; j <= m; ++j) word.push_back({j, 1});
        u_words.push_back(braid_word_to_json(block_word(blocks, word)));
    }
    return {{"T", t_words}, {"U", u_words}};
}

json build_report_body(const QuantumRep& rep) {
    json t = json::array(), u = json::array();
    for (const auto& mat : rep.T) t.push_back(matrix_to_json(mat));
    for (const auto& mat : rep.U) u.push_back(matrix_to_json(mat));
    return {{"root_order", rep.field.root_order()},
            {"central_slope", to_string(central_slope(rep.spec))},
            {"dim_fiber", rep.E.dim()},
            {"vacuous", rep.vacuous()},
            {"parameters", params_to_json(rep.params)},
            {"fiber", subspace_to_json(rep.E)},
            {"generators", {{"T", t}, {"U", u}}},
            {"braid_words", generator_words_json(rep)}};
}

// --------------------------------------------------------------------------
// nu diagnostics: the comparison hypotheses want q = e^{-pi i nu} off roots
// of unity, i.e. nu irrational. Warn when nu is (numerically) a small-
// denominator rational, but proceed.

void warn_if_rational_nu(double nu) {
    for (int den = 1; den <= 16; ++den) {
        const double scaled = nu * den;
        if (std::abs(scaled - std::round(scaled)) < 1e-9 * den) {
            std::fprintf(stderr,
                         "[gdaha] warning: nu = %.12g is close to %ld/%d; the quantum parameter "
                         "is then a root of unity and the comparison hypotheses may fail\n",
                         nu, std::lround(scaled), den);
            return;
        }
    }
}

// --------------------------------------------------------------------------
// Subcommand bodies. Each returns the process exit code.

int run_build(const CommonOptions& opts, bool dry_run) {
    const RepSpec spec = spec_from(opts);
    const int root_order = derive_root_order(spec);
    if (dry_run) {
        std::cout << "root order: " << root_order << "\n"
                  << "carrier dimension: " << predicted_carrier_dim(spec).str() << "\n"
                  << "tensor-power ambient dimension: " << predicted_tensor_dim(spec).str()
                  << "\n";
        return 0;
    }

    Timer timer;
    progress("building representation (ambient dimension " + predicted_tensor_dim(spec).str() +
                 ")",
             timer);
    const QuantumRep rep = build_quantum_rep(spec);
    progress("representation built, fiber dimension " + std::to_string(rep.E.dim()), timer);

    json report = {{"schema", kReportSchema},
                   {"command", "build"},
                   {"spec", spec_to_json(spec)},
                   {"timings", {{"total_seconds", timer.seconds()}}}};
    report.update(build_report_body(rep));

    int exit_code = 0;
    if (!opts.golden.empty()) exit_code = std::max(exit_code, handle_golden(report, opts.golden));
    emit(report, opts.out);
    return exit_code;
}

int run_check(const CommonOptions& opts, bool perturb) {
    const RepSpec spec = spec_from(opts);
    Timer timer;
    progress("building representation (ambient dimension " + predicted_tensor_dim(spec).str() +
                 ")",
             timer);
    QuantumRep rep = build_quantum_rep(spec);
    progress("running exact relation audit", timer);

    if (perturb && !rep.vacuous() && !rep.U.empty()) {
        // Negative control: scale the first puncture generator's prefactor.
        rep.U[0] = rep.field.q() * rep.U[0];
    }

    const RelationReport relations = check_gdaha_relations(rep);
    progress("running full-twist scalar check", timer);
    const LongWordReport long_word = long_word_check(spec);
    progress("running squared-crossing spectrum checks", timer);
    json r_squared = json::array();
    bool r_squared_pass = true;
    for (const auto& mu : spec.mus) {
        const auto table = r_squared_spectrum_check(spec.N, mu, eps(1, spec.N), rep.field);
        r_squared_pass = r_squared_pass && table.pass;
        r_squared.push_back(r_squared_report_to_json(table));
    }

    const bool pass = relations.pass && long_word.pass && r_squared_pass;
    json report = {{"schema", kReportSchema},
                   {"command", "check"},
                   {"spec", spec_to_json(spec)},
                   {"perturbed", perturb},
                   {"pass", pass},
                   {"vacuous", rep.vacuous()},
                   {"dim_fiber", rep.E.dim()},
                   {"root_order", rep.field.root_order()},
                   {"parameters", params_to_json(rep.params)},
                   {"relations", relation_report_to_json(relations)},
                   {"full_twist", long_word_report_to_json(long_word)},
                   {"squared_crossing", r_squared},
                   {"timings", {{"total_seconds", timer.seconds()}}}};

    int exit_code = pass ? 0 : 1;
    if (!opts.golden.empty()) exit_code = std::max(exit_code, handle_golden(report, opts.golden));
    emit(report, opts.out);
    return exit_code;
}

struct MonodromyOptions {
    double nu = 1.0 / 3.141592653589793238462643;
    double tol = 1e-10;
    double compare_tol = 1e-6;
    double perturb = 0.0;
    unsigned seed = 12345;
    int jobs = 1;
    bool tol_sweep = false;
    MonodromyConfig geometry;  // loop geometry; config-file keys override
};

json geometry_to_json(const MonodromyConfig& cfg) {
    return {{"exchange_radius", cfg.exchange_radius},
            {"depth", cfg.depth},
            {"puncture_radius", cfg.puncture_radius},
            {"clearance", cfg.clearance},
            {"integrator_tol", cfg.tol},
            {"jobs", cfg.jobs}};
}

int run_monodromy(const CommonOptions& opts, const MonodromyOptions& mopts) {
    const RepSpec spec = spec_from(opts);
    warn_if_rational_nu(mopts.nu);

    MonodromyConfig cfg = mopts.geometry;
    cfg.tol = mopts.tol;
    cfg.jobs = mopts.jobs;

    Timer timer;
    progress("building fibers (ambient dimension " + predicted_tensor_dim(spec).str() + ")",
             timer);
    const ClassicalRep classical = montarani_rep(spec, mopts.nu);
    progress("checking rational-limit relations, fiber dimension " +
                 std::to_string(classical.fiber_dim()),
             timer);
    const RgdahaReport rgdaha = check_rgdaha_relations(classical);
    progress("transporting generator loops and comparing", timer);
    const MonodromyReport comparison = compare_reps(spec, mopts.nu, cfg, mopts.compare_tol);

    json loops = json::array();
    const int n = spec.n, m = spec.m();
    if (classical.fiber_dim() > 0) {
        for (int i = 1; i <= n - 1; ++i)
            loops.push_back({{"name", "T_" + std::to_string(i)},
                             {"loop", loop_to_json(loop_exchange(i, n, m, cfg))}});
        for (int k = 1; k <= m; ++k)
            loops.push_back({{"name", "U_" + std::to_string(k)},
                             {"loop", loop_to_json(loop_puncture(k, n, m, cfg))}});
    }

    json report = {{"schema", kReportSchema},
                   {"command", "monodromy"},
                   {"spec", spec_to_json(spec)},
                   {"nu", mopts.nu},
                   {"geometry", geometry_to_json(cfg)},
                   {"rational_limit", rgdaha_report_to_json(rgdaha)},
                   {"comparison", monodromy_report_to_json(comparison)},
                   {"loops", loops}};

    bool pass = rgdaha.pass && comparison.pass;

    if (mopts.perturb > 0.0 && classical.fiber_dim() > 0) {
        progress("re-transporting perturbed loops", timer);
        json rows = json::array();
        double max_delta = 0.0;
        const auto probe = [&](const std::string& name, const Loop& loop) {
            const auto base = parallel_transport(loop, classical, cfg);
            const auto moved = parallel_transport(
                perturb_loop(loop, mopts.perturb, mopts.seed, cfg), classical, cfg);
            const double delta = max_abs(base.matrix - moved.matrix);
            max_delta = std::max(max_delta, delta);
            rows.push_back({{"name", name}, {"delta", delta}});
        };
        for (int i = 1; i <= n - 1; ++i)
            probe("T_" + std::to_string(i), loop_exchange(i, n, m, cfg));
        for (int k = 1; k <= m; ++k)
            probe("U_" + std::to_string(k), loop_puncture(k, n, m, cfg));
        const bool stable = max_delta <= mopts.compare_tol;
        report["perturbation"] = {{"magnitude", mopts.perturb},
                                  {"seed", mopts.seed},
                                  {"max_delta", max_delta},
                                  {"pass", stable},
                                  {"generators", rows}};
        pass = pass && stable;
    }

    if (mopts.tol_sweep && classical.fiber_dim() > 0) {
        progress("running tolerance sweep", timer);
        const std::vector<double> tols = {1e-4, 1e-6, 1e-8, 1e-10};
        json rows = json::array();
        std::fprintf(stderr, "[gdaha] convergence table (deviation from tol=%.0e):\n",
                     tols.back());
        const auto sweep = [&](const std::string& name, const Loop& loop) {
            MonodromyConfig fine = cfg;
            fine.tol = tols.back();
            const auto reference = parallel_transport(loop, classical, fine);
            json deltas = json::array();
            std::string line = "  " + name + ":";
            for (double tol : tols) {
                MonodromyConfig step = cfg;
                step.tol = tol;
                const auto at = parallel_transport(loop, classical, step);
                const double delta = max_abs(at.matrix - reference.matrix);
                deltas.push_back({{"tol", tol}, {"delta", delta}});
                char buf[64];
                std::snprintf(buf, sizeof buf, "  %.0e -> %.2e", tol, delta);
                line += buf;
            }
            std::fprintf(stderr, "%s\n", line.c_str());
            rows.push_back({{"name", name}, {"deltas", deltas}});
        };
        for (int i = 1; i <= n - 1; ++i)
            sweep("T_" + std::to_string(i), loop_exchange(i, n, m, cfg));
        for (int k = 1; k <= m; ++k)
            sweep("U_" + std::to_string(k), loop_puncture(k, n, m, cfg));
        report["tol_sweep"] = rows;
    }

    report["pass"] = pass;
    report["timings"] = {{"total_seconds", timer.seconds()}};

    int exit_code = pass ? 0 : 1;
    if (!opts.golden.empty()) exit_code = std::max(exit_code, handle_golden(report, opts.golden));
    emit(report, opts.out);
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gdaha: exact star-graph Hecke-type representations and their monodromy "
        "verification"};
    app.require_subcommand(1);

    CommonOptions build_opts, check_opts, mono_opts_common;
    bool dry_run = false, perturb_check = false;
    MonodromyOptions mopts;

    CLI::App* build = app.add_subcommand("build", "construct the representation and report it");
    add_common(build, build_opts);
    build->add_flag("--dry-run", dry_run,
                    "print derived root order and predicted dimensions, then stop");

    CLI::App* check = app.add_subcommand("check", "run the exact relation audits");
    add_common(check, check_opts);
    check->add_flag("--perturb", perturb_check,
                    "negative control: corrupt the first puncture generator prefactor");

    CLI::App* mono = app.add_subcommand("monodromy", "run the numeric transport comparison");
    add_common(mono, mono_opts_common);
    mono->add_option("--nu", mopts.nu, "deformation parameter (default 1/pi)");
    mono->add_option("--tol", mopts.tol, "integrator step tolerance (default 1e-10)");
    mono->add_option("--compare-tol", mopts.compare_tol,
                     "comparison tolerance for matches (default 1e-6)");
    mono->add_option("--perturb", mopts.perturb,
                     "loop perturbation magnitude for the stability probe (default off)");
    mono->add_option("--seed", mopts.seed, "seed for the perturbation directions");
    mono->add_option("--jobs", mopts.jobs, "max concurrent loop transports (default 1)");
    mono->add_flag("--tol-sweep", mopts.tol_sweep, "emit an integrator convergence table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "gdaha: %s\n", e.what());
        return 2;
    }

    try {
        CommonOptions* opts = build->parsed()   ? &build_opts
                              : check->parsed() ? &check_opts
                                                : &mono_opts_common;
        if (!opts->config.empty()) {
            const auto cfg = parse_config_file(opts->config);
            if (mono->parsed()) {
                if (!mono->count("--nu")) mopts.nu = config_double(cfg, "nu", mopts.nu);
                if (!mono->count("--tol")) mopts.tol = config_double(cfg, "tol", mopts.tol);
                if (!mono->count("--compare-tol"))
                    mopts.compare_tol = config_double(cfg, "compare_tol", mopts.compare_tol);
                if (!mono->count("--perturb"))
                    mopts.perturb = config_double(cfg, "perturb", mopts.perturb);
                if (!mono->count("--seed"))
                    mopts.seed = static_cast<unsigned>(config_double(cfg, "seed", mopts.seed));
                if (!mono->count("--jobs"))
                    mopts.jobs = static_cast<int>(config_double(cfg, "jobs", mopts.jobs));
                MonodromyConfig& g = mopts.geometry;
                g.exchange_radius = config_double(cfg, "exchange_radius", g.exchange_radius);
                g.depth = config_double(cfg, "depth", g.depth);
                g.puncture_radius = config_double(cfg, "puncture_radius", g.puncture_radius);
                g.clearance = config_double(cfg, "clearance", g.clearance);
            }
        }
        if (build->parsed()) return run_build(build_opts, dry_run);
        if (check->parsed()) return run_check(check_opts, perturb_check);
        return run_monodromy(mono_opts_common, mopts);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "gdaha: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "gdaha: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "gdaha: computation failed: %s\n", e.what());
        return 1;
    }
}
