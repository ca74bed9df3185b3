// Command-line front end: evaluation, stem extraction, star products, domain
// checking, slice-regularity residuals and the named verification suites.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "slicestar/errors.hpp"
#include "slicestar/harness.hpp"
#include "slicestar/json_io.hpp"
#include "slicestar/reg_check.hpp"

using namespace slicestar;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

std::string quat_cell(const Quaternion& q) {
    std::ostringstream os;
    os << std::setprecision(17) << '(' << q.w << ';' << q.x << ';' << q.y << ';'
       << q.z << ')';
    return os.str();
}

// SLICESTAR_SEED takes precedence over --seed when set.
std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("SLICESTAR_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return flag_seed;
}

std::vector<SlicePoint> load_points(const std::string& path) {
    const json j = load_json(path);
    const json& arr = j.is_array() ? j : j.at("points");
    std::vector<SlicePoint> points;
    for (const json& p : arr) points.push_back(p.get<SlicePoint>());
    return points;
}

int run_eval(const std::string& fn_path, const std::string& domain_path,
             const std::string& points_path, const std::string& out) {
    const Domain domain = domain_from_json(load_json(domain_path));
    const PathSliceFn f = fn_from_json(load_json(fn_path), domain);
    json values = json::array();
    for (const SlicePoint& q : load_points(points_path)) {
        values.push_back(f.eval(q));
    }
    json report;
    report["function"] = f.name();
    report["values"] = std::move(values);
    write_text(out, report.dump(2) + "\n");
    return 0;
}

int run_stem(const std::string& fn_path, const std::string& domain_path,
             const std::string& path_path, int units, std::uint64_t seed,
             double max_step, const std::string& out) {
    const Domain domain = domain_from_json(load_json(domain_path));
    const PathSliceFn f = fn_from_json(load_json(fn_path), domain);
    const ComplexPath gamma = refine(path_from_json(load_json(path_path)), max_step);
    VerifyOptions opts;
    opts.max_step = max_step;
    const StemValue F = sub_stem(f, gamma, sphere_sample(units, seed), opts);
    write_text(out, json(F).dump(2) + "\n");
    return 0;
}

int run_star(const std::string& f_path, const std::string& g_path,
             const std::string& o1_path, const std::string& o2_path,
             const std::string& probes_path, int units, std::uint64_t seed,
             double max_step, bool override_hyp, const std::string& out) {
    const Domain omega1 = domain_from_json(load_json(o1_path));
    const Domain omega2 = domain_from_json(load_json(o2_path));
    const PathSliceFn f = fn_from_json(load_json(f_path), omega1);
    const PathSliceFn g = fn_from_json(load_json(g_path), omega2);
    const auto unit_sample = sphere_sample(units, seed);
    VerifyOptions opts;
    opts.max_step = max_step;

    StarHypothesis hyp;
    if (override_hyp) {
        hyp = StarHypothesis::override_flag("--override-hypotheses");
    } else {
        const Corpus corpus = build_corpus(omega1);
        CheckReport sp = check_stem_preserving(omega1, omega2, corpus.paths,
                                               corpus.pairs, unit_sample);
        CheckReport rpc = check_real_path_connected(omega1, corpus.probes, {});
        if (!sp.passed() || !rpc.passed()) {
            std::cerr << "domain hypotheses not established at this resolution; "
                         "rerun with --override-hypotheses to proceed anyway\n";
            return 2;
        }
        rpc.resolution.erase("found_paths");
        sp.resolution["real_path_connected"] = rpc.resolution;
        hyp = StarHypothesis::from_report(sp);
    }

    const PathSliceFn product = fn_star(f, g, omega1, omega2, hyp, unit_sample, opts);
    const std::optional<std::vector<Quaternion>> oracle =
        (f.coefficients() && g.coefficients())
            ? std::optional(poly_star_oracle(*f.coefficients(), *g.coefficients()))
            : std::nullopt;

    std::ostringstream csv;
    csv << "# hypothesis: " << product.meta["product"]["hypothesis"].dump() << "\n";
    csv << "probe,f,g,f_star_g,pointwise_fg,residual_vs_oracle\n";
    csv << std::setprecision(17);
    for (const SlicePoint& q : load_points(probes_path)) {
        const Quaternion fv = f.eval(q), gv = g.eval(q);
        const Quaternion star = product.eval(q);
        csv << quat_cell(q.component(0)) << ',' << quat_cell(fv) << ','
            << quat_cell(gv) << ',' << quat_cell(star) << ','
            << quat_cell(fv * gv) << ',';
        if (oracle) {
            csv << abs(star - poly_eval(*oracle, q.component(0)));
        }
        csv << "\n";
    }
    write_text(out, csv.str());
    return 0;
}

int run_check_domain(const std::string& domain_path, const std::string& suite,
                     const std::string& domain2_path, int units,
                     std::uint64_t seed, double grid_h, double max_step,
                     const std::string& format, const std::string& out) {
    const Domain domain = domain_from_json(load_json(domain_path));
    const auto unit_sample = sphere_sample(units, seed);
    CorpusOptions copts;
    copts.max_step = max_step;
    copts.bfs_grid_h = grid_h;
    const Corpus corpus = build_corpus(domain, copts);
    const PathfinderOptions pf{grid_h, max_step};

    CheckReport report;
    if (suite == "self-stem") {
        report = check_self_stem_preserving(domain, corpus, unit_sample, pf);
    } else if (suite == "real-path") {
        report = check_real_path_connected(domain, corpus.probes, pf);
    } else if (suite == "weak-axial") {
        report = check_weakly_axially_symmetric(domain, corpus.probes);
    } else if (suite == "stem-preserving") {
        if (domain2_path.empty()) {
            throw Error("--suite stem-preserving needs --domain2");
        }
        const Domain omega2 = domain_from_json(load_json(domain2_path));
        report = check_stem_preserving(domain, omega2, corpus.paths, corpus.pairs,
                                       unit_sample);
    } else {
        throw Error("unknown suite: " + suite +
                    " (expected self-stem, real-path, weak-axial, stem-preserving)");
    }

    if (format == "json") {
        write_text(out, json(report).dump(2) + "\n");
    } else {
        std::ostringstream table;
        table << domain.name() << " " << suite << ": " << to_string(report.verdict)
              << " (" << report.witnesses.size() << " witnesses)\n";
        write_text(out, table.str());
    }
    return report.passed() ? 0 : 1;
}

int run_cr_check(const std::string& fn_path, const std::string& domain_path,
                 double h, int units, int grid, std::uint64_t seed,
                 const std::string& out) {
    const Domain domain = domain_from_json(load_json(domain_path));
    const PathSliceFn f = fn_from_json(load_json(fn_path), domain);
    const CRReport report =
        cr_residual(f, domain, sphere_sample(units, seed), grid, h, true);

    std::ostringstream csv;
    csv << std::setprecision(17);
    csv << "I_x,I_y,I_z,x,y,var,residual\n";
    for (const CRRow& row : report.rows) {
        csv << row.unit.x << ',' << row.unit.y << ',' << row.unit.z << ',';
        for (std::size_t l = 0; l < row.x.size(); ++l) {
            csv << (l ? ";" : "") << row.x[l];
        }
        csv << ',';
        for (std::size_t l = 0; l < row.y.size(); ++l) {
            csv << (l ? ";" : "") << row.y[l];
        }
        csv << ',' << row.var << ',' << row.residual << "\n";
    }
    write_text(out, csv.str());
    std::cerr << "max residual " << report.max_residual << " at h = " << h
              << ", order estimate " << report.order_estimate << " ("
              << report.evaluated << " stencils, " << report.skipped
              << " skipped)\n";
    return 0;
}

std::string suite_table(const json& report) {
    std::ostringstream table;
    table << "scenario " << report["scenario"].get<std::string>() << ", seed "
          << report["seed"] << "\n";
    for (const auto& [name, entry] : report.at("checks").items()) {
        table << "  " << std::left << std::setw(26) << name
              << entry["verdict"].get<std::string>();
        if (entry.contains("expected")) {
            const bool match = entry["expected"] == entry["verdict"];
            table << (match ? "  (as expected)" : "  (EXPECTED "
                      + entry["expected"].get<std::string>() + ")");
        }
        if (entry["resolution"].contains("max_residual")) {
            table << "  max residual "
                  << entry["resolution"]["max_residual"].get<double>();
        }
        table << "\n";
    }
    const json& summary = report.at("summary");
    table << "checks " << summary["checks_run"] << ", violations "
          << summary["violations"] << ", expected mismatches "
          << summary["expected_mismatches"] << ", wall time "
          << report["wall_time_ms"] << " ms\n";
    return table.str();
}

std::string suite_csv(const json& report) {
    std::ostringstream csv;
    csv << std::setprecision(17);
    csv << "check,verdict,expected,max_residual,witnesses\n";
    for (const auto& [name, entry] : report.at("checks").items()) {
        csv << name << ',' << entry["verdict"].get<std::string>() << ',';
        if (entry.contains("expected")) csv << entry["expected"].get<std::string>();
        csv << ',';
        if (entry["resolution"].contains("max_residual")) {
            csv << entry["resolution"]["max_residual"].get<double>();
        }
        csv << ',' << entry["witness_count"] << "\n";
    }
    return csv.str();
}

int run_verify(const std::string& scenario_name, const std::string& scenario_file,
               std::uint64_t seed, bool seed_set, int units, int domain_units,
               double max_step, double grid_h, double tol,
               const std::string& format, const std::string& out) {
    Scenario scenario = scenario_file.empty()
                            ? bundled_scenario(scenario_name)
                            : scenario_from_json(load_json(scenario_file));
    if (seed_set || std::getenv("SLICESTAR_SEED")) {
        scenario.seed = effective_seed(seed);
    }
    if (units > 0) scenario.units = units;
    if (domain_units > 0) scenario.domain_units = domain_units;
    if (max_step > 0) scenario.max_step = max_step;
    if (grid_h > 0) scenario.grid_h = grid_h;
    if (tol > 0) {
        scenario.tolerances["representation"] = tol;
        scenario.tolerances["oracle"] = tol;
        scenario.tolerances["associativity"] = tol;
    }

    const SuiteResult result = run_suite(scenario);
    std::cout << suite_table(result.report);
    if (format == "json") {
        write_text(out, result.report.dump(2) + "\n");
    } else if (format == "csv") {
        write_text(out, suite_csv(result.report));
    } else if (!out.empty()) {
        write_text(out, suite_table(result.report));
    }
    return result.any_violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"path-slice function calculus on quaternionic slice domains"};
    app.require_subcommand(1);

    std::string fn_path, g_path, domain_path, domain2_path, points_path, path_path;
    std::string out, format = "table", suite = "self-stem";
    std::string scenario_name = "ball-polynomials", scenario_file;
    std::uint64_t seed = 7;
    int units = 50, domain_units = 0, grid = 17;
    double max_step = 0.05, grid_h = 0.05, h = 1e-3, tol = 0;
    bool override_hyp = false;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a function at points");
    eval_cmd->add_option("--fn", fn_path)->required();
    eval_cmd->add_option("--domain", domain_path)->required();
    eval_cmd->add_option("--points", points_path)->required();
    eval_cmd->add_option("--out", out);

    auto* stem_cmd = app.add_subcommand("stem", "extract the stem over a path");
    stem_cmd->add_option("--fn", fn_path)->required();
    stem_cmd->add_option("--domain", domain_path)->required();
    stem_cmd->add_option("--path", path_path)->required();
    stem_cmd->add_option("--units", units);
    stem_cmd->add_option("--seed", seed);
    stem_cmd->add_option("--max-step", max_step);
    stem_cmd->add_option("--out", out);

    auto* star_cmd = app.add_subcommand("star", "star product at probe points");
    star_cmd->add_option("--f", fn_path)->required();
    star_cmd->add_option("--g", g_path)->required();
    star_cmd->add_option("--omega1", domain_path)->required();
    star_cmd->add_option("--omega2", domain2_path)->required();
    star_cmd->add_option("--probes", points_path)->required();
    star_cmd->add_option("--units", units);
    star_cmd->add_option("--seed", seed);
    star_cmd->add_option("--max-step", max_step);
    star_cmd->add_flag("--override-hypotheses", override_hyp,
                       "skip the stem-preserving check");
    star_cmd->add_option("--out", out);

    auto* check_cmd = app.add_subcommand("check-domain", "run a domain checker");
    check_cmd->add_option("--domain", domain_path)->required();
    check_cmd->add_option("--suite", suite,
                          "self-stem | real-path | weak-axial | stem-preserving");
    check_cmd->add_option("--domain2", domain2_path);
    check_cmd->add_option("--units", units);
    check_cmd->add_option("--seed", seed);
    check_cmd->add_option("--grid-h", grid_h);
    check_cmd->add_option("--max-step", max_step);
    check_cmd->add_option("--format", format, "table | json");
    check_cmd->add_option("--out", out);

    auto* cr_cmd = app.add_subcommand("cr-check", "finite-difference regularity");
    cr_cmd->set_help_flag("--help", "print help");  // frees -h for the step size
    cr_cmd->add_option("--fn", fn_path)->required();
    cr_cmd->add_option("--domain", domain_path)->required();
    cr_cmd->add_option("--h", h);
    cr_cmd->add_option("--units", units);
    cr_cmd->add_option("--grid", grid);
    cr_cmd->add_option("--seed", seed);
    cr_cmd->add_option("--out", out);

    // overrides stay at zero unless given, so scenario defaults survive
    int v_units = 0;
    double v_max_step = 0.0, v_grid_h = 0.0;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--scenario", scenario_name,
                           "ball-polynomials | nonaxisym-union | single-slice-tube");
    verify_cmd->add_option("--scenario-file", scenario_file);
    auto* seed_opt = verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--units", v_units);
    verify_cmd->add_option("--domain-units", domain_units);
    verify_cmd->add_option("--max-step", v_max_step);
    verify_cmd->add_option("--grid-h", v_grid_h);
    verify_cmd->add_option("--tol", tol);
    verify_cmd->add_option("--format", format, "table | json | csv");
    verify_cmd->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval_cmd) return run_eval(fn_path, domain_path, points_path, out);
        if (*stem_cmd) {
            return run_stem(fn_path, domain_path, path_path, units,
                            effective_seed(seed), max_step, out);
        }
        if (*star_cmd) {
            return run_star(fn_path, g_path, domain_path, domain2_path,
                            points_path, units, effective_seed(seed), max_step,
                            override_hyp, out);
        }
        if (*check_cmd) {
            return run_check_domain(domain_path, suite, domain2_path, units,
                                    effective_seed(seed), grid_h, max_step,
                                    format, out);
        }
        if (*cr_cmd) {
            return run_cr_check(fn_path, domain_path, h, units, grid,
                                effective_seed(seed), out);
        }
        if (*verify_cmd) {
            return run_verify(scenario_name, scenario_file, seed,
                              seed_opt->count() > 0, v_units, domain_units,
                              v_max_step, v_grid_h, tol, format, out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
