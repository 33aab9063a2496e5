#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dunklosc/identity_suite.hpp"
#include "dunklosc/oracle.hpp"
#include "dunklosc/report.hpp"
#include "dunklosc/spectra_algebraic.hpp"
#include "dunklosc/spectra_physical.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

struct Options {
    std::string model = "dunkl";
    int m = 1, n = 1;
    double mu_x = 0.0, mu_y = 0.0;
    double alpha_x = 0.0, beta_x = 0.0, alpha_y = 0.0, beta_y = 0.0;
    int p_max = -1;
    double e_max = -1.0;
    int basis_size = 0; // 0 = command default
    std::string format = "json";
    std::string out;
    double tol = -1.0;
    std::string mu_list = "0,0.3,0.7";
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--model", o.model, "dunkl | singular")
        ->check(CLI::IsMember({"dunkl", "singular"}));
    cmd->add_option("--m", o.m, "x-axis frequency (positive integer)");
    cmd->add_option("--n", o.n, "y-axis frequency (positive integer)");
    cmd->add_option("--mu-x", o.mu_x, "Dunkl parameter, x axis");
    cmd->add_option("--mu-y", o.mu_y, "Dunkl parameter, y axis");
    cmd->add_option("--alpha-x", o.alpha_x, "inverse-square coupling, x axis (singular)");
    cmd->add_option("--beta-x", o.beta_x, "reflection coupling, x axis (singular)");
    cmd->add_option("--alpha-y", o.alpha_y, "inverse-square coupling, y axis (singular)");
    cmd->add_option("--beta-y", o.beta_y, "reflection coupling, y axis (singular)");
    cmd->add_option("--p-max", o.p_max, "largest representation index p");
    cmd->add_option("--e-max", o.e_max, "energy cutoff (default 16 m n)");
    cmd->add_option("--basis-size", o.basis_size, "matrix truncation size");
    cmd->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--tol", o.tol, "tolerance override");
}

dunkl::ModelParams to_params(const Options& o) {
    dunkl::ModelParams p;
    p.model = o.model == "dunkl" ? dunkl::Model::dunkl : dunkl::Model::singular;
    p.m = o.m;
    p.n = o.n;
    p.mu_x = o.mu_x;
    p.mu_y = o.mu_y;
    p.alpha_x = o.alpha_x;
    p.beta_x = o.beta_x;
    p.alpha_y = o.alpha_y;
    p.beta_y = o.beta_y;
    p.validate();
    return p;
}

double default_e_max(const Options& o) {
    return o.e_max > 0 ? o.e_max : 16.0 * o.m * o.n;
}

int default_p_max(const Options& o, double e_max) {
    return o.p_max >= 0 ? o.p_max : static_cast<int>(e_max / (2.0 * o.m * o.n)) + 2;
}

void emit(const Options& o, const dunkl::Json& report) {
    const std::string text =
        o.format == "csv" ? dunkl::dump_csv(report) : dunkl::dump_json(report);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + o.out);
        f << text;
    }
}

int cmd_verify_algebra(const Options& o) {
    const auto params = to_params(o);
    std::vector<int> sizes = o.basis_size > 0 ? std::vector<int>{o.basis_size}
                                              : std::vector<int>{16, 32};
    const double tol = o.tol > 0 ? o.tol : 1e-12;
    std::vector<dunkl::IdentitySuiteReport> suites;
    bool all_pass = true;
    for (int n_basis : sizes) {
        suites.push_back(dunkl::run_identity_suite(params, n_basis, tol));
        all_pass = all_pass && suites.back().all_pass();
    }
    dunkl::ReportConfig cfg{"verify-algebra", params, 0.0, 0, sizes.back(), tol};
    dunkl::Json report = dunkl::make_report(cfg);
    dunkl::attach_identity_suites(report, suites);
    report["diagnostics"]["all_pass"] = all_pass;
    emit(o, report);
    return all_pass ? 0 : 1;
}

int cmd_spectrum(const Options& o) {
    const auto params = to_params(o);
    const double e_max = default_e_max(o);
    const int p_max = default_p_max(o, e_max);
    const double tol = o.tol > 0 ? o.tol : 1e-9;
    const auto algebraic = dunkl::enumerate_levels_parallel(params, p_max);
    const auto physical = dunkl::enumerate_physical(params, e_max);
    const auto matches = dunkl::filter_algebraic(algebraic.levels, params, e_max, tol);
    dunkl::ReportConfig cfg{"spectrum", params, e_max, p_max, 0, tol};
    dunkl::Json report = dunkl::make_report(cfg);
    dunkl::attach_levels(report, algebraic, physical, matches);
    emit(o, report);
    return 0;
}

int cmd_compare(const Options& o) {
    const auto params = to_params(o);
    const double e_max = default_e_max(o);
    const int n_basis = o.basis_size > 0 ? o.basis_size : 64;
    const double tol = o.tol >= 0 ? o.tol : 1e-8;
    const auto oracle = dunkl::spectrum_2d(params, e_max, n_basis);
    const auto physical = dunkl::enumerate_physical(params, e_max);
    // levels near the cutoff may be missing from one side; compare below it
    std::vector<dunkl::PhysicalLevel> window;
    for (const auto& lv : physical)
        if (lv.energy <= e_max - 1e-6) window.push_back(lv);
    dunkl::SpectrumReport oracle_window;
    oracle_window.max_convergence = oracle.max_convergence;
    oracle_window.converged = oracle.converged;
    for (const auto& lv : oracle.levels)
        if (lv.energy <= e_max - 1e-6) oracle_window.levels.push_back(lv);
    const auto cmp = dunkl::compare_spectra(oracle_window, window, tol);
    dunkl::ReportConfig cfg{"compare", params, e_max, 0, n_basis, tol};
    dunkl::Json report = dunkl::make_report(cfg);
    for (const auto& lv : window) report["physical"].push_back(dunkl::to_json(lv));
    dunkl::attach_oracle(report, oracle_window, cmp);
    if (!oracle.converged)
        report["diagnostics"]["warning"] = "oracle convergence above tolerance";
    // each axis resolves at most basis_size/2 levels per sector
    const bool truncated =
        n_basis / 2 < static_cast<int>(e_max / (2.0 * params.m)) + 2 ||
        n_basis / 2 < static_cast<int>(e_max / (2.0 * params.n)) + 2;
    if (truncated)
        report["diagnostics"]["truncation_warning"] =
            "e-max exceeds the oracle range at this --basis-size";
    emit(o, report);
    return (cmp.pass(tol) && oracle.converged) ? 0 : 1;
}

int cmd_sweep(const Options& o) {
    const auto base = to_params(o);
    std::vector<double> mus;
    {
        std::stringstream ss(o.mu_list);
        std::string item;
        while (std::getline(ss, item, ',')) mus.push_back(std::stod(item));
        if (mus.empty()) throw std::invalid_argument("sweep: empty --mu-list");
    }
    const double e_max = default_e_max(o);
    const int p_max = default_p_max(o, e_max);
    const double tol = o.tol > 0 ? o.tol : 1e-9;

    const int total = static_cast<int>(mus.size() * mus.size());
    std::vector<dunkl::Json> points(total);
    bool any_unmatched = false;
#pragma omp parallel for schedule(dynamic) reduction(|| : any_unmatched)
    for (int idx = 0; idx < total; ++idx) {
        dunkl::ModelParams p = base;
        p.mu_x = mus[idx / mus.size()];
        p.mu_y = mus[idx % mus.size()];
        const auto algebraic = dunkl::enumerate_levels(p, p_max);
        const auto physical = dunkl::enumerate_physical(p, e_max);
        const auto matches = dunkl::filter_algebraic(algebraic.levels, p, e_max, tol);
        any_unmatched = any_unmatched || !matches.physical_only.empty();
        points[idx] = dunkl::Json{{"mu_x", p.mu_x},
                                  {"mu_y", p.mu_y},
                                  {"algebraic_count", algebraic.levels.size()},
                                  {"physical_count", physical.size()},
                                  {"matched", matches.matched.size()},
                                  {"physical_only", matches.physical_only.size()},
                                  {"algebraic_only", matches.algebraic_only.size()}};
    }
    dunkl::ReportConfig cfg{"sweep", base, e_max, p_max, 0, tol};
    dunkl::Json report = dunkl::make_report(cfg);
    report["sweep"] = points;
    emit(o, report);
    return any_unmatched ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra of 2D anisotropic (singular) Dunkl oscillators"};
    app.require_subcommand(1);
    Options o;
    auto* verify = app.add_subcommand("verify-algebra", "run the operator identity suite");
    auto* spectrum = app.add_subcommand("spectrum", "enumerate and match energy levels");
    auto* compare = app.add_subcommand("compare", "cross-validate against diagonalization");
    auto* sweep = app.add_subcommand("sweep", "spectrum pipeline over a mu grid");
    for (auto* cmd : {verify, spectrum, compare, sweep}) add_common(cmd, o);
    sweep->add_option("--mu-list", o.mu_list, "comma-separated mu values for the grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify_algebra(o);
        if (spectrum->parsed()) return cmd_spectrum(o);
        if (compare->parsed()) return cmd_compare(o);
        return cmd_sweep(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
