// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dunklosc/identity_suite.hpp"
#include "dunklosc/oracle.hpp"
#include "dunklosc/report.hpp"

using namespace dunkl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool report_line(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s (%s)\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    return pass;
}

// ---------------------------------------------------------------- criterion 1
// Operator identity suite: exact zeros in rational mode, <= 1e-12 otherwise,
// at N = 16 and 32 over the (m,n) x mu x (alpha,beta) grid, within 60 s.
bool criterion_1() {
    const auto t0 = Clock::now();
    bool ok = true;
    int runs = 0;
    double worst = 0.0;
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}})
        for (double mu : {0.0, 0.3})
            for (int variant = 0; variant < 3; ++variant) {
                ModelParams p;
                p.m = m;
                p.n = n;
                p.mu_x = mu;
                p.mu_y = mu;
                if (variant > 0) p.model = Model::singular;
                if (variant == 2) {
                    p.alpha_x = 2.0;
                    p.beta_x = 2.0;
                    p.alpha_y = 2.0;
                    p.beta_y = 2.0;
                }
                for (int n_basis : {16, 32}) {
                    auto rep = run_identity_suite(p, n_basis);
                    ++runs;
                    ok = ok && rep.all_pass();
                    if (rep.exact_mode)
                        ok = ok && rep.max_residual() == 0.0;
                    else
                        worst = std::max(worst, rep.max_residual());
                }
            }
    ok = ok && worst <= 1e-12;
    const double dt = seconds_since(t0);
    ok = ok && dt <= 60.0;
    std::ostringstream d;
    d << runs << " suites, float-mode max residual " << worst << ", " << dt << " s";
    return report_line(1, ok, d.str());
}

// ---------------------------------------------------------------- criterion 2
// Generic engine vs closed-form structure functions at 1e4 random points per
// model/sector for (m,n) in {(1,1),(2,1),(3,2)}.
bool criterion_2() {
    std::mt19937 rng(20260824);
    std::uniform_real_distribution<double> ux(-2.0, 3.0), uu(-2.0, 2.0), ue(0.0, 15.0);
    bool ok = true;
    double worst = 0.0;
    long points = 0;
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {3, 2}}) {
        ModelParams ho;
        ho.m = m;
        ho.n = n;
        ho.mu_x = 0.3;
        ho.mu_y = 0.7;
        ModelParams sho = ho;
        sho.model = Model::singular;
        sho.alpha_x = 1.0;
        sho.beta_x = 0.5;
        sho.alpha_y = 1.0;
        sho.beta_y = 0.5;
        for (const auto& p : {ho, sho}) {
            auto sx = make_axis_spec(p.model, p.x_axis());
            auto sy = make_axis_spec(p.model, p.y_axis());
            auto osc = osc_params(p);
            for (int s_x : {+1, -1})
                for (int s_y : {+1, -1}) {
                    auto g1 = GradingSector::reflection(s_x);
                    auto g2 = GradingSector::reflection(s_y);
                    for (int it = 0; it < 10000; ++it) {
                        const double x = ux(rng), u = uu(rng), e = ue(rng);
                        const double generic = structure_phi(osc, sx, sy, x, u, e, g1, g2);
                        const double closed = phi_closed(p, x, u, e, s_x, s_y);
                        const double rel =
                            std::abs(generic - closed) / (1.0 + std::abs(closed));
                        worst = std::max(worst, rel);
                        ok = ok && rel <= 1e-12;
                        ++points;
                    }
                }
        }
    }
    std::ostringstream d;
    d << points << " points, worst relative deviation " << worst;
    return report_line(2, ok, d.str());
}

// ---------------------------------------------------------------- criterion 3
// Structure-function contracts on every enumerated level with p <= 6, plus
// reduced-vs-unreduced agreement at the solved (u, E).
bool criterion_3() {
    std::vector<ModelParams> configs;
    {
        ModelParams p;
        p.m = 2;
        p.n = 1;
        p.mu_x = 0.3;
        p.mu_y = 0.7;
        configs.push_back(p);
        p.m = 3;
        p.n = 2;
        configs.push_back(p);
        p.model = Model::singular;
        p.alpha_x = 1.0;
        p.beta_x = 0.5;
        p.alpha_y = 1.0;
        p.beta_y = 0.5;
        configs.push_back(p);
        ModelParams q;
        q.model = Model::singular;
        q.m = 1;
        q.n = 1;
        q.alpha_x = 2.0;
        q.beta_x = 2.0;
        configs.push_back(q);
    }
    bool ok = true;
    int levels = 0;
    for (const auto& p : configs) {
        auto res = enumerate_levels(p, 6);
        ok = ok && !res.levels.empty();
        for (const auto& lvl : res.levels) {
            ++levels;
            const int sx = lvl.sector.s_x, sy = lvl.sector.s_y;
            // relative to the polynomial's magnitude at the flanking points
            double scale = 1.0;
            for (double v : lvl.phi_samples) scale = std::max(scale, std::abs(v));
            scale = std::max(scale, std::abs(phi_closed(p, -1.0, lvl.u, lvl.energy, sx, sy)));
            scale = std::max(scale,
                             std::abs(phi_closed(p, lvl.p + 2.0, lvl.u, lvl.energy, sx, sy)));
            ok = ok && std::abs(phi_closed(p, 0.0, lvl.u, lvl.energy, sx, sy)) <= 1e-10 * scale;
            ok = ok && std::abs(phi_closed(p, lvl.p + 1.0, lvl.u, lvl.energy, sx, sy)) <=
                           1e-10 * scale;
            for (int x = 1; x <= lvl.p; ++x) {
                const double full = phi_closed(p, x, lvl.u, lvl.energy, sx, sy);
                const double red = phi_reduced(p, x, lvl.p, lvl.sector);
                ok = ok && full > 0.0;
                ok = ok && std::abs(full - red) <= 1e-10 * scale;
            }
        }
    }
    std::ostringstream d;
    d << levels << " levels with p <= 6 across " << configs.size() << " configs";
    return report_line(3, ok, d.str());
}

// ---------------------------------------------------------------- criterion 4
// Triple agreement (closed forms / filtered algebraic / Galerkin oracle) over
// the full parameter grid at E_max = 16 m n, within 5 min.
bool criterion_4() {
    const auto t0 = Clock::now();
    std::vector<ModelParams> grid;
    const double mus[] = {0.0, 0.3, 0.7};
    const double couplings[][4] = {
        {0.0, 0.0, 0.0, 0.0}, {2.0, 2.0, 0.0, 0.0}, {1.0, 0.5, 1.0, 0.5}};
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {3, 2}})
        for (double mu_x : mus)
            for (double mu_y : mus) {
                ModelParams p;
                p.m = m;
                p.n = n;
                p.mu_x = mu_x;
                p.mu_y = mu_y;
                grid.push_back(p);
                for (const auto& c : couplings) {
                    ModelParams s = p;
                    s.model = Model::singular;
                    s.alpha_x = c[0];
                    s.beta_x = c[1];
                    s.alpha_y = c[2];
                    s.beta_y = c[3];
                    grid.push_back(s);
                }
            }
    bool ok = true;
    bool aniso_remainder = false;
    double worst_match = 0.0, worst_oracle = 0.0, worst_conv = 0.0;
    long matched_total = 0;
    for (const auto& p : grid) {
        const double e_max = 16.0 * p.m * p.n;
        const int p_max = static_cast<int>(e_max / (2.0 * p.m * p.n)) + 2;
        auto algebraic = enumerate_levels_parallel(p, p_max);
        auto physical = enumerate_physical(p, e_max);
        auto match = filter_algebraic(algebraic.levels, p, e_max);
        ok = ok && match.physical_only.empty();
        ok = ok && match.matched.size() == physical.size();
        for (const auto& mp : match.matched) {
            const double rel = std::abs(mp.physical.energy - mp.algebraic.energy) /
                               (1.0 + std::abs(mp.physical.energy));
            worst_match = std::max(worst_match, rel);
            ok = ok && rel <= 1e-9;
        }
        matched_total += static_cast<long>(match.matched.size());
        if (p.m != p.n && !match.algebraic_only.empty()) aniso_remainder = true;

        auto oracle = spectrum_2d(p, e_max, 64);
        worst_conv = std::max(worst_conv, oracle.max_convergence);
        ok = ok && oracle.converged && oracle.max_convergence <= 1e-10;
        auto cmp = compare_spectra(oracle, physical, 1e-8);
        ok = ok && cmp.unmatched_physical.empty();
        ok = ok && cmp.matched == static_cast<int>(physical.size());
        worst_oracle = std::max(worst_oracle, cmp.max_deviation);
        ok = ok && cmp.max_deviation <= 1e-8;
    }
    ok = ok && aniso_remainder;
    const double dt = seconds_since(t0);
    ok = ok && dt <= 300.0;
    std::ostringstream d;
    d << grid.size() << " configs, " << matched_total << " matches, worst match "
      << worst_match << ", worst oracle deviation " << worst_oracle << ", convergence "
      << worst_conv << ", " << dt << " s";
    return report_line(4, ok, d.str());
}

// ---------------------------------------------------------------- criterion 5
// Reduction limits: undeformed parameters give the anisotropic harmonic
// oscillator per parity sector; singular at alpha = beta = 0 reproduces the
// Dunkl model level-by-level (exactly in rational mode).
bool criterion_5() {
    bool ok = true;
    // (i) mu = alpha = beta = 0 against the parity-tagged HO spectrum
    for (auto [m, n] : {std::pair{1, 1}, {3, 2}})
        for (int variant = 0; variant < 2; ++variant) {
            ModelParams p;
            p.m = m;
            p.n = n;
            if (variant == 1) p.model = Model::singular;
            const double e_max = 12.0 * m;
            auto levels = enumerate_physical(p, e_max);
            std::vector<std::tuple<double, int, int>> expect;
            for (int jx = 0; jx < 64; ++jx)
                for (int jy = 0; jy < 64; ++jy) {
                    const double e = m * (jx + 0.5) + n * (jy + 0.5);
                    if (e <= e_max)
                        expect.emplace_back(e, jx % 2 ? -1 : 1, jy % 2 ? -1 : 1);
                }
            std::sort(expect.begin(), expect.end());
            ok = ok && levels.size() == expect.size();
            if (levels.size() == expect.size())
                for (std::size_t i = 0; i < expect.size(); ++i) {
                    auto [e, sx, sy] = expect[i];
                    ok = ok && std::abs(levels[i].energy - e) <= 1e-12 * (1.0 + e);
                    ok = ok && levels[i].s_x == sx && levels[i].s_y == sy;
                }
        }
    // (ii) singular at alpha = beta = 0 vs the Dunkl model, double precision
    for (auto [m, n] : {std::pair{2, 1}, {3, 2}}) {
        ModelParams hd;
        hd.m = m;
        hd.n = n;
        hd.mu_x = 0.3;
        hd.mu_y = 0.7;
        ModelParams hs = hd;
        hs.model = Model::singular;
        auto pd = enumerate_physical(hd, 20.0);
        auto ps = enumerate_physical(hs, 20.0);
        ok = ok && pd.size() == ps.size();
        if (pd.size() == ps.size())
            for (std::size_t i = 0; i < pd.size(); ++i) {
                ok = ok && std::abs(pd[i].energy - ps[i].energy) <= 1e-12;
                ok = ok && pd[i].s_x == ps[i].s_x && pd[i].s_y == ps[i].s_y;
            }
        auto ad = enumerate_levels(hd, 6).levels;
        auto as = enumerate_levels(hs, 6).levels;
        ok = ok && ad.size() == as.size();
        if (ad.size() == as.size())
            for (std::size_t i = 0; i < ad.size(); ++i)
                ok = ok && std::abs(ad[i].energy - as[i].energy) <= 1e-10;
    }
    // (iii) the same reduction as an exact rational identity (branch signs flip)
    const Rational mu(3, 10);
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}})
        for (int p_idx = 0; p_idx <= 5; ++p_idx)
            for (int s_x : {+1, -1})
                for (int s_y : {+1, -1})
                    for (int e1 : {+1, -1})
                        for (int e2 : {+1, -1})
                            for (int k1 = 1; k1 <= n; ++k1)
                                for (int k2 = 1; k2 <= m; ++k2) {
                                    Sector sho{s_x, s_y, e1, e2, k1, k2};
                                    Sector ho{s_x, s_y, -e1, -e2, k1, k2};
                                    auto es = energy_SHO_exact(
                                        p_idx, m, n, mu, mu, Rational(0), Rational(0),
                                        Rational(0), Rational(0), sho);
                                    ok = ok && es.has_value();
                                    if (es)
                                        ok = ok && *es == energy_HO_exact(p_idx, m, n, mu, mu, ho);
                                }
    return report_line(5, ok, "HO limit, Dunkl limit (double and exact rational)");
}

// ---------------------------------------------------------------- criterion 6
// k^+- inversion round-trip and admissibility on 1e3 random triples.
bool criterion_6() {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> um(0.0, 2.0), ua(-0.2, 3.0), ub(-1.0, 1.0);
    bool ok = true;
    int accepted = 0, rejected = 0;
    double worst = 0.0;
    while (accepted < 1000) {
        const double mu = um(rng), alpha = ua(rng), beta = ub(rng);
        SingularSectorData d;
        try {
            d = k_pm_from_alpha_beta(alpha, beta, mu);
        } catch (const std::domain_error&) {
            ++rejected;
            continue;
        }
        const double a_rec = 2.0 * d.k_plus * (d.k_plus + mu - 0.5) +
                             2.0 * d.k_minus * (d.k_minus + mu + 0.5);
        const double b_rec = 2.0 * d.k_plus * (d.k_plus + mu - 0.5) -
                             2.0 * d.k_minus * (d.k_minus + mu + 0.5);
        const double rel = std::max(std::abs(a_rec - alpha) / (1.0 + std::abs(alpha)),
                                    std::abs(b_rec - beta) / (1.0 + std::abs(beta)));
        worst = std::max(worst, rel);
        ok = ok && rel <= 1e-12;
        ok = ok && d.nu_plus + 0.5 > 0.0 && d.nu_minus + 1.5 > 0.0;
        ok = ok && d.nu_plus == 2.0 * d.k_plus + mu && d.nu_minus == 2.0 * d.k_minus + mu;
        ++accepted;
    }
    std::ostringstream d;
    d << accepted << " admissible triples (" << rejected
      << " inadmissible skipped), worst round-trip " << worst;
    return report_line(6, ok, d.str());
}

// ---------------------------------------------------------------- criterion 7
// Repeated `spectrum` CLI runs with identical config are byte-identical.
bool criterion_7() {
    const std::string cli = DUNKLOSC_CLI_PATH;
    const auto tmp = std::filesystem::temp_directory_path();
    auto slurp = [](const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    const std::vector<std::string> configs = {
        "--model dunkl --m 2 --n 1 --mu-x 0.3 --mu-y 0.7 --e-max 24",
        "--model singular --m 1 --n 1 --mu-x 0.3 --alpha-x 1 --beta-x 0.5 --e-max 12"};
    bool ok = true;
    std::size_t bytes = 0;
    for (std::size_t c = 0; c < configs.size(); ++c) {
        std::vector<std::string> payloads;
        for (int run = 0; run < 2; ++run) {
            const auto out =
                tmp / ("dunklosc_accept_" + std::to_string(c) + "_" + std::to_string(run) +
                       ".json");
            const std::string cmd =
                '"' + cli + "\" spectrum " + configs[c] + " --out " + out.string();
            ok = ok && std::system(cmd.c_str()) == 0;
            payloads.push_back(slurp(out));
            std::filesystem::remove(out);
        }
        ok = ok && !payloads[0].empty() && payloads[0] == payloads[1];
        bytes += payloads[0].size();
    }
    std::ostringstream d;
    d << configs.size() << " configs run twice, " << bytes << " bytes compared";
    return report_line(7, ok, d.str());
}

} // namespace

int main() {
    bool all = true;
    all &= criterion_1();
    all &= criterion_2();
    all &= criterion_3();
    all &= criterion_4();
    all &= criterion_5();
    all &= criterion_6();
    all &= criterion_7();
    std::printf("%s\n", all ? "all criteria passed" : "ACCEPTANCE FAILURES PRESENT");
    return all ? 0 : 1;
}
