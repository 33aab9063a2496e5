#include "dunklosc/spectra_physical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dunkl {

double physical_energy_HO(int n1x, int n1y, int s_x, int s_y, const ModelParams& params) {
    const double m = params.m, n = params.n;
    return 2.0 * m * n1x + 2.0 * n * n1y + m * (params.mu_x + 1.0 - 0.5 * s_x) +
           n * (params.mu_y + 1.0 - 0.5 * s_y);
}

namespace {

// one root family: k^2 + c k - d/4 = 0 scaled as k = (-c +- sqrt(c^2+d))/2
struct RootPair {
    double cont; // root continuous with d -> 0
    double alt;
};

RootPair k_roots(double c, double d) {
    double disc = c * c + d;
    if (disc < 0) throw std::domain_error("k_pm_from_alpha_beta: negative discriminant");
    double r = std::sqrt(disc);
    double sgn = (c >= 0) ? 1.0 : -1.0;
    return {0.5 * (-c + sgn * r), 0.5 * (-c - sgn * r)};
}

} // namespace

SingularSectorData k_pm_from_alpha_beta(double alpha, double beta, double mu) {
    RootPair plus = k_roots(mu - 0.5, alpha + beta);
    RootPair minus = k_roots(mu + 0.5, alpha - beta);

    auto pick = [mu](const RootPair& r, double floor_shift) {
        // admissibility: 2k + mu + floor_shift > 0
        if (2.0 * r.cont + mu + floor_shift > 0) return r.cont;
        if (2.0 * r.alt + mu + floor_shift > 0) return r.alt;
        throw std::domain_error("k_pm_from_alpha_beta: no admissible root");
    };
    SingularSectorData out;
    out.k_plus = pick(plus, 0.5);
    out.k_minus = pick(minus, 1.5);
    out.nu_plus = 2.0 * out.k_plus + mu;
    out.nu_minus = 2.0 * out.k_minus + mu;

    double a_rec = 2.0 * out.k_plus * (out.k_plus + mu - 0.5) +
                   2.0 * out.k_minus * (out.k_minus + mu + 0.5);
    double b_rec = 2.0 * out.k_plus * (out.k_plus + mu - 0.5) -
                   2.0 * out.k_minus * (out.k_minus + mu + 0.5);
    if (std::abs(a_rec - alpha) > 1e-12 * (1.0 + std::abs(alpha)) ||
        std::abs(b_rec - beta) > 1e-12 * (1.0 + std::abs(beta)))
        throw std::logic_error("k_pm_from_alpha_beta: forward map verification failed");
    return out;
}

std::optional<double> nu_physical(const ModelParams& params, char axis, int s) {
    AxisParams ax = (axis == 'x') ? params.x_axis() : params.y_axis();
    if (params.model == Model::dunkl) return ax.mu;
    try {
        SingularSectorData d = k_pm_from_alpha_beta(ax.alpha, ax.beta, ax.mu);
        return (s > 0) ? d.nu_plus : d.nu_minus;
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

double physical_energy_SHO(int n1x, int n1y, int s_x, int s_y, const ModelParams& params) {
    auto nx = nu_physical(params, 'x', s_x);
    auto ny = nu_physical(params, 'y', s_y);
    if (!nx || !ny) throw std::domain_error("physical_energy_SHO: inadmissible sector");
    const double m = params.m, n = params.n;
    return 2.0 * m * n1x + 2.0 * n * n1y + m * (*nx + 1.0 - 0.5 * s_x) +
           n * (*ny + 1.0 - 0.5 * s_y);
}

namespace {

double physical_energy(const ModelParams& params, int n1x, int n1y, int s_x, int s_y) {
    return params.model == Model::dunkl ? physical_energy_HO(n1x, n1y, s_x, s_y, params)
                                        : physical_energy_SHO(n1x, n1y, s_x, s_y, params);
}

} // namespace

std::vector<PhysicalLevel> enumerate_physical(const ModelParams& params, double e_max) {
    params.validate();
    std::vector<PhysicalLevel> out;
    for (int s_x : {+1, -1}) {
        for (int s_y : {+1, -1}) {
            if (params.model == Model::singular &&
                (!nu_physical(params, 'x', s_x) || !nu_physical(params, 'y', s_y)))
                continue;
            double base = physical_energy(params, 0, 0, s_x, s_y);
            if (base > e_max) continue;
            int max_x = static_cast<int>((e_max - base) / (2.0 * params.m)) + 1;
            int max_y = static_cast<int>((e_max - base) / (2.0 * params.n)) + 1;
            for (int nx = 0; nx <= max_x; ++nx)
                for (int ny = 0; ny <= max_y; ++ny) {
                    double e = physical_energy(params, nx, ny, s_x, s_y);
                    if (e <= e_max) out.push_back({e, nx, ny, s_x, s_y});
                }
        }
    }
    std::sort(out.begin(), out.end(), [](const PhysicalLevel& a, const PhysicalLevel& b) {
        return std::tuple(a.energy, a.s_x, a.s_y, a.n1x, a.n1y) <
               std::tuple(b.energy, b.s_x, b.s_y, b.n1x, b.n1y);
    });
    return out;
}

namespace {

// branch sign of one axis: which of the two algebraic nu roots is the
// physical one (equal-distance cases default to +1)
int predict_eps(const ModelParams& params, char axis, int s) {
    if (params.model == Model::dunkl) return -s;
    AxisParams ax = (axis == 'x') ? params.x_axis() : params.y_axis();
    auto nu_alg = nu_sector(ax.mu, ax.alpha, ax.beta, s);
    auto nu_phys = nu_physical(params, axis, s);
    if (!nu_alg || !nu_phys) return +1;
    double mirror = s - *nu_alg; // the other root of the same radicand
    return (std::abs(*nu_phys - *nu_alg) <= std::abs(*nu_phys - mirror)) ? +1 : -1;
}

} // namespace

MatchReport filter_algebraic(const std::vector<AlgebraicLevel>& levels, const ModelParams& params,
                             double e_max, double tol) {
    MatchReport report;
    // several degenerate physical states share one representation, so the
    // match is many-to-one; `hit` only tracks which levels were ever used
    std::vector<bool> hit(levels.size(), false);

    for (const PhysicalLevel& ph : enumerate_physical(params, e_max)) {
        int l1 = ph.n1x % params.n, l2 = ph.n1y % params.m;
        Sector want;
        want.s_x = ph.s_x;
        want.s_y = ph.s_y;
        want.eps1 = predict_eps(params, 'x', ph.s_x);
        want.eps2 = predict_eps(params, 'y', ph.s_y);
        want.k1 = params.n - l1;
        want.k2 = params.m - l2;
        int p = ph.n1x / params.n + ph.n1y / params.m;

        auto close = [&](double a, double b) { return std::abs(a - b) <= tol * (1.0 + std::abs(a)); };
        int found = -1;
        bool exact = false;
        for (std::size_t i = 0; i < levels.size(); ++i) {
            if (levels[i].sector == want && levels[i].p == p && close(ph.energy, levels[i].energy)) {
                found = static_cast<int>(i);
                exact = true;
                break;
            }
        }
        if (found < 0) {
            // fall back to an energy + parity match in case of branch degeneracy
            for (std::size_t i = 0; i < levels.size(); ++i) {
                if (levels[i].sector.s_x == ph.s_x && levels[i].sector.s_y == ph.s_y &&
                    close(ph.energy, levels[i].energy)) {
                    found = static_cast<int>(i);
                    break;
                }
            }
        }
        if (found >= 0) {
            hit[found] = true;
            report.matched.push_back({ph, levels[found], exact});
        } else {
            report.physical_only.push_back(ph);
        }
    }
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (!hit[i] && levels[i].energy <= e_max + 1e-9) report.algebraic_only.push_back(levels[i]);
    return report;
}

} // namespace dunkl
