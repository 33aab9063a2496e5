#include "dunklosc/spectra_algebraic.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dunkl {

// evaluated in long double: the products amplify roundoff by the magnitude of
// their largest factor, which the boundary-zero contracts cannot absorb
double phi_HO(double x, double u, double e_val, const ModelParams& params, int s_x, int s_y) {
    using LD = long double;
    const LD m = params.m, n = params.n, mux = params.mu_x, muy = params.mu_y;
    const LD w = 0.5L * e_val + 2.0L * m * n * (static_cast<LD>(x) + u);
    const LD v = 0.5L * e_val - 2.0L * m * n * (static_cast<LD>(x) + u);
    LD acc = 1.0L;
    for (int i = 1; i <= params.n; ++i) {
        LD a = w - (n - i) * 2.0L * m;
        acc *= 0.25L * (a - 1.5L * m + m * mux * s_x) * (a - 0.5L * m - m * mux * s_x);
    }
    for (int j = 1; j <= params.m; ++j) {
        LD c = v + 2.0L * j * n;
        acc *= 0.25L * (c - 1.5L * n + n * muy * s_y) * (c - 0.5L * n - n * muy * s_y);
    }
    return static_cast<double>(acc);
}

double u_branch_HO(double e_val, const ModelParams& params, int s_x, int eps1, int k1) {
    const long double m = params.m, n = params.n;
    return static_cast<double>(
        -(0.5L * e_val - (n - k1) * 2.0L * m - m - 0.5L * eps1 * m +
          eps1 * m * static_cast<long double>(params.mu_x) * s_x) /
        (2.0L * m * n));
}

double energy_HO(int p, const ModelParams& params, const Sector& sec) {
    return static_cast<double>(detail::energy_ho_t<long double>(p, params.m, params.n,
                                                                params.mu_x, params.mu_y, sec));
}

double phi_HO_reduced(double x, int p, const ModelParams& params, const Sector& sec) {
    using LD = long double;
    const LD m = params.m, n = params.n;
    LD acc = 1.0L;
    for (int i = 1; i <= params.n; ++i) {
        LD z = 2.0L * m * n * x + (i - sec.k1) * 2.0L * m;
        acc *= 0.25L * z * (z + sec.eps1 * m * (1.0L - 2.0L * static_cast<LD>(params.mu_x) * sec.s_x));
    }
    for (int j = 1; j <= params.m; ++j) {
        LD y = 2.0L * m * n * (p + 1) - 2.0L * m * n * x + 2.0L * n * (j - sec.k2);
        acc *= 0.25L * y * (y + sec.eps2 * n * (1.0L - 2.0L * static_cast<LD>(params.mu_y) * sec.s_y));
    }
    return static_cast<double>(acc);
}

namespace {

std::optional<long double> nu_sector_l(double mu, double alpha, double beta, int s) {
    long double rad = detail::nu_radicand<long double>(mu, alpha, beta, s);
    if (rad < 0) return std::nullopt;
    return 0.5L * s - 0.5L * std::sqrt(rad);
}

} // namespace

std::optional<double> nu_sector(double mu, double alpha, double beta, int s) {
    auto nu = nu_sector_l(mu, alpha, beta, s);
    if (!nu) return std::nullopt;
    return static_cast<double>(*nu);
}

std::optional<Rational> nu_sector_exact(const Rational& mu, const Rational& alpha,
                                        const Rational& beta, int s) {
    Rational rad = detail::nu_radicand<Rational>(mu, alpha, beta, s);
    if (rad < 0) return std::nullopt;
    auto root = try_exact_sqrt(rad);
    if (!root) return std::nullopt;
    return Rational(s) / 2 - *root / 2;
}

namespace {

// both sector exponents, or nothing if either radicand is negative
std::optional<std::pair<long double, long double>> sho_nus(const ModelParams& p, int s_x, int s_y) {
    auto nx = nu_sector_l(p.mu_x, p.alpha_x, p.beta_x, s_x);
    auto ny = nu_sector_l(p.mu_y, p.alpha_y, p.beta_y, s_y);
    if (!nx || !ny) return std::nullopt;
    return std::make_pair(*nx, *ny);
}

} // namespace

double phi_SHO(double x, double u, double e_val, const ModelParams& params, int s_x, int s_y) {
    auto nus = sho_nus(params, s_x, s_y);
    if (!nus) throw std::domain_error("phi_SHO: sector rejected (negative radicand)");
    using LD = long double;
    const auto [nu_x, nu_y] = *nus;
    const LD m = params.m, n = params.n;
    const LD w = 0.5L * e_val + 2.0L * m * n * (static_cast<LD>(x) + u);
    const LD v = 0.5L * e_val - 2.0L * m * n * (static_cast<LD>(x) + u);
    LD acc = 1.0L;
    for (int i = 1; i <= params.n; ++i) {
        LD a = w - (n - i) * 2.0L * m;
        acc *= (a - m * (1.0L - 0.5L * s_x + nu_x)) * (a - m * (1.0L + 0.5L * s_x - nu_x));
    }
    for (int j = 1; j <= params.m; ++j) {
        LD c = v + 2.0L * j * n;
        acc *= (c - n * (1.0L - 0.5L * s_y + nu_y)) * (c - n * (1.0L + 0.5L * s_y - nu_y));
    }
    return static_cast<double>(acc);
}

double u_branch_SHO(double e_val, const ModelParams& params, int s_x, int eps1, int k1) {
    auto nu_x = nu_sector_l(params.mu_x, params.alpha_x, params.beta_x, s_x);
    if (!nu_x) throw std::domain_error("u_branch_SHO: sector rejected (negative radicand)");
    const long double m = params.m, n = params.n;
    return static_cast<double>(
        (-0.5L * e_val + (n - k1) * 2.0L * m + m * (1.0L - 0.5L * eps1 * s_x + eps1 * *nu_x)) /
        (2.0L * m * n));
}

double energy_SHO(int p, const ModelParams& params, const Sector& sec) {
    auto nus = sho_nus(params, sec.s_x, sec.s_y);
    if (!nus) throw std::domain_error("energy_SHO: sector rejected (negative radicand)");
    return static_cast<double>(detail::energy_sho_t<long double>(p, params.m, params.n,
                                                                 nus->first, nus->second, sec));
}

double phi_SHO_reduced(double x, int p, const ModelParams& params, const Sector& sec) {
    auto nus = sho_nus(params, sec.s_x, sec.s_y);
    if (!nus) throw std::domain_error("phi_SHO_reduced: sector rejected (negative radicand)");
    using LD = long double;
    const auto [nu_x, nu_y] = *nus;
    const LD m = params.m, n = params.n;
    LD acc = 1.0L;
    for (int i = 1; i <= params.n; ++i) {
        LD z = 2.0L * m * n * x + (i - sec.k1) * 2.0L * m;
        acc *= z * (z + m * (-sec.eps1 * sec.s_x + 2.0L * sec.eps1 * nu_x));
    }
    for (int j = 1; j <= params.m; ++j) {
        LD y = 2.0L * m * n * (p + 1) - 2.0L * m * n * x + 2.0L * n * (j - sec.k2);
        acc *= y * (y + n * (-sec.eps2 * sec.s_y + 2.0L * sec.eps2 * nu_y));
    }
    return static_cast<double>(acc);
}

double phi_closed(const ModelParams& params, double x, double u, double e_val, int s_x, int s_y) {
    return params.model == Model::dunkl ? phi_HO(x, u, e_val, params, s_x, s_y)
                                        : phi_SHO(x, u, e_val, params, s_x, s_y);
}

double u_branch(const ModelParams& params, double e_val, int s_x, int eps1, int k1) {
    return params.model == Model::dunkl ? u_branch_HO(e_val, params, s_x, eps1, k1)
                                        : u_branch_SHO(e_val, params, s_x, eps1, k1);
}

double energy_closed(const ModelParams& params, int p, const Sector& sec) {
    return params.model == Model::dunkl ? energy_HO(p, params, sec) : energy_SHO(p, params, sec);
}

double phi_reduced(const ModelParams& params, double x, int p, const Sector& sec) {
    return params.model == Model::dunkl ? phi_HO_reduced(x, p, params, sec)
                                        : phi_SHO_reduced(x, p, params, sec);
}

Rational energy_HO_exact(int p, int m, int n, const Rational& mu_x, const Rational& mu_y,
                         const Sector& sec) {
    return detail::energy_ho_t<Rational>(p, m, n, mu_x, mu_y, sec);
}

std::optional<Rational> energy_SHO_exact(int p, int m, int n, const Rational& mu_x,
                                         const Rational& mu_y, const Rational& alpha_x,
                                         const Rational& beta_x, const Rational& alpha_y,
                                         const Rational& beta_y, const Sector& sec) {
    auto nu_x = nu_sector_exact(mu_x, alpha_x, beta_x, sec.s_x);
    auto nu_y = nu_sector_exact(mu_y, alpha_y, beta_y, sec.s_y);
    if (!nu_x || !nu_y) return std::nullopt;
    return detail::energy_sho_t<Rational>(p, m, n, *nu_x, *nu_y, sec);
}

std::vector<std::pair<BranchLabel, UBranch>> model_u_branches(const ModelParams& params, int s_x) {
    params.validate();
    const double m = params.m, n = params.n;
    std::vector<std::pair<BranchLabel, UBranch>> out;
    std::optional<double> nu_x;
    if (params.model == Model::singular) {
        nu_x = nu_sector(params.mu_x, params.alpha_x, params.beta_x, s_x);
        if (!nu_x) return out; // sector rejected
    }
    for (int eps1 : {+1, -1}) {
        for (int k1 = 1; k1 <= params.n; ++k1) {
            UBranch br;
            br.slope = -1.0 / (4.0 * m * n);
            if (params.model == Model::dunkl) {
                br.intercept = ((n - k1) * 2.0 * m + m + 0.5 * eps1 * m -
                                eps1 * m * params.mu_x * s_x) /
                               (2.0 * m * n);
            } else {
                br.intercept =
                    ((n - k1) * 2.0 * m + m * (1.0 - 0.5 * eps1 * s_x + eps1 * *nu_x)) /
                    (2.0 * m * n);
            }
            out.push_back({BranchLabel{eps1, k1}, br});
        }
    }
    return out;
}

namespace {

// full contract check for one (sector, p) candidate; returns the level or
// nothing if the closed forms disagree (which would be a bug, not physics)
std::optional<AlgebraicLevel> make_level(const ModelParams& params, const Sector& sec, int p) {
    AlgebraicLevel lvl;
    lvl.p = p;
    lvl.sector = sec;
    lvl.energy = energy_closed(params, p, sec);
    lvl.u = u_branch(params, lvl.energy, sec.s_x, sec.eps1, sec.k1);

    std::vector<double> full(p + 2);
    double interior = 1.0;
    for (int x = 0; x <= p + 1; ++x) {
        full[x] = phi_closed(params, x, lvl.u, lvl.energy, sec.s_x, sec.s_y);
        if (x >= 1 && x <= p) interior = std::max(interior, std::abs(full[x]));
    }
    // magnitude reference for the boundary zeros: the roots sit between the
    // flanking integer points, whose values carry the polynomial's natural size
    const double scale = std::max(
        {interior, std::abs(phi_closed(params, -1.0, lvl.u, lvl.energy, sec.s_x, sec.s_y)),
         std::abs(phi_closed(params, p + 2.0, lvl.u, lvl.energy, sec.s_x, sec.s_y))});
    if (std::abs(full[0]) > 1e-10 * scale || std::abs(full[p + 1]) > 1e-10 * scale)
        return std::nullopt;
    for (int x = 1; x <= p; ++x) {
        double red = phi_reduced(params, x, p, sec);
        if (std::abs(red - full[x]) > 1e-10 * scale) return std::nullopt;
        if (!(red > 1e-9 * interior)) return std::nullopt; // strict positivity
        lvl.phi_samples.push_back(red);
    }
    return lvl;
}

void enumerate_sector_pair(const ModelParams& params, int s_x, int s_y, int p_max,
                           std::vector<AlgebraicLevel>& levels, bool& rejected) {
    rejected = false;
    if (params.model == Model::singular) {
        if (!nu_sector(params.mu_x, params.alpha_x, params.beta_x, s_x) ||
            !nu_sector(params.mu_y, params.alpha_y, params.beta_y, s_y)) {
            rejected = true;
            return;
        }
    }
    for (int eps1 : {+1, -1})
        for (int eps2 : {+1, -1})
            for (int k1 = 1; k1 <= params.n; ++k1)
                for (int k2 = 1; k2 <= params.m; ++k2)
                    for (int p = 0; p <= p_max; ++p) {
                        Sector sec{s_x, s_y, eps1, eps2, k1, k2};
                        if (auto lvl = make_level(params, sec, p)) levels.push_back(std::move(*lvl));
                    }
}

EnumerationResult assemble(const ModelParams& params, int p_max, bool parallel) {
    params.validate();
    if (p_max < 0) throw std::invalid_argument("enumerate_levels: p_max must be >= 0");
    const int sx_of[4] = {+1, +1, -1, -1};
    const int sy_of[4] = {+1, -1, +1, -1};
    std::vector<AlgebraicLevel> part[4];
    bool rej[4] = {false, false, false, false};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int t = 0; t < 4; ++t)
        enumerate_sector_pair(params, sx_of[t], sy_of[t], p_max, part[t], rej[t]);

    EnumerationResult out;
    for (int t = 0; t < 4; ++t) {
        if (rej[t]) out.rejected_sectors.push_back(Sector{sx_of[t], sy_of[t], 0, 0, 0, 0});
        for (auto& l : part[t]) out.levels.push_back(std::move(l));
    }

    auto key_less = [](const AlgebraicLevel& a, const AlgebraicLevel& b) {
        auto ka = std::tuple(a.energy, a.sector.s_x, a.sector.s_y, a.sector.eps1, a.sector.eps2,
                             a.sector.k1, a.sector.k2, a.p);
        auto kb = std::tuple(b.energy, b.sector.s_x, b.sector.s_y, b.sector.eps1, b.sector.eps2,
                             b.sector.k1, b.sector.k2, b.p);
        return ka < kb;
    };
    std::sort(out.levels.begin(), out.levels.end(), key_less);
    out.levels.erase(std::unique(out.levels.begin(), out.levels.end(),
                                 [](const AlgebraicLevel& a, const AlgebraicLevel& b) {
                                     return a.sector == b.sector && a.p == b.p &&
                                            std::abs(a.energy - b.energy) <= 1e-9;
                                 }),
                     out.levels.end());
    return out;
}

} // namespace

EnumerationResult enumerate_levels(const ModelParams& params, int p_max) {
    return assemble(params, p_max, false);
}

EnumerationResult enumerate_levels_parallel(const ModelParams& params, int p_max) {
    return assemble(params, p_max, true);
}

} // namespace dunkl
