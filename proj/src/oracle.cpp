#include "dunklosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dunkl {

// Implicit-shift QL iteration (tqli without eigenvectors).
std::vector<double> tridiag_eigenvalues(std::vector<double> d, std::vector<double> e) {
    const int n = static_cast<int>(d.size());
    if (static_cast<int>(e.size()) + 1 != n)
        throw std::invalid_argument("tridiag_eigenvalues: off-diagonal must have n-1 entries");
    if (n == 0) return {};
    e.push_back(0.0);
    const double eps = std::numeric_limits<double>::epsilon();

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw std::runtime_error("tridiag_eigenvalues: too many QL iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

// power of x carried by the sector basis: 2 k^+ (even sector) or
// 2 k^- + 1 (odd sector); 0 / 1 for the Dunkl model
double sector_power(const AxisParams& ax, Model model, int sector) {
    if (model == Model::dunkl) return sector > 0 ? 0.0 : 1.0;
    SingularSectorData data = k_pm_from_alpha_beta(ax.alpha, ax.beta, ax.mu);
    return sector > 0 ? 2.0 * data.k_plus : 2.0 * data.k_minus + 1.0;
}

// eigenvalues of H on the sector, basis x^g L_k^{(theta)}(sigma x^2)
// e^{-sigma x^2/2} (orthonormalized), theta = g + mu - 1/2
std::vector<double> sector_eigenvalues(const AxisParams& ax, Model model, int sector,
                                       int n_basis) {
    const double m = ax.freq;
    const double g = sector_power(ax, model, sector);
    const double theta = g + ax.mu - 0.5;
    const double sigma = 1.3 * m;
    const double c = (m * m - sigma * sigma) / (2.0 * sigma);
    std::vector<double> d(n_basis), e(n_basis - 1);
    for (int k = 0; k < n_basis; ++k) {
        d[k] = sigma * (2.0 * k + g + ax.mu + 0.5) + c * (2.0 * k + theta + 1.0);
        if (k + 1 < n_basis) e[k] = -c * std::sqrt((k + 1.0) * (k + 1.0 + theta));
    }
    return tridiag_eigenvalues(std::move(d), std::move(e));
}

} // namespace

Oracle1DResult diag_1d(const AxisParams& ax, Model model, int sector, int n_basis, int count,
                       double conv_tol) {
    if (sector != 1 && sector != -1) throw std::invalid_argument("diag_1d: sector must be +-1");
    if (count < 1 || n_basis < 2 * count)
        throw std::invalid_argument("diag_1d: need n_basis >= 2*count");
    const auto coarse = sector_eigenvalues(ax, model, sector, n_basis);
    const auto fine = sector_eigenvalues(ax, model, sector, 2 * n_basis);
    Oracle1DResult out;
    out.converged = true;
    for (int i = 0; i < count; ++i) {
        out.eigenvalues.push_back(fine[i]);
        const double conv = std::abs(coarse[i] - fine[i]);
        out.convergence.push_back(conv);
        if (conv > conv_tol) out.converged = false;
    }
    return out;
}

SpectrumReport spectrum_2d(const ModelParams& params, double e_max, int n_basis,
                           double conv_tol) {
    params.validate();
    if (!(e_max > 0) || !std::isfinite(e_max))
        throw std::invalid_argument("spectrum_2d: e_max must be positive and finite");
    SpectrumReport report;
    report.converged = true;
    auto axis_levels = [&](const AxisParams& ax, int sector) {
        const int count = std::min(
            n_basis / 2, std::max(1, static_cast<int>(e_max / (2.0 * ax.freq)) + 2));
        return diag_1d(ax, params.model, sector, n_basis, count, conv_tol);
    };
    for (int sx : {+1, -1})
        for (int sy : {+1, -1}) {
            if (params.model == Model::singular &&
                (!nu_physical(params, 'x', sx) || !nu_physical(params, 'y', sy)))
                continue;
            const auto ex = axis_levels(params.x_axis(), sx);
            const auto ey = axis_levels(params.y_axis(), sy);
            for (std::size_t i = 0; i < ex.eigenvalues.size(); ++i)
                for (std::size_t j = 0; j < ey.eigenvalues.size(); ++j) {
                    const double e = ex.eigenvalues[i] + ey.eigenvalues[j];
                    if (e > e_max + 1e-9) continue;
                    const double conv = ex.convergence[i] + ey.convergence[j];
                    report.levels.push_back({e, sx, sy, conv});
                    report.max_convergence = std::max(report.max_convergence, conv);
                    if (conv > conv_tol) report.converged = false;
                }
        }
    std::sort(report.levels.begin(), report.levels.end(),
              [](const OracleLevel& a, const OracleLevel& b) {
                  return std::tuple(a.energy, a.s_x, a.s_y) < std::tuple(b.energy, b.s_x, b.s_y);
              });
    return report;
}

CompareReport compare_spectra(const SpectrumReport& oracle,
                              const std::vector<PhysicalLevel>& physical, double tol) {
    CompareReport rep;
    std::vector<bool> used(oracle.levels.size(), false);
    for (const auto& ph : physical) {
        int best = -1;
        double best_dev = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < oracle.levels.size(); ++i) {
            const auto& lv = oracle.levels[i];
            if (used[i] || lv.s_x != ph.s_x || lv.s_y != ph.s_y) continue;
            const double dev = std::abs(lv.energy - ph.energy) / (1.0 + std::abs(ph.energy));
            if (dev < best_dev) {
                best_dev = dev;
                best = static_cast<int>(i);
            }
        }
        if (best >= 0 && best_dev <= tol) {
            used[best] = true;
            ++rep.matched;
            rep.max_deviation = std::max(rep.max_deviation, best_dev);
        } else {
            rep.unmatched_physical.push_back(ph);
        }
    }
    for (std::size_t i = 0; i < oracle.levels.size(); ++i)
        if (!used[i]) rep.unmatched_oracle.push_back(oracle.levels[i]);
    return rep;
}

} // namespace dunkl
