#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "dunklosc/models.hpp"
#include "dunklosc/rational.hpp"

namespace dunkl {

// One branch of the finite-dimensional representation analysis:
// reflection eigenvalues, branch signs, and the k-shifts with
// k1 in 1..n, k2 in 1..m.
struct Sector {
    int s_x = 1, s_y = 1;
    int eps1 = 1, eps2 = 1;
    int k1 = 1, k2 = 1;

    friend bool operator==(const Sector&, const Sector&) = default;
};

struct AlgebraicLevel {
    double energy = 0.0;
    int p = 0;
    Sector sector;
    double u = 0.0;
    std::vector<double> phi_samples; // reduced structure function at x = 1..p
};

namespace detail {

// radicand of the sector exponent; the grading-dependent terms are the ones
// linear in beta and mu (the mu^2 term is sector-independent, as the
// factorised G(H) of the 1D singular model requires)
template <class S>
S nu_radicand(const S& mu, const S& alpha, const S& beta, int s) {
    return S(1) + S(4) * alpha + S(4 * s) * beta - S(4 * s) * mu + S(4) * mu * mu;
}

template <class S>
S energy_ho_t(int p, int m, int n, const S& mu_x, const S& mu_y, const Sector& sec) {
    S mm(m), nn(n);
    return S(2 * m * n * (p + 1)) + mm + nn + S(sec.eps1) * mm / S(2) + S(sec.eps2) * nn / S(2) -
           (S(sec.eps1 * sec.s_x) * mm * mu_x + S(sec.eps2 * sec.s_y) * nn * mu_y) +
           S(2 * (m * n - sec.k2 * n - sec.k1 * m));
}

template <class S>
S energy_sho_t(int p, int m, int n, const S& nu_x, const S& nu_y, const Sector& sec) {
    S mm(m), nn(n);
    return S(2 * m * n * (p + 1)) + S(2 * (n * m - sec.k2 * n - sec.k1 * m)) +
           mm * (S(1) - S(sec.eps1 * sec.s_x) / S(2) + S(sec.eps1) * nu_x) +
           nn * (S(1) - S(sec.eps2 * sec.s_y) / S(2) + S(sec.eps2) * nu_y);
}

} // namespace detail

// Closed-form structure function of the 2D anisotropic Dunkl oscillator.
double phi_HO(double x, double u, double e_val, const ModelParams& params, int s_x, int s_y);

// u with Phi_HO(0,u,E) = 0, for branch (eps1, k1).
double u_branch_HO(double e_val, const ModelParams& params, int s_x, int eps1, int k1);

double energy_HO(int p, const ModelParams& params, const Sector& sec);

// Phi_HO at the solved (u, E), as a function of (x, p) alone.
double phi_HO_reduced(double x, int p, const ModelParams& params, const Sector& sec);

// Sector exponent parameter of the singular model; nullopt when the radicand
// is negative (sector unphysical).
std::optional<double> nu_sector(double mu, double alpha, double beta, int s);
std::optional<Rational> nu_sector_exact(const Rational& mu, const Rational& alpha,
                                        const Rational& beta, int s);

double phi_SHO(double x, double u, double e_val, const ModelParams& params, int s_x, int s_y);
double u_branch_SHO(double e_val, const ModelParams& params, int s_x, int eps1, int k1);
double energy_SHO(int p, const ModelParams& params, const Sector& sec);
double phi_SHO_reduced(double x, int p, const ModelParams& params, const Sector& sec);

// Model-dispatching forms.
double phi_closed(const ModelParams& params, double x, double u, double e_val, int s_x, int s_y);
double u_branch(const ModelParams& params, double e_val, int s_x, int eps1, int k1);
double energy_closed(const ModelParams& params, int p, const Sector& sec);
double phi_reduced(const ModelParams& params, double x, int p, const Sector& sec);

// Exact-arithmetic energies for rational parameters; nullopt when the singular
// sector exponent is not rational.
Rational energy_HO_exact(int p, int m, int n, const Rational& mu_x, const Rational& mu_y,
                         const Sector& sec);
std::optional<Rational> energy_SHO_exact(int p, int m, int n, const Rational& mu_x,
                                         const Rational& mu_y, const Rational& alpha_x,
                                         const Rational& beta_x, const Rational& alpha_y,
                                         const Rational& beta_y, const Sector& sec);

// Affine u(E) branches for the generic engine, one per (eps1, k1), at fixed s_x.
struct BranchLabel {
    int eps1 = 1;
    int k1 = 1;
};
std::vector<std::pair<BranchLabel, UBranch>> model_u_branches(const ModelParams& params, int s_x);

struct EnumerationResult {
    std::vector<AlgebraicLevel> levels;
    std::vector<Sector> rejected_sectors; // negative radicand (singular model)
};

// Exhaustive sweep over (s_x, s_y, eps1, eps2, k1, k2, p <= p_max); every
// emitted level passes the Phi(0) = Phi(p+1) = 0 and positivity contracts.
EnumerationResult enumerate_levels(const ModelParams& params, int p_max);

// OpenMP sweep over sectors; identical output to the serial version.
EnumerationResult enumerate_levels_parallel(const ModelParams& params, int p_max);

} // namespace dunkl
