#pragma once

#include <vector>

#include "dunklosc/spectra_physical.hpp"

namespace dunkl {

// All eigenvalues of a real symmetric tridiagonal matrix, ascending.
// diag has n entries, off has n-1 (off[i] couples i and i+1).
std::vector<double> tridiag_eigenvalues(std::vector<double> diag, std::vector<double> off);

struct Oracle1DResult {
    std::vector<double> eigenvalues; // lowest `count`, ascending
    std::vector<double> convergence; // |E(N) - E(2N)| per level
    bool converged = false;          // every reported level within conv_tol
};

// Galerkin diagonalization of the 1D Hamiltonian on one reflection sector, in
// an orthonormal Laguerre-type basis whose Gaussian exponent is deliberately
// detuned from the frequency (sigma = 1.3 m) so the matrix is not already
// diagonal. Throws std::domain_error for inadmissible singular sectors.
Oracle1DResult diag_1d(const AxisParams& ax, Model model, int sector, int n_basis, int count,
                       double conv_tol = 1e-10);

struct OracleLevel {
    double energy = 0.0;
    int s_x = 1, s_y = 1;
    double convergence = 0.0;
};

struct SpectrumReport {
    std::vector<OracleLevel> levels; // all tensor sums <= e_max, ascending
    double max_convergence = 0.0;
    bool converged = false;
};

SpectrumReport spectrum_2d(const ModelParams& params, double e_max, int n_basis,
                           double conv_tol = 1e-10);

struct CompareReport {
    double max_deviation = 0.0; // over matched pairs, relative
    int matched = 0;
    std::vector<OracleLevel> unmatched_oracle;
    std::vector<PhysicalLevel> unmatched_physical;

    bool pass(double tol) const {
        return max_deviation <= tol && unmatched_physical.empty() && unmatched_oracle.empty();
    }
};

// Greedy sector-aware matching of the oracle multiset against closed-form
// physical levels; `tol` is relative.
CompareReport compare_spectra(const SpectrumReport& oracle,
                              const std::vector<PhysicalLevel>& physical, double tol);

} // namespace dunkl
