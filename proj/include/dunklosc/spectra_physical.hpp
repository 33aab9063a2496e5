#pragma once

#include <optional>
#include <vector>

#include "dunklosc/spectra_algebraic.hpp"

namespace dunkl {

struct PhysicalLevel {
    double energy = 0.0;
    int n1x = 0, n1y = 0;
    int s_x = 1, s_y = 1;
};

// Inverted (alpha, beta) -> k^+- data of one axis, with nu_{+-} = 2 k^{+-} + mu.
struct SingularSectorData {
    double k_plus = 0.0, k_minus = 0.0;
    double nu_plus = 0.0, nu_minus = 0.0;
};

double physical_energy_HO(int n1x, int n1y, int s_x, int s_y, const ModelParams& params);

// Root selection: continuous with the (alpha,beta) -> 0 limit, falling back to
// the other root when admissibility (nu_+ + 1/2 > 0, nu_- + 3/2 > 0) demands;
// the forward maps are re-verified to 1e-12. Throws when no admissible root.
SingularSectorData k_pm_from_alpha_beta(double alpha, double beta, double mu);

double physical_energy_SHO(int n1x, int n1y, int s_x, int s_y, const ModelParams& params);

// Physical exponent parameter of one axis sector (mu for the Dunkl model);
// nullopt when the sector is inadmissible.
std::optional<double> nu_physical(const ModelParams& params, char axis, int s);

// All physical levels with E <= e_max, deterministically ordered.
std::vector<PhysicalLevel> enumerate_physical(const ModelParams& params, double e_max);

struct MatchedPair {
    PhysicalLevel physical;
    AlgebraicLevel algebraic;
    bool label_exact = true; // predicted (sector, p) coordinates matched directly
};

struct MatchReport {
    std::vector<MatchedPair> matched;
    std::vector<PhysicalLevel> physical_only;
    std::vector<AlgebraicLevel> algebraic_only; // expected non-empty in general
};

// Match each physical level with E <= e_max to an algebraic level through the
// predicted coordinates k1 = n - (n1x mod n), k2 = m - (n1y mod m),
// p = floor(n1x/n) + floor(n1y/m) and the branch signs fixed by the
// undeformed limit.
MatchReport filter_algebraic(const std::vector<AlgebraicLevel>& levels, const ModelParams& params,
                             double e_max, double tol = 1e-9);

} // namespace dunkl
