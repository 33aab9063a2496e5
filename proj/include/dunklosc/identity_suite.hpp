#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dunklosc/models.hpp"

namespace dunkl {

struct IdentityResult {
    std::string name;
    double residual = 0.0;
    bool exact = false; // residual computed in exact rational arithmetic
    bool pass = false;
};

struct IdentitySuiteReport {
    std::vector<IdentityResult> results;
    int basis_size = 0;
    bool exact_mode = false;

    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return !results.empty();
    }
    double max_residual() const {
        double m = 0.0;
        for (const auto& r : results) m = std::max(m, r.residual);
        return m;
    }
};

// Every operator identity of the model, checked on truncated matrix
// representations of size `basis_size` per axis (both 1D axes, all admissible
// reflection sectors, and the 2D integrals of motion). Runs in exact rational
// arithmetic whenever the parameters permit it; otherwise in quad precision
// against `tol`.
IdentitySuiteReport run_identity_suite(const ModelParams& params, int basis_size,
                                       double tol = 1e-12);

} // namespace dunkl
