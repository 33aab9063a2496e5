#pragma once

#include <stdexcept>

#include "dunklosc/clambda.hpp"

namespace dunkl {

enum class Model { dunkl, singular };

// Parameters of one 1D factor: frequency, Dunkl parameter, and the
// inverse-square couplings (singular model only).
struct AxisParams {
    double freq = 1.0;
    double mu = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
};

// Physical parameter set of the 2D models.
struct ModelParams {
    Model model = Model::dunkl;
    int m = 1, n = 1;
    double mu_x = 0.0, mu_y = 0.0;
    double alpha_x = 0.0, beta_x = 0.0, alpha_y = 0.0, beta_y = 0.0;

    AxisParams x_axis() const { return {static_cast<double>(m), mu_x, alpha_x, beta_x}; }
    AxisParams y_axis() const { return {static_cast<double>(n), mu_y, alpha_y, beta_y}; }

    void validate() const {
        if (m < 1 || n < 1) throw std::invalid_argument("ModelParams: m, n must be positive integers");
        if (mu_x < 0 || mu_y < 0) throw std::invalid_argument("ModelParams: mu must be >= 0");
        if (model == Model::dunkl &&
            (alpha_x != 0 || beta_x != 0 || alpha_y != 0 || beta_y != 0))
            throw std::invalid_argument("ModelParams: alpha/beta require the singular model");
    }
};

// lambda = 2 algebra datum of one axis.
//
// Dunkl axis: a^dag a = H + (w/2)(-1 - 2 mu R), B = a^2 / 2.
// Singular axis: B is not a power of a; q_funcs carry B^dag B = G(H) directly,
// split into its R-even and R-odd parts (eq. for G(H) of the 1D model).
inline CLambdaAlgebraSpec make_axis_spec(Model model, const AxisParams& ax) {
    const long double w = ax.freq, mu = ax.mu, alpha = ax.alpha, beta = ax.beta;
    CLambdaAlgebraSpec spec;
    spec.lambda = 2;
    spec.alpha = {Complex(w, 0.0L), Complex(0.0L, 0.0L)};
    if (model == Model::dunkl) {
        spec.q_funcs = {CPoly{Complex(-w / 2, 0.0L), Complex(1.0L, 0.0L)},
                        CPoly{Complex(-w * mu, 0.0L)}};
        spec.b_norm = 0.5;
        spec.ladder_power = 2;
    } else {
        spec.q_funcs = {CPoly{Complex(w * w * (0.75L - mu * mu - alpha), 0.0L),
                              Complex(-2.0L * w, 0.0L), Complex(1.0L, 0.0L)},
                        CPoly{Complex(w * w * (mu - beta), 0.0L)}};
        spec.b_norm = 1.0;
        spec.ladder_power = 1;
    }
    return spec;
}

// n1 = n, n2 = m, gamma_x = 2m, gamma_y = 2n, gamma = 2mn for both models.
inline DeformedOscParams osc_params(const ModelParams& p) {
    p.validate();
    DeformedOscParams d;
    d.n1 = p.n;
    d.n2 = p.m;
    d.gamma1 = 2.0 * p.m;
    d.gamma2 = 2.0 * p.n;
    d.gamma = 2.0 * p.m * p.n;
    return d;
}

} // namespace dunkl
