#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "dunklosc/poly.hpp"

namespace dunkl {

// extended precision: the structure-function products amplify roundoff by the
// magnitude of their largest internal term, so the engine carries long double
using Complex = std::complex<long double>;
using CPoly = Poly<Complex>;

// One eigenspace of the cyclic grading generator T: tau = q^j, q = exp(2*pi*i/lambda).
struct GradingSector {
    int j = 0;
    Complex tau{1.0, 0.0};

    static GradingSector of(int lambda, int j);
    // lambda = 2 sectors indexed by the reflection eigenvalue +-1.
    static GradingSector reflection(int s) { return s > 0 ? of(2, 0) : of(2, 1); }
};

// Full algebraic datum of one 1D factor: order lambda of the cyclic group,
// commutator coefficients alpha_{0..lambda-1} in [H,a] = -a(sum alpha_m T^m),
// polynomials Q_m with a^dag a = sum Q_m(H) T^m, and the ladder normalisation
// c_B with B = c_B a^lambda.
//
// ladder_power is the number of a-factors the model's ladder B actually
// carries: lambda for B = c_B a^lambda, or 1 for models (the singular
// oscillator) whose deformed B is not a power of a and whose q_funcs encode
// B^dag B directly. G(H) multiplies the trailing ladder_power Z-factors.
struct CLambdaAlgebraSpec {
    int lambda = 2;
    std::vector<Complex> alpha;
    std::vector<CPoly> q_funcs;
    double b_norm = 1.0;
    int ladder_power = 2;

    Complex q() const;
    void validate() const;
};

// beta_m = conj(alpha_{lambda-m}) q^m, beta_0 = conj(alpha_0).
std::vector<Complex> beta_coeffs(const CLambdaAlgebraSpec& spec);

// alpha_0 real and alpha_m = conj(alpha_{lambda-m}), to 1e-14.
bool check_hermiticity(const CLambdaAlgebraSpec& spec);

// sum_{j=1}^{lambda} q^{jm}; vanishes for 1 <= m <= lambda-1.
Complex root_of_unity_sum(int lambda, int m);

// Z_{ell,lambda}(H,T) evaluated in a grading sector (T^n -> tau^n), with the
// H argument as a polynomial so callers can keep E symbolic.
CPoly z_factor_poly(const CLambdaAlgebraSpec& spec, int ell, const CPoly& h_arg,
                    const GradingSector& sector);
Complex z_factor(const CLambdaAlgebraSpec& spec, int ell, double h_val,
                 const GradingSector& sector);

// G(H) in a sector: |c_B|^2 * prod of the trailing ladder_power Z-factors.
CPoly g_eval_poly(const CLambdaAlgebraSpec& spec, const CPoly& h_arg, const GradingSector& sector);
double g_eval(const CLambdaAlgebraSpec& spec, double h_val, const GradingSector& sector);

// The 2D gluing datum: I_- = B_1^{n1} (B_2^dag)^{n2} etc., with
// n1*gamma1 = n2*gamma2 = gamma.
struct DeformedOscParams {
    int n1 = 1, n2 = 1;
    double gamma1 = 2.0, gamma2 = 2.0, gamma = 2.0;

    void validate() const;
};

// S_{n1,n2}(K,H) = prod_i G1(H/2 + gamma K - (n1-i) gamma1)
//                * prod_j G2(H/2 - gamma K + j gamma2).
double s_n1n2(const DeformedOscParams& params, const CLambdaAlgebraSpec& spec1,
              const CLambdaAlgebraSpec& spec2, double k_val, double h_val,
              const GradingSector& sector1, const GradingSector& sector2);

// Same product with K and H affine in a formal variable E.
CPoly s_n1n2_poly(const DeformedOscParams& params, const CLambdaAlgebraSpec& spec1,
                  const CLambdaAlgebraSpec& spec2, const CPoly& k_of_e, const CPoly& h_of_e,
                  const GradingSector& sector1, const GradingSector& sector2);

// Phi(x,u,E) = S_{n1,n2}(x+u, E).
double structure_phi(const DeformedOscParams& params, const CLambdaAlgebraSpec& spec1,
                     const CLambdaAlgebraSpec& spec2, double x, double u, double e_val,
                     const GradingSector& sector1, const GradingSector& sector2);

// Affine representation-parameter branch u(E) = slope*E + intercept, chosen by
// a model adapter so that Phi(0, u(E), E) vanishes identically.
struct UBranch {
    double slope = 0.0;
    double intercept = 0.0;
    double operator()(double e_val) const { return slope * e_val + intercept; }
};

struct FiniteRepLevel {
    double energy = 0.0;
    double u = 0.0;
    int branch = 0; // index into the supplied branch list
    std::vector<double> phi_samples; // Phi(x) for x = 1..p
};

struct FiniteRepSolution {
    std::vector<FiniteRepLevel> accepted;
    std::vector<FiniteRepLevel> rejected; // real roots failing the positivity scan
};

// All real roots E of Phi(p+1, u(E), E) = 0 per branch, by expansion into a
// polynomial in E; roots failing Phi(x) > 0 for x = 1..p are reported in
// `rejected`. Throws if a branch does not annihilate Phi(0, u(E), E).
FiniteRepSolution solve_finite_rep(const DeformedOscParams& params,
                                   const CLambdaAlgebraSpec& spec1,
                                   const CLambdaAlgebraSpec& spec2,
                                   const GradingSector& sector1, const GradingSector& sector2,
                                   const std::vector<UBranch>& u_branches, int p);

} // namespace dunkl
