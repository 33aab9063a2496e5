#include "dunklosc/clambda.hpp"

#include <cmath>
#include <numbers>

namespace dunkl {

namespace {
constexpr double kHermTol = 1e-14;

Complex unit_root(int lambda, long long power) {
    // reduce mod lambda first so large powers stay accurate
    long long r = power % lambda;
    if (r < 0) r += lambda;
    // quarter turns exactly, so lambda = 2 gradings carry no sin(pi) dirt
    if (4 * r % lambda == 0) {
        switch (4 * r / lambda) {
            case 0: return {1.0L, 0.0L};
            case 1: return {0.0L, 1.0L};
            case 2: return {-1.0L, 0.0L};
            default: return {0.0L, -1.0L};
        }
    }
    long double arg = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(r) / lambda;
    return {std::cos(arg), std::sin(arg)};
}
} // namespace

GradingSector GradingSector::of(int lambda, int j) {
    if (lambda < 2) throw std::invalid_argument("GradingSector: lambda must be >= 2");
    if (j < 0 || j >= lambda) throw std::invalid_argument("GradingSector: j out of range");
    return GradingSector{j, unit_root(lambda, j)};
}

Complex CLambdaAlgebraSpec::q() const { return unit_root(lambda, 1); }

void CLambdaAlgebraSpec::validate() const {
    if (lambda < 2) throw std::invalid_argument("CLambdaAlgebraSpec: lambda must be >= 2");
    if (static_cast<int>(alpha.size()) != lambda)
        throw std::invalid_argument("CLambdaAlgebraSpec: alpha must have length lambda");
    if (static_cast<int>(q_funcs.size()) != lambda)
        throw std::invalid_argument("CLambdaAlgebraSpec: q_funcs must have length lambda");
    if (ladder_power < 1 || ladder_power > lambda)
        throw std::invalid_argument("CLambdaAlgebraSpec: ladder_power out of range");
}

std::vector<Complex> beta_coeffs(const CLambdaAlgebraSpec& spec) {
    spec.validate();
    std::vector<Complex> beta(spec.lambda);
    beta[0] = std::conj(spec.alpha[0]);
    for (int m = 1; m < spec.lambda; ++m)
        beta[m] = std::conj(spec.alpha[spec.lambda - m]) * unit_root(spec.lambda, m);
    return beta;
}

bool check_hermiticity(const CLambdaAlgebraSpec& spec) {
    spec.validate();
    if (std::abs(spec.alpha[0].imag()) > kHermTol) return false;
    for (int m = 1; m < spec.lambda; ++m)
        if (std::abs(spec.alpha[m] - std::conj(spec.alpha[spec.lambda - m])) > kHermTol) return false;
    return true;
}

Complex root_of_unity_sum(int lambda, int m) {
    if (lambda < 2) throw std::invalid_argument("root_of_unity_sum: lambda must be >= 2");
    if (m < 1 || m > lambda - 1) throw std::out_of_range("root_of_unity_sum: m out of range");
    Complex acc{0.0, 0.0};
    for (int j = 1; j <= lambda; ++j) acc += unit_root(lambda, static_cast<long long>(j) * m);
    return acc;
}

CPoly z_factor_poly(const CLambdaAlgebraSpec& spec, int ell, const CPoly& h_arg,
                    const GradingSector& sector) {
    spec.validate();
    if (ell < 1 || ell > spec.lambda) throw std::invalid_argument("z_factor: ell out of range");
    const auto beta = beta_coeffs(spec);
    // H-argument shift: sum_n sum_{j=0}^{lambda-1-ell} beta_n q^{-jn} tau^n
    Complex shift{0.0, 0.0};
    for (int n = 0; n < spec.lambda; ++n) {
        Complex tau_n = unit_root(spec.lambda, static_cast<long long>(sector.j) * n);
        for (int j = 0; j <= spec.lambda - 1 - ell; ++j)
            shift += beta[n] * unit_root(spec.lambda, -static_cast<long long>(j) * n) * tau_n;
    }
    CPoly shifted = h_arg - CPoly::constant(shift);
    CPoly acc;
    for (int m = 0; m < spec.lambda; ++m) {
        Complex w = unit_root(spec.lambda, static_cast<long long>(ell) * m) *
                    unit_root(spec.lambda, static_cast<long long>(sector.j) * m);
        acc = acc + spec.q_funcs[m].compose(shifted) * w;
    }
    return acc;
}

Complex z_factor(const CLambdaAlgebraSpec& spec, int ell, double h_val,
                 const GradingSector& sector) {
    return z_factor_poly(spec, ell, CPoly::constant(Complex(h_val, 0.0)), sector)(Complex(0.0, 0.0));
}

CPoly g_eval_poly(const CLambdaAlgebraSpec& spec, const CPoly& h_arg, const GradingSector& sector) {
    if (!check_hermiticity(spec))
        throw std::domain_error("g_eval: spec violates hermiticity admissibility");
    CPoly acc = CPoly::constant(Complex(spec.b_norm * spec.b_norm, 0.0));
    for (int ell = spec.lambda - spec.ladder_power + 1; ell <= spec.lambda; ++ell)
        acc = acc * z_factor_poly(spec, ell, h_arg, sector);
    return acc;
}

double g_eval(const CLambdaAlgebraSpec& spec, double h_val, const GradingSector& sector) {
    Complex v = g_eval_poly(spec, CPoly::constant(Complex(h_val, 0.0)), sector)(Complex(0.0, 0.0));
    if (std::abs(v.imag()) > 1e-10 * (1.0 + std::abs(v.real())))
        throw std::domain_error("g_eval: imaginary residue above tolerance");
    return v.real();
}

void DeformedOscParams::validate() const {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("DeformedOscParams: n1, n2 must be positive");
    if (gamma1 <= 0 || gamma2 <= 0 || gamma <= 0)
        throw std::invalid_argument("DeformedOscParams: gammas must be positive");
    if (std::abs(n1 * gamma1 - gamma) > 1e-12 * gamma || std::abs(n2 * gamma2 - gamma) > 1e-12 * gamma)
        throw std::invalid_argument("DeformedOscParams: n1*gamma1 = n2*gamma2 = gamma violated");
}

CPoly s_n1n2_poly(const DeformedOscParams& params, const CLambdaAlgebraSpec& spec1,
                  const CLambdaAlgebraSpec& spec2, const CPoly& k_of_e, const CPoly& h_of_e,
                  const GradingSector& sector1, const GradingSector& sector2) {
    params.validate();
    CPoly half_h = h_of_e * Complex(0.5, 0.0);
    CPoly gk = k_of_e * Complex(params.gamma, 0.0);
    CPoly acc = CPoly::constant(Complex(1.0, 0.0));
    for (int i = 1; i <= params.n1; ++i) {
        CPoly arg = half_h + gk - CPoly::constant(Complex((params.n1 - i) * params.gamma1, 0.0));
        acc = acc * g_eval_poly(spec1, arg, sector1);
    }
    for (int j = 1; j <= params.n2; ++j) {
        CPoly arg = half_h - gk + CPoly::constant(Complex(j * params.gamma2, 0.0));
        acc = acc * g_eval_poly(spec2, arg, sector2);
    }
    return acc;
}

double s_n1n2(const DeformedOscParams& params, const CLambdaAlgebraSpec& spec1,
              const CLambdaAlgebraSpec& spec2, double k_val, double h_val,
              const GradingSector& sector1, const GradingSector& sector2) {
    CPoly p = s_n1n2_poly(params, spec1, spec2, CPoly::constant(Complex(k_val, 0.0)),
                          CPoly::constant(Complex(h_val, 0.0)), sector1, sector2);
    Complex v = p(Complex(0.0, 0.0));
    if (std::abs(v.imag()) > 1e-10 * (1.0 + std::abs(v.real())))
        throw std::domain_error("s_n1n2: imaginary residue above tolerance");
    return v.real();
}

double structure_phi(const DeformedOscParams& params, const CLambdaAlgebraSpec& spec1,
                     const CLambdaAlgebraSpec& spec2, double x, double u, double e_val,
                     const GradingSector& sector1, const GradingSector& sector2) {
    return s_n1n2(params, spec1, spec2, x + u, e_val, sector1, sector2);
}

namespace {

// real-coefficient view of a complex polynomial, with residue check
Poly<double> real_part_checked(const CPoly& p, const char* what) {
    long double scale = 0.0L;
    for (const auto& c : p.coeffs()) scale = std::max(scale, std::abs(c));
    std::vector<double> re(p.coeffs().size());
    for (std::size_t i = 0; i < re.size(); ++i) {
        if (std::abs(p.coeffs()[i].imag()) > 1e-10L * (1.0L + scale))
            throw std::domain_error(std::string(what) + ": imaginary residue above tolerance");
        re[i] = static_cast<double>(p.coeffs()[i].real());
    }
    return Poly<double>(std::move(re));
}

} // namespace

FiniteRepSolution solve_finite_rep(const DeformedOscParams& params,
                                   const CLambdaAlgebraSpec& spec1,
                                   const CLambdaAlgebraSpec& spec2,
                                   const GradingSector& sector1, const GradingSector& sector2,
                                   const std::vector<UBranch>& u_branches, int p) {
    if (p < 0) throw std::invalid_argument("solve_finite_rep: p must be >= 0");
    FiniteRepSolution out;
    const CPoly e_poly = CPoly::identity();
    for (std::size_t bi = 0; bi < u_branches.size(); ++bi) {
        const UBranch& br = u_branches[bi];
        CPoly u_of_e({Complex(br.intercept, 0.0), Complex(br.slope, 0.0)});

        // the branch must annihilate Phi(0, u(E), E) identically in E;
        // scale against the neighbouring non-cancelling evaluation Phi(1, ...)
        CPoly phi0 = s_n1n2_poly(params, spec1, spec2, u_of_e, e_poly, sector1, sector2);
        CPoly phi1 = s_n1n2_poly(params, spec1, spec2,
                                 u_of_e + CPoly::constant(Complex(1.0, 0.0)), e_poly,
                                 sector1, sector2);
        long double scale0 = 0.0L, ref = 1.0L;
        for (const auto& c : phi0.coeffs()) scale0 = std::max(scale0, std::abs(c));
        for (const auto& c : phi1.coeffs()) ref = std::max(ref, std::abs(c));
        if (scale0 > 1e-9L * ref)
            throw std::logic_error("solve_finite_rep: branch does not annihilate Phi(0,u(E),E)");

        CPoly k_of_e = u_of_e + CPoly::constant(Complex(p + 1, 0.0));
        CPoly phi_top = s_n1n2_poly(params, spec1, spec2, k_of_e, e_poly, sector1, sector2);
        Poly<double> phi_real = real_part_checked(phi_top, "solve_finite_rep");
        for (double e_root : real_roots(phi_real)) {
            FiniteRepLevel lvl;
            lvl.energy = e_root;
            lvl.u = br(e_root);
            lvl.branch = static_cast<int>(bi);
            bool positive = true;
            double scale = 1.0;
            for (int x = 1; x <= p; ++x) {
                double v = structure_phi(params, spec1, spec2, x, lvl.u, e_root, sector1, sector2);
                lvl.phi_samples.push_back(v);
                scale = std::max(scale, std::abs(v));
            }
            for (double v : lvl.phi_samples)
                if (!(v > 1e-9 * scale)) positive = false;
            (positive ? out.accepted : out.rejected).push_back(std::move(lvl));
        }
    }
    return out;
}

} // namespace dunkl
