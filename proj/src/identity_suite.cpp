#include "dunklosc/identity_suite.hpp"

#include <optional>

#include "dunklosc/operators.hpp"

namespace dunkl {
namespace {

template <class S>
std::optional<S> sqrt_scalar(const S& v) {
    if (v < S(0)) return std::nullopt;
    return boost::multiprecision::sqrt(v);
}
template <>
std::optional<Rational> sqrt_scalar(const Rational& v) {
    return try_exact_sqrt(v);
}

// Exponent of the parity-shifted carrier for reflection sector s: 2 k^+ for
// the even sector, 2 k^- + 1 for the odd one, with the root continuous in the
// (alpha, beta) -> 0 limit and admissibility fallback. nullopt when the sector
// has no representable exponent (or, for Rational, when it is irrational).
template <class S>
std::optional<S> sector_exponent(const S& mu, const S& alpha, const S& beta, int s) {
    const S half = S(1) / S(2);
    const S c = s > 0 ? S(mu - half) : S(mu + half);
    const S d = s > 0 ? S(alpha + beta) : S(alpha - beta);
    auto root = sqrt_scalar<S>(c * c + d);
    if (!root) return std::nullopt;
    const S sgn = c >= S(0) ? S(1) : S(-1);
    const S floor_shift = s > 0 ? half : S(3) / S(2);
    S k = (-c + sgn * *root) / S(2);
    if (!(S(2) * k + mu + floor_shift > S(0))) {
        k = (-c - sgn * *root) / S(2);
        if (!(S(2) * k + mu + floor_shift > S(0))) return std::nullopt;
    }
    S nu = s > 0 ? S(S(2) * k) : S(S(2) * k + S(1));
    if (!(S(2) * nu > S(-1))) return std::nullopt; // not normalizable as a carrier
    return nu;
}

template <class S>
void add_result(IdentitySuiteReport& rep, std::string name, const S& residual, double tol) {
    IdentityResult r;
    r.name = std::move(name);
    r.residual = to_double(residual);
    r.exact = is_exact_scalar<S>;
    r.pass = r.exact ? residual == S(0) : r.residual <= tol;
    rep.results.push_back(std::move(r));
}

template <class S>
void run_axis_dunkl(IdentitySuiteReport& rep, const std::string& ax_name, int n_basis,
                    const S& omega, const S& mu, double tol) {
    const auto basis = Basis1D<S>::plain(n_basis, omega, mu);
    const AxisScalars<S> ax{omega, mu, S(0), S(0)};
    const auto r_op = build_reflection(basis);
    const auto h = build_hamiltonian(basis, Model::dunkl, ax);
    auto [a, adag] = build_ladders(basis, omega);
    auto [b, bdag] = build_B(basis, Model::dunkl, ax);
    const auto id = identity_rep(basis);

    auto add = [&](const char* what, const S& res) {
        add_result(rep, ax_name + ": " + what, res, tol);
    };
    add("a R + R a", interior_residual(a * r_op + r_op * a));
    add("[H,R]", interior_residual(commutator(h, r_op)));
    add("[H,a] + m a", interior_residual(commutator(h, a) + a * omega));
    add("[H,adag] - m adag", interior_residual(commutator(h, adag) - adag * omega));
    add("adag a - (H - m/2 - m mu R)",
        interior_residual((adag * a).normalized() -
                          (h - id * (omega / S(2)) - r_op * (omega * mu))));
    add("[H,B] + 2m B", interior_residual(commutator(h, b) + b * (S(2) * omega)));
    add("[H,Bdag] - 2m Bdag", interior_residual(commutator(h, bdag) - bdag * (S(2) * omega)));

    // G(H) = (1/4)(H - 3m/2 + m mu R)(H - m/2 - m mu R)
    auto g_of = [&](const OperatorRep<S>& arg) {
        return (arg - id * (S(3) * omega / S(2)) + r_op * (omega * mu)) *
               (arg - id * (omega / S(2)) - r_op * (omega * mu)) * (S(1) / S(4));
    };
    add("Bdag B - G(H)", interior_residual(bdag * b - g_of(h)));
    add("B Bdag - G(H+2m)", interior_residual(b * bdag - g_of(h + id * (S(2) * omega))));

    for (int np = 2; np <= 4; ++np) {
        const auto pr = verify_power_identity(basis, omega, np);
        auto add_raw = [&](const std::string& what, double res) {
            IdentityResult r;
            r.name = ax_name + ": " + what;
            r.residual = res;
            r.exact = pr.exact;
            r.pass = pr.exact ? res == 0.0 : res <= tol;
            rep.results.push_back(std::move(r));
        };
        const std::string np_s = std::to_string(np);
        add_raw("a^" + np_s + " braiding", pr.braiding_residual);
        add_raw("[H,a^" + np_s + "] + " + np_s + "m a^" + np_s, pr.commutator_residual);
    }
}

template <class S>
void run_axis_singular(IdentitySuiteReport& rep, const std::string& ax_name, int n_basis,
                       const AxisScalars<S>& ax, int sector, const S& nu, double tol) {
    const auto basis = Basis1D<S>::parity_shifted(n_basis, ax.freq, ax.mu, sector, nu);
    const auto r_op = build_reflection(basis);
    const auto h = build_hamiltonian(basis, Model::singular, ax);
    auto [b, bdag] = build_B(basis, Model::singular, ax);
    const auto id = identity_rep(basis);
    const S omega = ax.freq;

    auto add = [&](const char* what, const S& res) {
        add_result(rep, ax_name + ": " + what, res, tol);
    };
    add("[H,R]", interior_residual(commutator(h, r_op)));
    add("[B,R]", interior_residual(commutator(b, r_op)));
    add("[Bdag,R]", interior_residual(commutator(bdag, r_op)));
    add("[H,B] + 2m B", interior_residual(commutator(h, b) + b * (S(2) * omega)));
    add("[H,Bdag] - 2m Bdag", interior_residual(commutator(h, bdag) - bdag * (S(2) * omega)));

    const S s(sector);
    const Poly<S> g_poly{omega * omega *
                             (S(3) / S(4) + ax.mu * s - ax.mu * ax.mu - ax.alpha - ax.beta * s),
                         S(-2) * omega, S(1)};
    add("Bdag B - G(H)", interior_residual(bdag * b - poly_of(g_poly, h)));
    add("B Bdag - G(H+2m)",
        interior_residual(b * bdag - poly_of(g_poly, h + id * (S(2) * omega))));
}

template <class S>
void run_2d(IdentitySuiteReport& rep, const std::string& name, Model model,
            const Basis1D<S>& bx, const AxisScalars<S>& ax, const Basis1D<S>& by,
            const AxisScalars<S>& ay, int n1, int n2, double tol) {
    const auto g = build_2d_generators(model, bx, ax, by, ay, n1, n2);
    auto add = [&](const char* what, const S& res) {
        add_result(rep, name + ": " + what, res, tol);
    };
    add("[K,I+] - I+", interior_residual(commutator(g.k_op, g.i_plus) - g.i_plus));
    add("[K,I-] + I-", interior_residual(commutator(g.k_op, g.i_minus) + g.i_minus));
    add("[H,I+]", interior_residual(commutator(g.h_op, g.i_plus)));
    add("[H,I-]", interior_residual(commutator(g.h_op, g.i_minus)));
}

std::string sector_tag(int s) { return s > 0 ? "+" : "-"; }

template <class S>
IdentitySuiteReport run_typed(const ModelParams& p, int n_basis, double tol) {
    IdentitySuiteReport rep;
    rep.basis_size = n_basis;
    rep.exact_mode = is_exact_scalar<S>;

    const AxisScalars<S> ax{S(p.m), S(p.mu_x), S(p.alpha_x), S(p.beta_x)};
    const AxisScalars<S> ay{S(p.n), S(p.mu_y), S(p.alpha_y), S(p.beta_y)};

    if (p.model == Model::dunkl) {
        run_axis_dunkl(rep, "x", n_basis, ax.freq, ax.mu, tol);
        run_axis_dunkl(rep, "y", n_basis, ay.freq, ay.mu, tol);
        const auto bx = Basis1D<S>::plain(n_basis, ax.freq, ax.mu);
        const auto by = Basis1D<S>::plain(n_basis, ay.freq, ay.mu);
        run_2d(rep, "2d", Model::dunkl, bx, ax, by, ay, p.n, p.m, tol);
        return rep;
    }

    std::optional<S> nu_x[2], nu_y[2]; // indexed by (1 - s)/2
    for (int s : {+1, -1}) {
        nu_x[(1 - s) / 2] = sector_exponent(ax.mu, ax.alpha, ax.beta, s);
        nu_y[(1 - s) / 2] = sector_exponent(ay.mu, ay.alpha, ay.beta, s);
    }
    for (int s : {+1, -1}) {
        if (auto nu = nu_x[(1 - s) / 2])
            run_axis_singular(rep, "x[s=" + sector_tag(s) + "]", n_basis, ax, s, *nu, tol);
        if (auto nu = nu_y[(1 - s) / 2])
            run_axis_singular(rep, "y[s=" + sector_tag(s) + "]", n_basis, ay, s, *nu, tol);
    }
    for (int sx : {+1, -1})
        for (int sy : {+1, -1}) {
            const auto& nx = nu_x[(1 - sx) / 2];
            const auto& ny = nu_y[(1 - sy) / 2];
            if (!nx || !ny) continue;
            const auto bx = Basis1D<S>::parity_shifted(n_basis, ax.freq, ax.mu, sx, *nx);
            const auto by = Basis1D<S>::parity_shifted(n_basis, ay.freq, ay.mu, sy, *ny);
            run_2d(rep, "2d[s=(" + sector_tag(sx) + "," + sector_tag(sy) + ")]",
                   Model::singular, bx, ax, by, ay, p.n, p.m, tol);
        }
    return rep;
}

// Exact arithmetic works whenever every double-admissible sector has a
// rational carrier exponent (always true for the Dunkl model).
bool exact_possible(const ModelParams& p) {
    if (p.model == Model::dunkl) return true;
    auto axis_ok = [](double mu, double alpha, double beta) {
        for (int s : {+1, -1}) {
            auto approx = sector_exponent<Quad>(Quad(mu), Quad(alpha), Quad(beta), s);
            auto exact = sector_exponent<Rational>(Rational(mu), Rational(alpha),
                                                   Rational(beta), s);
            if (approx && !exact) return false;
        }
        return true;
    };
    return axis_ok(p.mu_x, p.alpha_x, p.beta_x) && axis_ok(p.mu_y, p.alpha_y, p.beta_y);
}

} // namespace

IdentitySuiteReport run_identity_suite(const ModelParams& params, int basis_size, double tol) {
    params.validate();
    if (basis_size < 8)
        throw std::invalid_argument("run_identity_suite: basis_size must be >= 8");
    if (exact_possible(params)) return run_typed<Rational>(params, basis_size, tol);
    return run_typed<Quad>(params, basis_size, tol);
}

} // namespace dunkl
