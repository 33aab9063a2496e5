#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <utility>

#include "dunklosc/models.hpp"
#include "dunklosc/poly.hpp"
#include "dunklosc/rational.hpp"
#include "dunklosc/sparse.hpp"

namespace dunkl {

// Scalar-typed copy of AxisParams so the exact-rational path shares all
// builder code with the floating one.
template <class S>
struct AxisScalars {
    S freq{1};
    S mu{0};
    S alpha{0};
    S beta{0};
};

inline AxisScalars<double> axis_scalars(const AxisParams& ax) {
    return {ax.freq, ax.mu, ax.alpha, ax.beta};
}

enum class BasisKind { plain, parity_shifted };

// Truncated weighted-polynomial carrier space.
//  plain:          span{ x^j e^{-omega x^2/2} : j = 0..N-1 }
//  parity_shifted: span{ x^{nu+2k} e^{-omega x^2/2} : k = 0..N-1 } continued to
//                  x < 0 with reflection eigenvalue `sector`; nu must be an
//                  indicial root so the singular operators stay in-span.
template <class S>
struct Basis1D {
    int size = 0;
    S omega{1};
    S mu{0};
    BasisKind kind = BasisKind::plain;
    int sector = +1;
    S nu{0};

    static Basis1D plain(int n, S omega, S mu) {
        Basis1D b{n, std::move(omega), std::move(mu), BasisKind::plain, +1, S(0)};
        b.validate();
        return b;
    }
    static Basis1D parity_shifted(int n, S omega, S mu, int sector, S nu) {
        Basis1D b{n, std::move(omega), std::move(mu), BasisKind::parity_shifted, sector,
                  std::move(nu)};
        b.validate();
        return b;
    }

    void validate() const {
        if (size < 4) throw std::invalid_argument("Basis1D: size must be >= 4");
        if (!(omega > S(0))) throw std::invalid_argument("Basis1D: omega must be positive");
        if (mu < S(0)) throw std::invalid_argument("Basis1D: mu must be >= 0");
        if (kind == BasisKind::parity_shifted) {
            if (sector != 1 && sector != -1)
                throw std::invalid_argument("Basis1D: sector must be +-1");
            if (!(S(2) * nu > S(-1)))
                throw std::invalid_argument("Basis1D: nu must exceed -1/2");
        }
    }

    friend bool operator==(const Basis1D&, const Basis1D&) = default;
};

template <class S>
struct Basis2D {
    Basis1D<S> x, y;
    friend bool operator==(const Basis2D&, const Basis2D&) = default;
};

// Matrix of an operator in coefficient action on a Basis1D. `shift` counts how
// many top columns are corrupted by truncation; composites only assert
// identities on columns 0..N-1-shift. Ladder-type matrices are stored times
// 2^{sqrt2_power/2} so entries stay rational.
template <class S>
struct OperatorRep {
    SpMat<S> mat;
    Basis1D<S> basis;
    int shift = 0;
    int sqrt2_power = 0;

    OperatorRep operator+(const OperatorRep& o) const {
        require_compatible(o, true);
        return {mat + o.mat, basis, std::max(shift, o.shift), sqrt2_power};
    }
    OperatorRep operator-(const OperatorRep& o) const {
        require_compatible(o, true);
        return {mat - o.mat, basis, std::max(shift, o.shift), sqrt2_power};
    }
    OperatorRep operator*(const OperatorRep& o) const {
        require_compatible(o, false);
        return {mat * o.mat, basis, shift + o.shift, sqrt2_power + o.sqrt2_power};
    }
    OperatorRep operator*(const S& s) const { return {mat * s, basis, shift, sqrt2_power}; }

    // removes an even number of stored sqrt(2) factors
    OperatorRep normalized() const {
        if (sqrt2_power % 2 != 0)
            throw std::logic_error("OperatorRep: odd sqrt2 power cannot be normalized exactly");
        S scale(1);
        for (int i = 0; i < sqrt2_power / 2; ++i) scale *= S(2);
        return {mat * (S(1) / scale), basis, shift, 0};
    }

private:
    void require_compatible(const OperatorRep& o, bool same_power) const {
        if (!(basis == o.basis)) throw std::invalid_argument("OperatorRep: basis mismatch");
        if (same_power && sqrt2_power != o.sqrt2_power)
            throw std::invalid_argument("OperatorRep: sqrt2 scaling mismatch");
    }
};

template <class S>
OperatorRep<S> identity_rep(const Basis1D<S>& basis) {
    return {SpMat<S>::identity(basis.size), basis, 0, 0};
}

template <class S>
OperatorRep<S> commutator(const OperatorRep<S>& a, const OperatorRep<S>& b) {
    return a * b - b * a;
}

// max |entry| over the truncation-reliable columns
template <class S>
S interior_residual(const OperatorRep<S>& a) {
    const int last = a.basis.size - 1 - a.shift;
    if (last < 0) throw std::invalid_argument("interior_residual: no reliable columns left");
    return a.mat.max_abs_in_cols(last);
}

// x phi_j = phi_{j+1}
template <class S>
OperatorRep<S> build_mult_x(const Basis1D<S>& basis) {
    if (basis.kind != BasisKind::plain)
        throw std::invalid_argument("build_mult_x: x breaks parity on a shifted basis");
    SpMat<S> m(basis.size);
    for (int j = 0; j + 1 < basis.size; ++j) m.set(j + 1, j, S(1));
    return {std::move(m), basis, 1, 0};
}

template <class S>
OperatorRep<S> build_reflection(const Basis1D<S>& basis) {
    SpMat<S> m(basis.size);
    for (int j = 0; j < basis.size; ++j) {
        int s = basis.kind == BasisKind::plain ? (j % 2 == 0 ? 1 : -1) : basis.sector;
        m.set(j, j, S(s));
    }
    return {std::move(m), basis, 0, 0};
}

namespace detail {

// coefficient of phi_{j-1} in D phi_j
template <class S>
S dunkl_lowering(const Basis1D<S>& b, int j) {
    return S(j) + (j % 2 == 1 ? S(2) * b.mu : S(0));
}

// lowering coefficient of the singular-model operators at exponent t = nu+2k:
// (1/2) [t(t-1) + 2 mu t - mu (1 - s)] - (alpha + beta s)/2
template <class S>
S singular_lowering(const Basis1D<S>& b, const AxisScalars<S>& ax, int k) {
    const S t = b.nu + S(2 * k);
    const S s(b.sector);
    const S c = t * (t - S(1)) + S(2) * b.mu * t - b.mu * (S(1) - s);
    return (c - ax.alpha - ax.beta * s) / S(2);
}

} // namespace detail

// D phi_j = [j + mu (1 - (-1)^j)] phi_{j-1} - omega phi_{j+1}
template <class S>
OperatorRep<S> build_dunkl_derivative(const Basis1D<S>& basis) {
    if (basis.kind != BasisKind::plain)
        throw std::invalid_argument("build_dunkl_derivative: plain basis required");
    SpMat<S> m(basis.size);
    for (int j = 0; j < basis.size; ++j) {
        if (j > 0) m.set(j - 1, j, detail::dunkl_lowering(basis, j));
        if (j + 1 < basis.size) m.set(j + 1, j, -basis.omega);
    }
    return {std::move(m), basis, 1, 0};
}

// H = -D^2/2 + omega^2 x^2 / 2 (+ (alpha + beta R)/(2 x^2) for the singular
// model, which requires the parity-shifted carrier).
template <class S>
OperatorRep<S> build_hamiltonian(const Basis1D<S>& basis, Model model,
                                 const AxisScalars<S>& ax) {
    if (!(ax.freq == basis.omega))
        throw std::invalid_argument("build_hamiltonian: basis omega must equal the frequency");
    SpMat<S> m(basis.size);
    if (model == Model::dunkl) {
        if (basis.kind != BasisKind::plain)
            throw std::invalid_argument("build_hamiltonian: dunkl model uses the plain basis");
        if (ax.alpha != S(0) || ax.beta != S(0))
            throw std::invalid_argument("build_hamiltonian: alpha/beta need the singular model");
        for (int j = 0; j < basis.size; ++j) {
            m.set(j, j, basis.omega * (S(2 * j + 1) / S(2) + basis.mu));
            if (j >= 2)
                m.set(j - 2, j,
                      -detail::dunkl_lowering(basis, j) * detail::dunkl_lowering(basis, j - 1) /
                          S(2));
        }
    } else {
        if (basis.kind != BasisKind::parity_shifted)
            throw std::invalid_argument(
                "build_hamiltonian: singular model needs a parity-shifted basis");
        const S indicial = detail::singular_lowering(basis, ax, 0);
        if constexpr (is_exact_scalar<S>) {
            if (!(indicial == S(0)))
                throw std::invalid_argument("build_hamiltonian: nu is not an indicial root");
        } else {
            const double size = 1.0 + std::abs(to_double(basis.nu));
            if (std::abs(to_double(indicial)) > 1e-10 * size * size)
                throw std::invalid_argument("build_hamiltonian: nu is not an indicial root");
        }
        for (int k = 0; k < basis.size; ++k) {
            const S t = basis.nu + S(2 * k);
            m.set(k, k, basis.omega * (t + basis.mu + S(1) / S(2)));
            if (k >= 1) m.set(k - 1, k, -detail::singular_lowering(basis, ax, k));
        }
    }
    return {std::move(m), basis, 2, 0};
}

// a = (omega x + D)/sqrt(2), adag = (omega x - D)/sqrt(2); the returned
// matrices carry one factor of sqrt(2) (sqrt2_power = 1).
template <class S>
std::pair<OperatorRep<S>, OperatorRep<S>> build_ladders(const Basis1D<S>& basis, const S& freq) {
    if (basis.kind != BasisKind::plain)
        throw std::invalid_argument("build_ladders: plain basis required");
    if (!(freq == basis.omega))
        throw std::invalid_argument("build_ladders: basis omega must equal the frequency");
    SpMat<S> lo(basis.size), hi(basis.size);
    for (int j = 0; j < basis.size; ++j) {
        const S c = detail::dunkl_lowering(basis, j);
        if (j > 0) {
            lo.set(j - 1, j, c);
            hi.set(j - 1, j, -c);
        }
        if (j + 1 < basis.size) hi.set(j + 1, j, S(2) * basis.omega);
    }
    OperatorRep<S> a{std::move(lo), basis, 1, 1};
    OperatorRep<S> adag{std::move(hi), basis, 1, 1};
    return {std::move(a), std::move(adag)};
}

// Ladder pair of the lambda = 2 algebra: B = a^2/2 for the Dunkl model,
// B = a^2 - (alpha + beta R)/(2 x^2) (and likewise Bdag) for the singular one.
template <class S>
std::pair<OperatorRep<S>, OperatorRep<S>> build_B(const Basis1D<S>& basis, Model model,
                                                  const AxisScalars<S>& ax) {
    if (model == Model::dunkl) {
        auto [a, adag] = build_ladders(basis, ax.freq);
        return {(a * a).normalized() * (S(1) / S(2)),
                (adag * adag).normalized() * (S(1) / S(2))};
    }
    if (basis.kind != BasisKind::parity_shifted)
        throw std::invalid_argument("build_B: singular model needs a parity-shifted basis");
    if (!(ax.freq == basis.omega))
        throw std::invalid_argument("build_B: basis omega must equal the frequency");
    SpMat<S> lo(basis.size), hi(basis.size);
    for (int k = 0; k < basis.size; ++k) {
        const S t = basis.nu + S(2 * k);
        const S low = detail::singular_lowering(basis, ax, k);
        if (k > 0) {
            lo.set(k - 1, k, low);
            hi.set(k - 1, k, low);
        }
        hi.set(k, k, -basis.omega * (S(2) * t + S(1) + S(2) * basis.mu));
        if (k + 1 < basis.size) hi.set(k + 1, k, S(2) * basis.omega * basis.omega);
    }
    OperatorRep<S> b{std::move(lo), basis, 2, 0};
    OperatorRep<S> bdag{std::move(hi), basis, 2, 0};
    return {std::move(b), std::move(bdag)};
}

// Matrix of Q(H) for a scalar polynomial Q, by Horner's rule.
template <class S>
OperatorRep<S> poly_of(const Poly<S>& q, const OperatorRep<S>& h) {
    // Horner; the accumulated shift is deg * shift_H as the product rule wants
    OperatorRep<S> acc = identity_rep(h.basis) * S(0);
    for (auto it = q.coeffs().rbegin(); it != q.coeffs().rend(); ++it)
        acc = acc * h + identity_rep(h.basis) * *it;
    return acc;
}

struct PowerIdentityReport {
    int n_pow = 0;
    double braiding_residual = 0.0;   // a^N R - (-1)^N R a^N
    double commutator_residual = 0.0; // [H, a^N] + N omega a^N
    bool exact = false;               // residuals are exact rational zeros
};

// Induction identities for the lambda = 2 ladder: a^N R = (-1)^N R a^N and
// [H, a^N] = -N omega a^N, checked on the truncation-reliable block.
template <class S>
PowerIdentityReport verify_power_identity(const Basis1D<S>& basis, const S& freq, int n_pow) {
    if (n_pow < 1 || n_pow > 4)
        throw std::invalid_argument("verify_power_identity: N_pow must be in 1..4");
    auto [a, adag] = build_ladders(basis, freq);
    auto r = build_reflection(basis);
    auto h = build_hamiltonian(basis, Model::dunkl, AxisScalars<S>{basis.omega, basis.mu});
    OperatorRep<S> an = a;
    for (int i = 1; i < n_pow; ++i) an = an * a;
    // both identities are homogeneous of degree one in a^N, so the overall
    // sqrt(2)^N scale cancels and can be dropped from the bookkeeping
    an.sqrt2_power = 0;
    const S sign(n_pow % 2 == 0 ? 1 : -1);
    const S braid = interior_residual(an * r - (r * an) * sign);
    const S comm = interior_residual(commutator(h, an) + an * (S(n_pow) * freq));
    PowerIdentityReport rep;
    rep.n_pow = n_pow;
    rep.braiding_residual = to_double(braid);
    rep.commutator_residual = to_double(comm);
    rep.exact = is_exact_scalar<S>;
    return rep;
}

// Operator on the tensor basis; truncation reliability is tracked per axis.
template <class S>
struct OperatorRep2D {
    SpMat<S> mat;
    Basis2D<S> basis;
    int shift_x = 0, shift_y = 0;

    OperatorRep2D operator+(const OperatorRep2D& o) const {
        require_basis(o);
        return {mat + o.mat, basis, std::max(shift_x, o.shift_x), std::max(shift_y, o.shift_y)};
    }
    OperatorRep2D operator-(const OperatorRep2D& o) const {
        require_basis(o);
        return {mat - o.mat, basis, std::max(shift_x, o.shift_x), std::max(shift_y, o.shift_y)};
    }
    OperatorRep2D operator*(const OperatorRep2D& o) const {
        require_basis(o);
        return {mat * o.mat, basis, shift_x + o.shift_x, shift_y + o.shift_y};
    }
    OperatorRep2D operator*(const S& s) const { return {mat * s, basis, shift_x, shift_y}; }

private:
    void require_basis(const OperatorRep2D& o) const {
        if (!(basis == o.basis)) throw std::invalid_argument("OperatorRep2D: basis mismatch");
    }
};

template <class S>
OperatorRep2D<S> tensor(const OperatorRep<S>& ax, const OperatorRep<S>& ay) {
    if (ax.sqrt2_power != 0 || ay.sqrt2_power != 0)
        throw std::invalid_argument("tensor: normalize sqrt2 scaling first");
    if (static_cast<long long>(ax.basis.size) * ay.basis.size > 4096)
        throw std::invalid_argument("tensor: N_x * N_y must be <= 4096");
    return {SpMat<S>::kron(ax.mat, ay.mat), {ax.basis, ay.basis}, ax.shift, ay.shift};
}

template <class S>
OperatorRep2D<S> commutator(const OperatorRep2D<S>& a, const OperatorRep2D<S>& b) {
    return a * b - b * a;
}

template <class S>
S interior_residual(const OperatorRep2D<S>& a) {
    const int nx = a.basis.x.size, ny = a.basis.y.size;
    const int lx = nx - 1 - a.shift_x, ly = ny - 1 - a.shift_y;
    if (lx < 0 || ly < 0)
        throw std::invalid_argument("interior_residual: no reliable columns left");
    S best(0);
    for (int i = 0; i < nx * ny; ++i)
        for (const auto& [j, v] : a.mat.row(i)) {
            if (j / ny > lx || j % ny > ly) continue;
            S mag = v < S(0) ? S(-v) : v;
            if (mag > best) best = mag;
        }
    return best;
}

// Generators of the 2D symmetry algebra on the tensor basis:
// I_- = B_x^{n1} (B_y^dag)^{n2}, I_+ = (B_x^dag)^{n1} B_y^{n2},
// K = (H_x - H_y)/(2 gamma) with gamma = 2 freq_x freq_y, H = H_x + H_y.
template <class S>
struct Generators2D {
    OperatorRep2D<S> i_minus, i_plus, k_op, h_op;
};

template <class S>
Generators2D<S> build_2d_generators(Model model, const Basis1D<S>& bx, const AxisScalars<S>& ax,
                                    const Basis1D<S>& by, const AxisScalars<S>& ay, int n1,
                                    int n2) {
    if (n1 < 1 || n2 < 1)
        throw std::invalid_argument("build_2d_generators: n1, n2 must be positive");
    if (!(ax.freq * S(n1) == ay.freq * S(n2)))
        throw std::invalid_argument("build_2d_generators: n1 freq_x must equal n2 freq_y");
    auto [b_x, bdag_x] = build_B(bx, model, ax);
    auto [b_y, bdag_y] = build_B(by, model, ay);
    auto h_x = build_hamiltonian(bx, model, ax);
    auto h_y = build_hamiltonian(by, model, ay);
    auto pow_rep = [](OperatorRep<S> base, int e) {
        OperatorRep<S> acc = base;
        for (int i = 1; i < e; ++i) acc = acc * base;
        return acc;
    };
    auto ix = identity_rep(bx);
    auto iy = identity_rep(by);
    Generators2D<S> g{tensor(pow_rep(b_x, n1), pow_rep(bdag_y, n2)),
                      tensor(pow_rep(bdag_x, n1), pow_rep(b_y, n2)),
                      tensor(h_x, iy) - tensor(ix, h_y), tensor(h_x, iy) + tensor(ix, h_y)};
    const S gamma = S(2) * ax.freq * ay.freq;
    g.k_op = g.k_op * (S(1) / (S(2) * gamma));
    return g;
}

// debug dump: one "row,col,value" line per stored entry (value printed as
// num/den for the exact scalar)
inline void dump_entry(std::ostream& os, const Rational& v) {
    os << boost::multiprecision::numerator(v) << '/' << boost::multiprecision::denominator(v);
}
inline void dump_entry(std::ostream& os, double v) { os << v; }

template <class S>
void dump_csv(std::ostream& os, const SpMat<S>& m) {
    for (int i = 0; i < m.size(); ++i)
        for (const auto& [j, v] : m.row(i)) {
            os << i << ',' << j << ',';
            dump_entry(os, v);
            os << '\n';
        }
}

} // namespace dunkl
