#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace dunkl {

// Dense univariate polynomial, coefficients in ascending degree order.
template <class T>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<T> c) : coeffs_(c) { trim(); }
    explicit Poly(std::vector<T> c) : coeffs_(std::move(c)) { trim(); }
    static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
    static Poly identity() { return Poly(std::vector<T>{T(0), T(1)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<T>& coeffs() const { return coeffs_; }
    T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

    template <class X>
    auto operator()(const X& x) const {
        using R = decltype(T(0) * x);
        R acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator+(const Poly& o) const {
        std::vector<T> c(std::max(coeffs_.size(), o.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
        return Poly(std::move(c));
    }
    Poly operator-(const Poly& o) const {
        std::vector<T> c(std::max(coeffs_.size(), o.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
        return Poly(std::move(c));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> c(coeffs_.size() + o.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
        return Poly(std::move(c));
    }
    Poly operator*(const T& s) const {
        std::vector<T> c = coeffs_;
        for (auto& v : c) v *= s;
        return Poly(std::move(c));
    }
    Poly operator-() const { return *this * T(-1); }

    // Substitute another polynomial for the variable (Horner).
    Poly compose(const Poly& inner) const {
        Poly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * inner + constant(*it);
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<T> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * T(static_cast<int>(i));
        return Poly(std::move(c));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }
    std::vector<T> coeffs_;
};

template <class T>
Poly<T> operator*(const T& s, const Poly<T>& p) { return p * s; }

namespace detail {

inline double poly_newton_polish(const Poly<double>& p, const Poly<double>& dp, double x) {
    for (int it = 0; it < 8; ++it) {
        double f = p(x), d = dp(x);
        if (d == 0.0) break;
        double step = f / d;
        x -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) break;
    }
    return x;
}

} // namespace detail

// All real roots of a real polynomial, ascending, multiplicities collapsed.
// Critical points of p isolate monotone intervals; bisection does the rest.
inline std::vector<double> real_roots(const Poly<double>& p) {
    std::vector<double> roots;
    int deg = p.degree();
    if (deg <= 0) return roots;
    const auto& c = p.coeffs();
    if (deg == 1) {
        roots.push_back(-c[0] / c[1]);
        return roots;
    }
    // Cauchy bound on root magnitude.
    double bound = 0.0;
    for (int i = 0; i < deg; ++i) bound = std::max(bound, std::abs(c[i] / c[deg]));
    bound += 1.0;

    Poly<double> dp = p.derivative();
    std::vector<double> crit = real_roots(dp);
    std::vector<double> grid;
    grid.push_back(-bound);
    for (double x : crit)
        if (x > -bound && x < bound) grid.push_back(x);
    grid.push_back(bound);
    std::sort(grid.begin(), grid.end());

    auto bisect = [&](double a, double b) {
        double fa = p(a);
        for (int it = 0; it < 200; ++it) {
            double m = 0.5 * (a + b), fm = p(m);
            if (fm == 0.0 || (b - a) < 1e-15 * (1.0 + std::abs(m))) return m;
            if ((fa < 0) != (fm < 0)) { b = m; } else { a = m; fa = fm; }
        }
        return 0.5 * (a + b);
    };

    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        double a = grid[i], b = grid[i + 1];
        double fa = p(a), fb = p(b);
        double scale = 1.0;
        for (double v : c) scale = std::max(scale, std::abs(v));
        if (std::abs(fa) < 1e-13 * scale) {
            double r = detail::poly_newton_polish(p, dp, a);
            roots.push_back(r);
            continue;
        }
        if ((fa < 0) != (fb < 0)) {
            double r = bisect(a, b);
            roots.push_back(detail::poly_newton_polish(p, dp, r));
        }
    }
    // endpoint of the last interval
    {
        double b = grid.back();
        double scale = 1.0;
        for (double v : c) scale = std::max(scale, std::abs(v));
        if (std::abs(p(b)) < 1e-13 * scale) roots.push_back(detail::poly_newton_polish(p, dp, b));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-10 * (1.0 + std::abs(a)); }),
                roots.end());
    return roots;
}

} // namespace dunkl
