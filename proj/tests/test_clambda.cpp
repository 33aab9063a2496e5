#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "dunklosc/clambda.hpp"
#include "dunklosc/models.hpp"

using namespace dunkl;

namespace {
Complex unit(double turns) {
    return {std::cos(2.0 * std::numbers::pi * turns), std::sin(2.0 * std::numbers::pi * turns)};
}
} // namespace

TEST_CASE("grading sectors are powers of the primitive root") {
    auto s0 = GradingSector::of(2, 0);
    auto s1 = GradingSector::of(2, 1);
    CHECK(s0.tau == Complex(1.0, 0.0));
    CHECK(std::abs(s1.tau - Complex(-1.0, 0.0)) < 1e-15);
    CHECK(GradingSector::reflection(+1).j == 0);
    CHECK(GradingSector::reflection(-1).j == 1);
    auto s2 = GradingSector::of(3, 2);
    CHECK(std::abs(s2.tau - unit(2.0 / 3.0)) < 1e-15);
    CHECK_THROWS_AS(GradingSector::of(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(GradingSector::of(1, 0), std::invalid_argument);
}

TEST_CASE("root of unity sums vanish for intermediate powers") {
    for (int lambda = 2; lambda <= 6; ++lambda)
        for (int m = 1; m < lambda; ++m)
            CHECK(std::abs(root_of_unity_sum(lambda, m)) < 1e-13);
    CHECK_THROWS_AS(root_of_unity_sum(3, 3), std::out_of_range);
    CHECK_THROWS_AS(root_of_unity_sum(3, 0), std::out_of_range);
}

TEST_CASE("beta coefficients for a lambda = 2 axis") {
    auto spec = make_axis_spec(Model::dunkl, AxisParams{2.0, 0.3, 0.0, 0.0});
    CHECK(check_hermiticity(spec));
    auto beta = beta_coeffs(spec);
    REQUIRE(beta.size() == 2);
    CHECK(std::abs(beta[0] - Complex(2.0, 0.0)) < 1e-15);
    CHECK(std::abs(beta[1]) < 1e-15);
}

TEST_CASE("beta coefficients for a lambda = 3 spec") {
    CLambdaAlgebraSpec spec;
    spec.lambda = 3;
    spec.alpha = {Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(0.0, -1.0)};
    spec.q_funcs = {CPoly::identity(), CPoly(), CPoly()};
    spec.ladder_power = 3;
    CHECK(check_hermiticity(spec));
    auto beta = beta_coeffs(spec);
    REQUIRE(beta.size() == 3);
    CHECK(std::abs(beta[0] - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(beta[1] - Complex(0.0, 1.0) * unit(1.0 / 3.0)) < 1e-15);
    CHECK(std::abs(beta[2] - Complex(0.0, -1.0) * unit(2.0 / 3.0)) < 1e-15);
}

TEST_CASE("hermiticity rejects a complex alpha_0") {
    CLambdaAlgebraSpec spec;
    spec.lambda = 2;
    spec.alpha = {Complex(1.0, 0.5), Complex(0.0, 0.0)};
    spec.q_funcs = {CPoly::identity(), CPoly()};
    CHECK_FALSE(check_hermiticity(spec));
}

TEST_CASE("G(H) of the Dunkl axis factorizes into the two Z-factors") {
    const double m = 1.0, mu = 0.3;
    auto spec = make_axis_spec(Model::dunkl, AxisParams{m, mu, 0.0, 0.0});
    for (int s : {+1, -1}) {
        auto sector = GradingSector::reflection(s);
        for (double e : {0.7, 2.0, 5.3}) {
            double expected =
                0.25 * (e - 1.5 * m + m * mu * s) * (e - 0.5 * m - m * mu * s);
            CHECK(g_eval(spec, e, sector) == doctest::Approx(expected).epsilon(1e-13));
        }
    }
}

TEST_CASE("G(H) of the singular axis is the quadratic closed form") {
    const double m = 2.0, mu = 0.3, alpha = 1.0, beta = 0.5;
    auto spec = make_axis_spec(Model::singular, AxisParams{m, mu, alpha, beta});
    for (int s : {+1, -1}) {
        auto sector = GradingSector::reflection(s);
        for (double e : {1.0, 4.0, 9.5}) {
            double expected =
                e * e - 2.0 * m * e + m * m * (0.75 + mu * s - mu * mu - alpha - beta * s);
            CHECK(g_eval(spec, e, sector) == doctest::Approx(expected).epsilon(1e-13));
        }
    }
}

TEST_CASE("deformed oscillator parameter consistency is enforced") {
    DeformedOscParams bad{2, 1, 2.0, 2.0, 2.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    ModelParams p;
    p.m = 3;
    p.n = 2;
    auto osc = osc_params(p);
    CHECK(osc.n1 == 2);
    CHECK(osc.n2 == 3);
    CHECK(osc.gamma == doctest::Approx(12.0));
    osc.validate();
}

TEST_CASE("finite representation solver: isotropic Dunkl, even-even sector") {
    ModelParams p;
    p.m = 1;
    p.n = 1;
    auto spec = make_axis_spec(Model::dunkl, p.x_axis());
    auto osc = osc_params(p);
    auto even = GradingSector::reflection(+1);
    // branch (eps1 = -1, k1 = 1): u(E) = -E/4 + 1/4
    UBranch br{-0.25, 0.25};

    auto sol0 = solve_finite_rep(osc, spec, spec, even, even, {br}, 0);
    REQUIRE(sol0.accepted.size() == 2);
    CHECK(sol0.accepted[0].energy == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sol0.accepted[1].energy == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(sol0.rejected.empty());

    auto sol2 = solve_finite_rep(osc, spec, spec, even, even, {br}, 2);
    REQUIRE(sol2.accepted.size() == 2);
    CHECK(sol2.accepted[0].energy == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(sol2.accepted[1].energy == doctest::Approx(6.0).epsilon(1e-10));
    for (const auto& lvl : sol2.accepted)
        for (double v : lvl.phi_samples) CHECK(v > 0.0);
}

TEST_CASE("finite representation solver rejects a non-annihilating branch") {
    ModelParams p;
    p.m = 1;
    p.n = 1;
    auto spec = make_axis_spec(Model::dunkl, p.x_axis());
    auto osc = osc_params(p);
    auto even = GradingSector::reflection(+1);
    UBranch wrong{-0.25, 0.33}; // intercept off any root of Phi(0, u, E)
    CHECK_THROWS_AS(
        solve_finite_rep(osc, spec, spec, even, even, {wrong}, 1), std::logic_error);
}

TEST_CASE("structure function as S at shifted argument") {
    ModelParams p;
    p.m = 2;
    p.n = 1;
    p.mu_x = 0.3;
    p.mu_y = 0.7;
    auto sx = make_axis_spec(Model::dunkl, p.x_axis());
    auto sy = make_axis_spec(Model::dunkl, p.y_axis());
    auto osc = osc_params(p);
    auto even = GradingSector::reflection(+1);
    auto odd = GradingSector::reflection(-1);
    const double x = 1.5, u = -0.4, e = 7.0;
    CHECK(structure_phi(osc, sx, sy, x, u, e, even, odd) ==
          doctest::Approx(s_n1n2(osc, sx, sy, x + u, e, even, odd)).epsilon(1e-14));
}
