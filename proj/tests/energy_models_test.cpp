#include <doctest.h>

#include <cmath>
#include <random>

#include "varlab/models.hpp"
#include "varlab/tensor_ops.hpp"

using namespace varlab;

TEST_CASE("linear isotropic: basic values and moduli validation") {
    EnergyModel em = make_linear_isotropic(0.0, 0.5, 2);
    Vec x(2), y(2);
    CHECK(em.W(x, y, identity(2)) == doctest::Approx(1.0));

    CHECK(bulk_modulus(1.0, 1.0, 3) == doctest::Approx(5.0 / 3.0));
    CHECK_THROWS_AS(make_linear_isotropic(1.0, -0.5, 3), ConfigError);
    CHECK_THROWS_AS(make_linear_isotropic(-10.0, 1.0, 3), ConfigError);
}

TEST_CASE("linear isotropic: hydrostatic stress closed form") {
    double lambda = 1.0, mu = 1.0;
    int n = 3;
    double kappa = bulk_modulus(lambda, mu, n);
    double p = 0.7;
    EnergyModel em = make_linear_isotropic(lambda, mu, n);
    Mat eps = (p / (n * kappa)) * identity(n);
    Vec x(n), y(n);
    Mat P = piola(em, x, y, eps);
    CHECK(fnorm(P - p * identity(n)) < 1e-14);
}

TEST_CASE("linear isotropic: piola is symmetric") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(-1, 1);
    EnergyModel em = make_linear_isotropic(0.8, 1.4, 3);
    for (int trial = 0; trial < 100; ++trial) {
        Mat F(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) F(i, j) = dist(rng);
        Vec x(3), y(3);
        Mat P = piola(em, x, y, F);
        CHECK(fnorm(P - transpose(P)) < 1e-14);
    }
}

TEST_CASE("prestressed radial: zero energy at the transformation strain") {
    EnergyModel em = make_prestressed_radial(0.9, 3);
    Vec x{0.3, -0.2, 0.5};
    Vec xh = normalized(x);
    Mat F = 0.9 * outer(xh, xh);
    Vec y(3);
    CHECK(em.W(x, y, F) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("prestressed radial: example-1 boundary energy density") {
    // At r = R = 1, n = 3, a = 1: W = ((0)^2 + 2 (1/3)^2)/2 = 1/9.
    EnergyModel em = make_prestressed_radial(1.0, 3);
    Vec xh = basis_vec(3, 0);
    Mat F = 1.0 * outer(xh, xh) + (1.0 / 3.0) * (identity(3) - outer(xh, xh));
    Vec y(3);
    CHECK(em.W(xh, y, F) == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("prestressed radial: scale-free under x doubling") {
    EnergyModel em = make_prestressed_radial(1.0, 3);
    Vec x{0.3, -0.2, 0.5};
    Vec y(3);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> dist(-1, 1);
    Mat F(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) F(i, j) = dist(rng);
    CHECK(em.W(2.0 * x, y, F) == doctest::Approx(em.W(x, y, F)).epsilon(1e-14));
    CHECK_THROWS_AS(em.W(Vec(3), y, F), ContractError);
}

TEST_CASE("isotropic sv: radial evaluation and separability") {
    // w = sum v_i^2 / 2 realized as a separable potential.
    SymmetricPotential pot;
    pot.w = [](const std::vector<double>& v) {
        double s = 0;
        for (double vi : v) s += 0.5 * vi * vi;
        return s;
    };
    pot.wi = [](int i, const std::vector<double>& v) { return v[i]; };
    pot.wij = [](int i, int j, const std::vector<double>&) { return i == j ? 1.0 : 0.0; };
    SvModel m(pot, 3);
    CHECK(m.w(1.0, 1.0) == doctest::Approx(1.5));  // n/2 at alpha = beta = 1

    EnergyModel em = m.model();
    Vec x = basis_vec(3, 2), y(3);
    CHECK(em.W(x, y, identity(3)) == doctest::Approx(1.5));

    SvModel dw = make_double_well_sv(1.0, 2.0, 3);
    CHECK(dw.w(1.0, 1.0) == doctest::Approx(0.0));   // at well a
    CHECK(dw.w12(1.7, 1.2) == doctest::Approx(0.0)); // separable
}

TEST_CASE("isotropic sv: rejects non-radial matrices") {
    SvModel dw = make_double_well_sv(1.0, 2.0, 3);
    EnergyModel em = dw.model();
    Mat F = identity(3);
    F(0, 1) = 0.3;
    Vec x = basis_vec(3, 0), y(3);
    CHECK_THROWS_AS(em.W(x, y, F), ContractError);
}

TEST_CASE("isotropic sv: radial piola matches finite differences of w") {
    SvModel dw = make_double_well_sv(1.0, 2.0, 3);
    EnergyModel em = dw.model();
    Vec xh = normalized(Vec{1.0, 2.0, -0.5});
    Mat Pr = outer(xh, xh);
    double alpha = 1.9, beta = 1.1;
    Mat F = alpha * Pr + beta * (identity(3) - Pr);
    Vec y(3);
    Mat P = piola(em, xh, y, F);
    double h = 1e-6;
    double w1_fd = (dw.w(alpha + h, beta) - dw.w(alpha - h, beta)) / (2 * h);
    double w2_fd = (dw.w(alpha, beta + h) - dw.w(alpha, beta - h)) / (2 * h) / 2.0;
    // P = w1 xh(x)xh + w2 (I - xh(x)xh); contract both projections.
    CHECK(dot(xh, P * xh) == doctest::Approx(w1_fd).epsilon(1e-8));
    double tang = (trace(P) - dot(xh, P * xh)) / 2.0;
    CHECK(tang == doctest::Approx(w2_fd).epsilon(1e-8));
}

TEST_CASE("power-p: values, rank-one nonnegativity, Euler relation") {
    EnergyModel em = make_power_p(2.0, 2, 2);
    Vec x(2), y(2);
    CHECK(em.W(x, y, identity(2)) == doctest::Approx(1.0));

    double p = 3.0;
    EnergyModel em3 = make_power_p(p, 2, 2);
    Mat r1 = outer(basis_vec(2, 0), basis_vec(2, 0));
    CHECK(em3.W(x, y, r1) == doctest::Approx(1.0 / p));
    CHECK(em3.W(x, y, r1) >= 0.0);

    CHECK_THROWS_AS(make_power_p(0.5, 2, 2), ConfigError);

    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> dist(-1, 1);
    Mat F(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) F(i, j) = dist(rng);
    CHECK(inner(piola(em3, x, y, F), F) ==
          doctest::Approx(p * em3.W(x, y, F)).epsilon(1e-12));
}

TEST_CASE("dynamic potential: stress and wave speed") {
    Potential1D U = make_dynamic_potential(1.0, 1.0);
    CHECK(U.P(1.0) == doctest::Approx(2.0));
    CHECK(U.U(0.0) == doctest::Approx(0.0));
    CHECK(U.wave_speed(1.0) == doctest::Approx(2.0));  // sqrt(1 + 3)
    CHECK_THROWS_AS(make_dynamic_potential(-1.0, 0.0), ConfigError);
}

TEST_CASE("bar potential: residual energy and configurational stress") {
    BarPotential bar = make_bar_potential(2.0, 1.5);
    CHECK(bar.W(0.0) == doctest::Approx(2.0));
    CHECK(bar.dW(0.0) == doctest::Approx(0.0));
    CHECK(bar.Pstar(0.0) == doctest::Approx(2.0));  // P*(0) = W0
    // Even and strictly convex.
    CHECK(bar.W(0.7) == doctest::Approx(bar.W(-0.7)));
    CHECK(bar.d2W(0.9) > 0.0);
}

TEST_CASE("model spec: parameter access and missing keys") {
    ModelSpec spec;
    spec.name = "double_well";
    spec.params = {{"f_a", 1.0}, {"f_b", 2.0}, {"mu", 0.5}};
    CHECK(spec.require("f_a") == 1.0);
    CHECK(spec.get("kappa", 9.0) == 9.0);
    CHECK_THROWS_AS(spec.require("lambda"), ConfigError);
    CHECK(spec.require("f_a") < spec.require("f_b"));
}

TEST_CASE("model flag invariants hold at random points") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> dist(-1, 1);
    EnergyModel lin = make_linear_isotropic(1.0, 1.0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        Mat F(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) F(i, j) = dist(rng);
        Vec x(3), y(3);
        for (double lam : {0.5, 2.0, 3.0}) {
            double lhs = lin.W(x, lam * y, lam * F);
            CHECK(std::abs(lhs - lam * lam * lin.W(x, y, F)) <=
                  1e-12 * (1.0 + std::abs(lhs)));
        }
    }
}
