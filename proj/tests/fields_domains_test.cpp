#include <doctest.h>

#include <cmath>

#include "varlab/field.hpp"
#include "varlab/quadrature.hpp"

using namespace varlab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("sphere rules integrate constants to the exact measure") {
    QuadratureRule c = sphere_rule(2, 1.0, 64);
    CHECK(std::abs(c.weight_sum() - 2.0 * kPi) < 1e-12);
    QuadratureRule s = sphere_rule(3, 1.0, 32);
    CHECK(std::abs(s.weight_sum() - 4.0 * kPi) < 1e-12);
    CHECK_THROWS_AS(sphere_rule(4, 1.0, 32), ConfigError);
    CHECK_THROWS_AS(sphere_rule(3, 1.0, 2), ConfigError);
}

TEST_CASE("divergence-theorem check: flux of x through a sphere") {
    double R = 1.7;
    QuadratureRule s = sphere_rule(3, R, 32);
    double flux = integrate_surface([](const Vec& x, const Vec& nh) { return dot(nh, x); }, s);
    CHECK(std::abs(flux - 4.0 * kPi * R * R * R) < 1e-10);
}

TEST_CASE("ball and annulus rules") {
    QuadratureRule b3 = ball_rule(3, 1.0, 64, 32);
    CHECK(std::abs(b3.weight_sum() - 4.0 * kPi / 3.0) < 1e-12);
    double r2 = integrate([](const Vec& x) { return dot(x, x); }, b3);
    CHECK(std::abs(r2 - 4.0 * kPi / 5.0) < 1e-12);

    QuadratureRule an = annulus_rule(2, 1.0, 2.0, 64, 64);
    CHECK(std::abs(an.weight_sum() - 3.0 * kPi) < 1e-12);
}

TEST_CASE("integrate: doubling the order moves smooth results by < 1e-10") {
    auto f = [](const Vec& x) { return std::exp(x[0]) * std::cos(2.0 * x[1]) + x[2] * x[2]; };
    double v1 = integrate(f, ball_rule(3, 1.0, 32, 16));
    double v2 = integrate(f, ball_rule(3, 1.0, 64, 32));
    CHECK(std::abs(v1 - v2) < 1e-10);
}

TEST_CASE("integrate: bitwise deterministic across reruns") {
    auto f = [](const Vec& x) { return std::sin(3.0 * x[0]) + std::cos(x[1] * x[1]); };
    QuadratureRule rule = ball_rule(2, 1.3, 48, 48);
    double a = integrate(f, rule);
    double b = integrate(f, rule);
    CHECK(a == b);
}

TEST_CASE("integrate: non-finite integrand reported with node index") {
    QuadratureRule rule = interval_rule(0.0, 1.0, 8);
    auto f = [](const Vec& x) { return 1.0 / (x[0] - x[0]); };
    CHECK_THROWS_AS(integrate(f, rule), SolverError);
}

TEST_CASE("graded rule absorbs the radial log^2 singularity class") {
    // integral_0^1 r ln(r)^2 dr = 1/4, the weakest radial weight the
    // energy integrands carry (n = 2).
    QuadratureRule rule = graded_interval_rule(1.0, 24, 40, 2.0);
    double v = integrate(
        [](const Vec& x) { double l = std::log(x[0]); return x[0] * l * l; }, rule);
    CHECK(std::abs(v - 0.25) < 1e-10);
}

TEST_CASE("domains: measures, invariants, boundary normals") {
    Domain B = Domain::ball(3, 2.0);
    CHECK(B.volume() == doctest::Approx(4.0 * kPi / 3.0 * 8.0));
    CHECK_THROWS_AS(Domain::ball(3, -1.0), ConfigError);
    CHECK_THROWS_AS(Domain::annulus(2, 2.0, 1.0), ConfigError);
    CHECK_THROWS_AS(Domain::interval(1.0, 0.0), ConfigError);

    // Annulus outward normals point out of the enclosed region on both
    // boundary spheres: flux of x over the full boundary = n |annulus|.
    Domain A = Domain::annulus(2, 1.0, 2.0);
    QuadratureRule bd = A.boundary_rule(64);
    double flux = integrate_surface([](const Vec& x, const Vec& nh) { return dot(nh, x); }, bd);
    CHECK(std::abs(flux - 2.0 * A.volume()) < 1e-10);

    Domain I = Domain::interval(-1.0, 2.0);
    QuadratureRule ib = I.boundary_rule(0);
    CHECK(ib.nodes.size() == 2);
    CHECK(ib.normals[0][0] == -1.0);
    CHECK(ib.normals[1][0] == 1.0);

    Domain C = Domain::circle2d(1.5, Vec{0.2, -0.1});
    CHECK(C.volume() == doctest::Approx(kPi * 2.25));
    QuadratureRule cb = C.boundary_rule(64);
    CHECK(std::abs(cb.weight_sum() - 2.0 * kPi * 1.5) < 1e-12);
    CHECK(norm(cb.nodes[0] - C.center) == doctest::Approx(1.5));
}

TEST_CASE("deformation field: gradient consistent with finite differences") {
    auto eta = [](double r) { return r + 0.2 * r * r; };
    auto etap = [](double r) { return 1.0 + 0.4 * r; };
    DeformationField f = radial_field(3, eta, etap);
    Vec x{0.5, -0.3, 0.8};
    Mat G = f.grad(x);
    double h = 1e-6;
    for (int j = 0; j < 3; ++j) {
        Vec xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        Vec dy = (1.0 / (2.0 * h)) * (f.y(xp) - f.y(xm));
        for (int i = 0; i < 3; ++i) CHECK(std::abs(G(i, j) - dy[i]) < 1e-6 * (1.0 + std::abs(G(i, j))));
    }
}

TEST_CASE("power tail of truncated exterior integrals") {
    // integral_R^inf r^-3 dr = 1/(2 R^2)
    CHECK(power_tail(1.0, 3.0, 2.0) == doctest::Approx(1.0 / 8.0));
    CHECK_THROWS_AS(power_tail(1.0, 0.5, 2.0), ConfigError);
}
