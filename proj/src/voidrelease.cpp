#include "varlab/voidrelease.hpp"

#include <cmath>

#include "varlab/tensor_ops.hpp"

namespace varlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
double unit_ball_volume(int n) { return n == 2 ? kPi : 4.0 * kPi / 3.0; }
}  // namespace

VoidScenario make_void_scenario(int n, double lambda, double mu, double p) {
    if (n != 2 && n != 3) throw ConfigError("make_void_scenario: n in {2, 3}");
    if (mu <= 0) throw ConfigError("make_void_scenario: mu > 0 required");
    VoidScenario scn;
    scn.n = n;
    scn.lambda = lambda;
    scn.mu = mu;
    scn.kappa = bulk_modulus(lambda, mu, n);
    if (scn.kappa <= 0) throw ConfigError("make_void_scenario: kappa > 0 required");
    scn.p = p;
    scn.S = (p / (2.0 * (n - 1) * mu)) * identity(n);
    scn.ext = linear_exterior(p, scn.kappa, mu, n);
    return scn;
}

VoidScenario make_void_scenario_kappa(int n, double kappa, double mu, double p) {
    return make_void_scenario(n, kappa - 2.0 * mu / n, mu, p);
}

DeltaE delta_e_linear(const VoidScenario& scn, int order) {
    DeltaE de;
    de.closed_form = -(scn.p * scn.p / 2.0) *
                     (1.0 / (scn.n * scn.kappa) + 1.0 / (2.0 * (scn.n - 1) * scn.mu)) * scn.n *
                     unit_ball_volume(scn.n);
    QuadratureRule sph = sphere_rule(scn.n, 1.0, order);
    Mat sig0 = scn.sigma0();
    de.quadrature = -0.5 * integrate_surface(
                              [&](const Vec& z, const Vec& nh) {
                                  return dot(sig0 * nh, scn.ext.u_in(z));
                              },
                              sph);
    return de;
}

double delta_e_gct(const VoidScenario& scn, int order) {
    EnergyModel em = make_linear_isotropic(scn.lambda, scn.mu, scn.n);
    QuadratureRule sph = sphere_rule(scn.n, 1.0, order);
    double by_density = -(1.0 / scn.n) * integrate_surface(
                                             [&](const Vec& z, const Vec& nh) {
                                                 Mat G = scn.ext.grad_u_in(z);
                                                 Vec u = scn.ext.u_in(z);
                                                 return em.W(z, u, G) * dot(nh, z);
                                             },
                                             sph);
    double by_eshelby = -(1.0 / scn.n) * integrate_surface(
                                             [&](const Vec& z, const Vec& nh) {
                                                 Mat G = scn.ext.grad_u_in(z);
                                                 Vec u = scn.ext.u_in(z);
                                                 return dot(eshelby(em, z, u, G) * nh, z);
                                             },
                                             sph);
    if (std::abs(by_density - by_eshelby) > 1e-10 * (1.0 + std::abs(by_density)))
        throw SolverError("delta_e_gct: density and configurational forms disagree");
    return by_density;
}

double griffith_isotropic(const Mat& F0, const Mat& S, double lambda, double mu, int n) {
    double trF = trace(F0), trS = trace(S);
    double dot_SF = inner(S, F0);
    return unit_ball_volume(n) / (n + 2.0) *
           ((n * mu - 2.0 * lambda) * trF * trS +
            (2.0 * lambda * n + mu * (n * n + 2.0 * n - 4.0)) * dot_SF);
}

GriffithResult griffith_discrepancy(const VoidScenario& scn, int order) {
    GriffithResult res;
    res.G_closed = griffith_isotropic(scn.F0(), scn.S, scn.lambda, scn.mu, scn.n);
    res.G_hydrostatic = scn.p * scn.p * unit_ball_volume(scn.n) / scn.kappa;
    if (std::abs(res.G_closed - res.G_hydrostatic) >
        1e-8 * (1.0 + std::abs(res.G_hydrostatic)))
        throw SolverError("griffith_discrepancy: closed forms disagree");

    Mat P0 = scn.sigma0();
    Mat F0 = scn.F0();
    EnergyModel em = make_linear_isotropic(scn.lambda, scn.mu, scn.n);
    double radii[3] = {10.0, 20.0, 40.0};
    for (int k = 0; k < 3; ++k) {
        QuadratureRule sph = sphere_rule(scn.n, radii[k], order);
        res.G_truncated[k] = integrate_surface(
            [&](const Vec& z, const Vec& nh) {
                Mat P_in = piola(em, z, scn.ext.u_in(z), scn.ext.grad_u_in(z));
                return dot((P0 - P_in) * nh, F0 * z);
            },
            sph);
    }
    return res;
}

std::vector<IdentityReport> rice_drucker_linear(const VoidScenario& scn,
                                                const VerifyOptions& opt) {
    QuadratureRule sph = sphere_rule(scn.n, 1.0, opt.angular_order);
    Mat sig0 = scn.sigma0();
    Mat F0 = scn.F0();
    EnergyModel em = make_linear_isotropic(scn.lambda, scn.mu, scn.n);
    Vec zero_y(scn.n);
    Vec zero_x(scn.n);
    double W0 = em.W(zero_x, zero_y, F0);

    // Work form, inward-normal traction t_w = -sigma0 n:
    // E - E_d = -1/2 bnd t_w . u_in = +1/2 bnd sigma0 n . u_in = -dE.
    double work_form = 0.5 * integrate_surface(
                                 [&](const Vec& z, const Vec& nh) {
                                     return dot(sig0 * nh, scn.ext.u_in(z));
                                 },
                                 sph);
    double dE = delta_e_linear(scn, opt.angular_order).quadrature;

    std::vector<IdentityReport> out;
    out.push_back(IdentityReport::make("void-work-form", opt.scenario, work_form, -dE, opt.tol,
                                       "release as work of cavity tractions, sign-converted"));

    // Creation identity: the linear loading path y_s = F0 z + s (u_in - F0 z)
    // closes the s-integral to 1/2 (u_in - F0 z).
    double lhs = 0.5 * integrate_surface(
                           [&](const Vec& z, const Vec& nh) {
                               return dot(sig0 * nh, scn.ext.u_in(z) - F0 * z);
                           },
                           sph);
    double rhs = (1.0 / scn.n) * integrate_surface(
                                     [&](const Vec& z, const Vec& nh) {
                                         Mat G = scn.ext.grad_u_in(z);
                                         double W = em.W(z, zero_y, G);
                                         return (W - W0) * dot(nh, z);
                                     },
                                     sph);
    out.push_back(IdentityReport::make("void-creation-identity", opt.scenario, lhs, rhs, opt.tol,
                                       "configurational work creating the cavity"));
    return out;
}

double check_polar_vanishing(const Mat& P0, const Mat& S, int n, int order) {
    if (P0.m != n || P0.n != n || S.m != n || S.n != n)
        throw ContractError("check_polar_vanishing: square n x n matrices required");
    QuadratureRule sph = sphere_rule(n, 1.0, order);
    double dotPS = inner(P0, S);
    return integrate_surface(
        [&](const Vec& xi, const Vec&) { return n * dot(P0 * xi, S * xi) - dotPS; }, sph);
}

}  // namespace varlab
