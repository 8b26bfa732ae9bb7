#pragma once

// Radial extremals: the closed-form prestressed ball, the linear exterior
// cavity field, Maxwell interface data, the outward-shot phase-boundary
// profile, the semilinear radial shooting problem, and the 1D optimal bar.

#include <functional>
#include <optional>
#include <string>

#include "varlab/field.hpp"
#include "varlab/models.hpp"
#include "varlab/ode.hpp"
#include "varlab/quadrature.hpp"

namespace varlab {

struct FarField {
    double f_inf = 0;
    double A = 0;
    double alpha = 0;
    bool fit_ok = false;
    double fit_residual = 0;
};

struct RadialProfile {
    int n = 0;
    HermiteGrid grid;                // eta(r) with slope and curvature at nodes
    std::optional<double> r0;       // interface radius
    double f0 = 0;                  // inner slope (eta = f0 r inside)
    double beta = 0;                // eta'(r0+)
    FarField far;

    double eta(double r) const { return grid.eval(r); }
    double eta_prime(double r) const { return grid.eval_d(r); }
    double r_max() const { return grid.back(); }
};

// Closed-form prestressed-ball profile eta(r) = (a/n)(r + (n-1) r ln(r/R)).
RadialProfile example1_profile(int n, double a, double R);

// The same solution as a displacement field (singular at the origin).
DeformationField example1_field(int n, double a, double R);

// Stored energy of the prestressed ball: closed form
// a^2 (n-1)/(2 n^2) |B(0,R)|, cross-checked against ball quadrature of W
// (graded radial mesh absorbs the integrable log^2 singularity).
double example1_energy(int n, double a, double R);

// Radially symmetric isotropic linear exterior cavity field.
struct LinearExterior {
    int n = 0;
    double p = 0, kappa = 0, mu = 0, lambda = 0;

    // u_in(z) = p z / (n kappa) + p z / (2 mu (n-1) |z|^n), |z| >= 1.
    Vec u_in(const Vec& z) const;
    Mat grad_u_in(const Vec& z) const;
    // Undamaged solution and the finite-cavity family.
    Vec u0(const Vec& x) const;
    Vec u_eps(const Vec& x, double eps) const;
    // Normalized displacement increment (p z/(n kappa) + p z/(2 mu (n-1) |z|^n)).
    Vec w_lin(const Vec& x) const;
    // Linear stress of u_in at z.
    Mat stress_in(const Vec& z) const;

    DeformationField field_in() const;
};

LinearExterior linear_exterior(double p, double kappa, double mu, int n);

// Maxwell interface data: w1 continuity plus the chord condition.
struct InterfaceData {
    double f0 = 0;
    double beta = 0;
    double residual_w1 = 0;
    double residual_chord = 0;
};

InterfaceData solve_interface_conditions(const SvModel& model, double guess_f0, double guess_beta);
InterfaceData solve_interface_conditions(const SvModel& model, const DoubleWell& well);

// Integrates the radial equilibrium ODE outward from r = 1 with
// eta(1) = f0, eta'(1) = beta, fits the far field, and returns the profile.
RadialProfile shoot_rODE(const SvModel& model, double f0, double beta, int n, double r_max);

// Composite field: y = f0 x inside the unit ball, eta(r) xh outside,
// with the interface jump descriptor attached.
DeformationField composite_radial_field(const RadialProfile& profile);

// Radial semilinear shooting: u'' + (n-1) u'/r + u^q = 0, u(0) = alpha,
// u'(0) = 0, alpha bisected until u(R) = 0.
struct PohozaevSolution {
    int n = 0;
    double q = 0, R = 0;
    double alpha = 0;        // shooting parameter u(0)
    double du_dn = 0;        // u'(R)
    HermiteGrid grid;        // u(r) on [r_start, R]
    double r_start = 0;      // series start radius
    double u(double r) const;
    double du(double r) const;
};

PohozaevSolution pohozaev_shoot(int n, double q, double R);

// 1D bar with prescribed end displacements and free length.
struct Bar1DResult {
    double eps_opt = 0;
    double L_opt = 0;
    std::function<double(double)> energy;  // E(L) = L W((U1-U0)/L)
    double dE_dL_at_opt = 0;               // finite differences
    double d2E_dL2_at_opt = 0;
};

Bar1DResult bar_1d(const BarPotential& bar, double U0, double U1);

// TSV export: columns r, eta, eta_prime, W, P_rr, Pstar_rr. The three
// model-dependent columns come from the row evaluator (r, eta, eta_prime).
struct ProfileRow {
    double W = 0, P_rr = 0, Pstar_rr = 0;
};
void export_profile_tsv(const RadialProfile& profile, const std::string& path,
                        const std::function<ProfileRow(double, double, double)>& row);

// Row evaluators for the two profile families.
std::function<ProfileRow(double, double, double)> sv_profile_rows(const SvModel& model);
std::function<ProfileRow(double, double, double)> example1_profile_rows(double a, int n);

}  // namespace varlab
