#pragma once

// 1D elastodynamics with a single moving strain discontinuity: exact
// piecewise-constant solutions, the jump driving traction, the energy
// balance, and the dynamic energy representation. All terms close in
// exact arithmetic, so residuals isolate identity errors.

#include <string>
#include <vector>

#include "varlab/identity.hpp"
#include "varlab/models.hpp"

namespace varlab {

enum class LaxVerdict { Admissible, NonLax, Indeterminate };

struct ShockSolution1D {
    Potential1D U;
    double F_minus = 0, F_plus = 0;
    double v_minus = 0, v_plus = 0;
    double V_sh = 0;     // shock speed >= 0; advance direction n_sh = +1
    double s0 = 0;       // shock position at t = 0
    double y0 = 0;       // deformation value at the shock at t = 0
    bool has_shock = false;

    double s(double t) const { return s0 + V_sh * t; }
    double P_minus() const { return U.P(F_minus); }
    double P_plus() const { return U.P(F_plus); }
    double e_minus() const { return 0.5 * v_minus * v_minus + U.U(F_minus); }
    double e_plus() const { return 0.5 * v_plus * v_plus + U.U(F_plus); }

    // Continuous piecewise-affine deformation consistent with (v, F).
    double y(double x, double t) const;
    double v(double x, double t) const;
    double F(double x, double t) const;

    double rh_residual() const;        // [v] V + [P] n_sh
    double hadamard_residual() const;  // V [F] + [v]
    LaxVerdict lax() const;

    // Space-time blocks (coordinates (t, x)): the momentum current
    // [v, -P] and the energy-momentum matrix [[-e, P v], [-F v, v^2/2 - P*]].
    Mat spacetime_piola(bool behind) const;    // 1 x 2
    Mat spacetime_eshelby(bool behind) const;  // 2 x 2
};

// Assembles the state behind the shock so the jump conditions hold
// exactly; rejects [P]/[F] <= 0.
ShockSolution1D build_shock(const Potential1D& U, double F_minus, double F_plus, double v_plus,
                            double s0 = 0.0, double y0 = 0.0);

// Constant state (no discontinuity), for static limits.
ShockSolution1D uniform_state(const Potential1D& U, double F, double v);

// Driving traction p*_{S(t)} = [U] - <{P}, [F]>; also evaluated through the
// space-time Lagrangian blocks and cross-checked (P*_Sigma = -p*).
double shock_pstar(const ShockSolution1D& sol);

// d/dt int e dx = [P v] + boundary transport + V p*-term over [a, b];
// endpoint speeds (va, vb) give the moving-volume variant.
IdentityReport verify_energy_balance(const ShockSolution1D& sol, double a, double b, double t,
                                     const VerifyOptions& opt, double va = 0.0, double vb = 0.0);

// n = 1 dynamic energy representation with the static/inertial split
// recorded in the notes.
IdentityReport verify_dynamic_clapeyron(const ShockSolution1D& sol, double a, double b, double t,
                                        const VerifyOptions& opt);

// Snapshot export: columns x, v, F, e at a fixed time.
void export_shock_tsv(const ShockSolution1D& sol, double a, double b, double t, int samples,
                      const std::string& path);

}  // namespace varlab
