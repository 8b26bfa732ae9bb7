#pragma once

// Energy release of small-void formation in a linearly elastic medium under
// hydrostatic remote load: the work-of-tractions formula, the boundary
// energy-density (configurational) formula, their agreement, the
// incremental-loading identities, and the truncation discrepancy term.

#include "varlab/identity.hpp"
#include "varlab/radial.hpp"

namespace varlab {

struct VoidScenario {
    int n = 3;
    double lambda = 1, mu = 1, kappa = 0;
    double p = 1;       // remote hydrostatic traction
    Mat S;              // polarization of the spherical cavity
    LinearExterior ext; // inner (cavity) field

    Mat F0() const { return (p / (n * kappa)) * identity(n); }
    Mat sigma0() const { return p * identity(n); }
};

VoidScenario make_void_scenario(int n, double lambda, double mu, double p);
VoidScenario make_void_scenario_kappa(int n, double kappa, double mu, double p);

struct DeltaE {
    double quadrature = 0;
    double closed_form = 0;
};

// dE = -1/2 bnd sigma(0) n . u_in dS over the unit cavity sphere, with the
// closed form -(p^2/2)(1/(n kappa) + 1/(2(n-1)mu)) n |B(0,1)|.
DeltaE delta_e_linear(const VoidScenario& scn, int order = 32);

// dE = -(1/n) bnd W(grad u_in)(n . z) dS; also evaluated as
// -(1/n) bnd P* n . z and cross-checked to 1e-10.
double delta_e_gct(const VoidScenario& scn, int order = 32);

struct GriffithResult {
    double G_closed = 0;             // isotropic closed form from (F0, S)
    double G_hydrostatic = 0;        // p^2 |B(0,1)| / kappa
    double G_truncated[3] = {0, 0, 0};  // sphere radii 10, 20, 40
};

// General isotropic closed form of the discrepancy for given (F0, S).
double griffith_isotropic(const Mat& F0, const Mat& S, double lambda, double mu, int n);

GriffithResult griffith_discrepancy(const VoidScenario& scn, int order = 32);

// Incremental-loading identities: the work form against delta_e_linear and
// the creation identity (s-integral closed in the linear path).
std::vector<IdentityReport> rice_drucker_linear(const VoidScenario& scn,
                                                const VerifyOptions& opt);

// bnd { n (P0 xi . S xi) - <P0, S> } dS(xi) over the unit sphere; vanishes
// for arbitrary square P0, S by the moment identities.
double check_polar_vanishing(const Mat& P0, const Mat& S, int n, int order = 32);

}  // namespace varlab
