#pragma once

// Residual verification of the static integral identities: the scale-free
// energy representation and its shifted form, the general bulk-term
// variant, p-homogeneous forms and their cross-relation/conservation law,
// the linear-elastic specializations, the constrained (incompressible)
// form, invariant contour integrals, Pohozaev identities, two-field energy
// increments, and the relaxed-energy radial probe.

#include <optional>
#include <string>
#include <vector>

#include "varlab/energy_model.hpp"
#include "varlab/field.hpp"
#include "varlab/quadrature.hpp"
#include "varlab/radial.hpp"

namespace varlab {

struct IdentityReport {
    std::string identity;
    std::string scenario;
    double lhs = 0;
    double rhs = 0;
    double abs_err = 0;
    double rel_err = 0;
    double tol = 0;
    bool pass = false;
    std::string notes;

    static IdentityReport make(const std::string& identity, const std::string& scenario,
                               double lhs, double rhs, double tol, const std::string& notes = "");
};

// Quadrature orders used by the verifiers; scenario configs may override.
struct VerifyOptions {
    int angular_order = 32;   // polar order for n = 3 (azimuthal is 2x); node count for n = 2
    int radial_order = 64;
    double tol = 1e-8;        // closed-form scenarios
    std::string scenario = "";
};

// nE = boundary work of P and P* (minus the interface term when a jump
// surface is declared); needs a scale-free model and a stationary field.
// shift = optional (a, b) translation pair exercising the shifted form.
struct GctShift {
    Vec a, b;
};
IdentityReport verify_gct(const EnergyModel& model, const DeformationField& field,
                          const Domain& domain, const VerifyOptions& opt,
                          const std::optional<GctShift>& shift = std::nullopt);

// nE = -int (W_x . x + W_y . y) + boundary + interface terms.
IdentityReport verify_genclap(const EnergyModel& model, const DeformationField& field,
                              const Domain& domain, const VerifyOptions& opt);

// p-homogeneous pair: int W = (1/p) bnd P n . y, and
// int W = 1/(n-p) bnd P* n . x (n != p) or bnd P* n . x = 0 (n = p).
std::vector<IdentityReport> verify_phom(const EnergyModel& model, const DeformationField& field,
                                        const Domain& domain, const VerifyOptions& opt);

// Cross-relation (1/p) bnd P n . y = 1/(n-p) bnd P* n . x plus the
// pointwise conservation-law divergence by finite differences.
std::vector<IdentityReport> verify_ppst_and_pi(const EnergyModel& model,
                                               const DeformationField& field,
                                               const Domain& domain, const VerifyOptions& opt);

// Linear-elastic forms: classical Clapeyron, the scale-free variant, the
// rotation-gradient boundary relation, and the pointwise divergence form.
std::vector<IdentityReport> verify_linear_forms(double lambda, double mu,
                                                const DeformationField& field,
                                                const Domain& domain, const VerifyOptions& opt);

// Constrained form for incompressible simple shear with constant pressure.
IdentityReport verify_incompressible(double mu, double gamma, double pressure,
                                     const VerifyOptions& opt);

// Invariant integrals over circles/spheres (paths avoid the singular set).
Vec j_integral(const EnergyModel& model, const DeformationField& field,
               const QuadratureRule& path);
// n = 3: vector L; n = 2: scalar (returned in a 1-vector).
Vec l_integral(const EnergyModel& model, const DeformationField& field,
               const QuadratureRule& path);
double m_integral(const EnergyModel& model, const DeformationField& field,
                  const QuadratureRule& path);

// Pohozaev identities for the radial semilinear solution plus the
// homogeneous uniqueness-criterion verdict.
struct PohozaevVerdict {
    double n = 0, p = 0, k = 0;
    double lhs = 0, rhs = 0;  // 1/n + 1/k vs 1/p
    enum class Result { Holds, Critical, Fails } result;
};
std::vector<IdentityReport> verify_pohozaev(int n, double q, double R, const VerifyOptions& opt);
PohozaevVerdict pohozaev_criterion(int n, double p, double k);

// Energy increment between two stationary fields sharing boundary data:
// the direct and swapped representations, their symmetric difference and
// sum, the one-sided inequality, and the sign criterion.
std::vector<IdentityReport> energy_increment(const EnergyModel& model,
                                             const DeformationField& field1,
                                             const DeformationField& field2, const Domain& domain,
                                             const VerifyOptions& opt);

// Relaxed-energy probe along the radial profile:
// value of w1 eta/r + w - eta' w1 at r against the ball average of W.
IdentityReport qw_probe(const SvModel& model, const RadialProfile& profile, double r,
                        const VerifyOptions& opt);

}  // namespace varlab
