#pragma once

// Canonical stress/excess objects: Piola stress, Eshelby tensor, Weierstrass
// excess, Euler-Lagrange residual fields, the jump driving traction p*, and
// the extended (graph-space) Piola stress.

#include <utility>

#include "varlab/energy_model.hpp"
#include "varlab/errors.hpp"
#include "varlab/field.hpp"
#include "varlab/mat.hpp"

namespace varlab {

// First Piola stress P = W_F, analytic when supplied, else central finite
// differences with step 1e-6 (1 + |F|).
Mat piola(const EnergyModel& model, const Vec& x, const Vec& y, const Mat& F);

// Eshelby tensor P* = W I_n - F^T P.
Mat eshelby(const EnergyModel& model, const Vec& x, const Vec& y, const Mat& F);

// Weierstrass excess E(F, G) = W(G) - W(F) - <W_F(F), G - F>.
double excess(const EnergyModel& model, const Vec& x, const Vec& y, const Mat& F, const Mat& G);

// Euler-Lagrange residual pair (E_W, E*_W) at x via second-order central
// differences of the P and P* fields; h is the FD step.
// E_W  = W_y - div P,  E*_W = W_x - div P*.
std::pair<Vec, Vec> euler_residuals(const EnergyModel& model, const DeformationField& field,
                                    const Vec& x, double h);

// Driving traction p* = [W] - <P, [F]> across a rank-one jump.
// Preconditions checked: F_plus - F_minus = a (x) n and [P] n = 0.
double jump_pstar(const EnergyModel& model, const Mat& F_minus, const Mat& F_plus, const Vec& n);

// (P* n) . tau + (P n) . (F tau) for a unit tangent tau and a unit normal
// n constructed orthogonal to tau; vanishes identically.
double check_graph_orthogonality(const EnergyModel& model, const Vec& x, const Vec& y,
                                 const Mat& F, const Vec& tangent);

// Extended (graph-space) objects of the parametric embedding:
// Fhat = [F1; F2] (m+n) x n with invertible F1,
// What(z, Fhat) = W(z, F2 F1^{-1}) det F1,
// Phat = [P*(z, G) cof F1 ; P(z, G) cof F1] with G = F2 F1^{-1}.
struct ExtendedState {
    double What = 0;
    Mat Phat;          // (m+n) x n
    Mat eshelby_ext;   // What I_n - Fhat^T Phat, vanishes identically
};

ExtendedState extended_piola(const EnergyModel& model, const Vec& z, const Mat& Fhat);

// What(z, Fhat Q) / det Q - What(z, Fhat), for testing Q-homogeneity.
double extended_qhom_defect(const EnergyModel& model, const Vec& z, const Mat& Fhat, const Mat& Q);

}  // namespace varlab
