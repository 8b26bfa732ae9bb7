#pragma once

// Catalog of concrete energy densities: linear isotropic elasticity,
// radially prestressed quadratic media, isotropic singular-value models
// (double wells), power-law densities, 1D potentials, and parametric
// (reparametrization-invariant) test Lagrangians.

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "varlab/energy_model.hpp"
#include "varlab/errors.hpp"

namespace varlab {

// Named parameter bag with the few cross-parameter invariants the catalog
// relies on. kappa is derived, never stored independently.
struct ModelSpec {
    std::string name;
    std::map<std::string, double> params;

    double get(const std::string& key, double fallback) const {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    }
    double require(const std::string& key) const {
        auto it = params.find(key);
        if (it == params.end()) throw ConfigError(name + ": missing parameter " + key);
        return it->second;
    }
};

inline double bulk_modulus(double lambda, double mu, int n) { return lambda + 2.0 * mu / n; }

// W(F) = (lambda/2) tr(F_sym)^2 + mu |F_sym|^2, p_hom = 2, scale-free.
EnergyModel make_linear_isotropic(double lambda, double mu, int n);

// W(x, F) = 1/2 |F_sym - a xh (x) xh|^2; F is a displacement gradient.
// Scale-free (x enters through xh only); undefined at x = 0.
EnergyModel make_prestressed_radial(double a, int n);

// W(F) = |F|^p / p, p >= 1, flags p_hom = p.
EnergyModel make_power_p(double p, int n, int m);

// Symmetric potential of n singular values with first/second partials.
struct SymmetricPotential {
    std::function<double(const std::vector<double>&)> w;
    std::function<double(int, const std::vector<double>&)> wi;
    std::function<double(int, int, const std::vector<double>&)> wij;
};

// Isotropic model evaluated on radial-form states
// F = alpha xh (x) xh + beta (I - xh (x) xh); exposes the w1, w2, w11, w12
// coefficients the radial ODE needs.
class SvModel {
public:
    SvModel(SymmetricPotential pot, int n);

    int dim() const { return n_; }

    double w(double alpha, double beta) const;
    double w1(double alpha, double beta) const;
    double w2(double alpha, double beta) const;
    double w11(double alpha, double beta) const;
    double w12(double alpha, double beta) const;

    // EnergyModel view. W(x,y,F) decomposes F against xh = x/|x| and
    // refuses matrices that are not of radial form.
    EnergyModel model() const;

private:
    SymmetricPotential pot_;
    int n_;
    std::vector<double> radial_args(double alpha, double beta) const;
};

EnergyModel make_isotropic_sv(const SymmetricPotential& pot, int n);

// Quartic double well phi(v) = 1/4 (v - fa)^2 (v - fb)^2 + tilt * v.
struct DoubleWell {
    double fa = 1, fb = 2, tilt = 0;
    double phi(double v) const;
    double dphi(double v) const;
    double d2phi(double v) const;
};

// Separable symmetric potential w(v) = sum_i phi(v_i).
SymmetricPotential separable_potential(const DoubleWell& well);
SvModel make_double_well_sv(double fa, double fb, int n, double tilt = 0);

// 1D elastodynamic potential U(F) = c2 F^2/2 + c4 F^4/4.
struct Potential1D {
    double c2 = 1, c4 = 0;
    double U(double F) const { return 0.5 * c2 * F * F + 0.25 * c4 * F * F * F * F; }
    double P(double F) const { return c2 * F + c4 * F * F * F; }
    double dP(double F) const { return c2 + 3.0 * c4 * F * F; }
    double wave_speed(double F) const;
};

Potential1D make_dynamic_potential(double c2, double c4);

// 1D bar energy W(eps) = W0 cosh(k eps): even, strictly convex, W(0) = W0 > 0.
struct BarPotential {
    double W0 = 1, k = 1;
    double W(double eps) const { return W0 * std::cosh(k * eps); }
    double dW(double eps) const { return W0 * k * std::sinh(k * eps); }
    double d2W(double eps) const { return W0 * k * k * std::cosh(k * eps); }
    double Pstar(double eps) const { return W(eps) - eps * dW(eps); }
};

BarPotential make_bar_potential(double W0, double k);

// Parametric test Lagrangians (P* vanishes identically).
// W(x, y, F) = g(x, y) det F on m = n.
EnergyModel make_parametric_det(int n);
// Area of a parametrized surface patch: m = 3, n = 2, W = |F_1 x F_2|.
EnergyModel make_area_lagrangian();

// W(F) = mu (|F|^2 - n) / 2, the incompressible shear density.
EnergyModel make_shear_quadratic(double mu, int n);

}  // namespace varlab
