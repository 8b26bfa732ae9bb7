#include "varlab/models.hpp"

#include <cmath>

namespace varlab {

EnergyModel make_linear_isotropic(double lambda, double mu, int n) {
    if (mu <= 0 || n * lambda + 2 * mu <= 0)
        throw ConfigError("make_linear_isotropic: non-elliptic moduli");
    EnergyModel em;
    em.name = "linear_isotropic";
    em.m = n;
    em.n = n;
    em.W = [lambda, mu](const Vec&, const Vec&, const Mat& F) {
        Mat e = sym(F);
        double t = trace(e);
        return 0.5 * lambda * t * t + mu * inner(e, e);
    };
    em.W_F = [lambda, mu, n](const Vec&, const Vec&, const Mat& F) {
        Mat e = sym(F);
        return lambda * trace(e) * identity(n) + 2.0 * mu * e;
    };
    em.W_FF = [lambda, mu, n](const Vec&, const Vec&, const Mat&, const Mat& dF) {
        Mat de = sym(dF);
        return lambda * trace(de) * identity(n) + 2.0 * mu * de;
    };
    em.scale_free = true;
    em.p_hom = 2.0;
    em.glin_isotropic = true;
    return em;
}

EnergyModel make_prestressed_radial(double a, int n) {
    if (n < 2) throw ConfigError("make_prestressed_radial: n >= 2 required");
    EnergyModel em;
    em.name = "prestressed_radial";
    em.m = n;
    em.n = n;
    auto eps0 = [a](const Vec& x) {
        double r = norm(x);
        if (r == 0) throw ContractError("prestressed_radial: undefined at x = 0");
        Vec xh = (1.0 / r) * x;
        return a * outer(xh, xh);
    };
    em.W = [eps0](const Vec& x, const Vec&, const Mat& F) {
        Mat d = sym(F) - eps0(x);
        return 0.5 * inner(d, d);
    };
    em.W_F = [eps0](const Vec& x, const Vec&, const Mat& F) { return sym(F) - eps0(x); };
    em.W_FF = [](const Vec&, const Vec&, const Mat&, const Mat& dF) { return sym(dF); };
    em.scale_free = true;  // eps0 depends on xh only
    em.depends_x = true;   // W_x evaluator intentionally omitted
    em.singular_points.push_back(Vec(n));
    return em;
}

EnergyModel make_power_p(double p, int n, int m) {
    if (p < 1) throw ConfigError("make_power_p: p >= 1 required");
    EnergyModel em;
    em.name = "power_p";
    em.m = m;
    em.n = n;
    em.W = [p](const Vec&, const Vec&, const Mat& F) { return std::pow(fnorm(F), p) / p; };
    em.W_F = [p](const Vec&, const Vec&, const Mat& F) {
        double r = fnorm(F);
        if (r == 0) return zeros(F.m, F.n);
        return std::pow(r, p - 2.0) * F;
    };
    em.scale_free = true;
    em.p_hom = p;
    return em;
}

SvModel::SvModel(SymmetricPotential pot, int n) : pot_(std::move(pot)), n_(n) {
    if (n < 2) throw ConfigError("SvModel: n >= 2 required");
}

std::vector<double> SvModel::radial_args(double alpha, double beta) const {
    std::vector<double> v(n_, beta);
    v[0] = alpha;
    return v;
}

double SvModel::w(double alpha, double beta) const { return pot_.w(radial_args(alpha, beta)); }
double SvModel::w1(double alpha, double beta) const { return pot_.wi(0, radial_args(alpha, beta)); }
double SvModel::w2(double alpha, double beta) const { return pot_.wi(1, radial_args(alpha, beta)); }
double SvModel::w11(double alpha, double beta) const {
    return pot_.wij(0, 0, radial_args(alpha, beta));
}
double SvModel::w12(double alpha, double beta) const {
    return pot_.wij(0, 1, radial_args(alpha, beta));
}

EnergyModel SvModel::model() const {
    EnergyModel em;
    em.name = "isotropic_sv";
    em.m = n_;
    em.n = n_;
    int n = n_;
    SvModel self = *this;
    auto decompose = [n](const Vec& x, const Mat& F, double& alpha, double& beta, Mat& Proj) {
        double r = norm(x);
        if (r == 0) throw ContractError("isotropic_sv: x = 0 gives no radial direction");
        Vec xh = (1.0 / r) * x;
        Proj = outer(xh, xh);
        alpha = dot(xh, F * xh);
        beta = (trace(F) - alpha) / (n - 1);
        Mat recon = alpha * Proj + beta * (identity(n) - Proj);
        if (fnorm(F - recon) > 1e-8 * (1.0 + fnorm(F)))
            throw ContractError("isotropic_sv: F is not of radial form (radial-only model)");
        if (alpha < 0 || beta < 0)
            throw ContractError("isotropic_sv: radial state outside eta, eta' >= 0 cone");
    };
    em.W = [self, decompose](const Vec& x, const Vec&, const Mat& F) {
        double alpha, beta;
        Mat P;
        decompose(x, F, alpha, beta, P);
        return self.w(alpha, beta);
    };
    em.W_F = [self, decompose, n](const Vec& x, const Vec&, const Mat& F) {
        double alpha, beta;
        Mat P;
        decompose(x, F, alpha, beta, P);
        return self.w1(alpha, beta) * P + self.w2(alpha, beta) * (identity(n) - P);
    };
    em.scale_free = true;
    return em;
}

EnergyModel make_isotropic_sv(const SymmetricPotential& pot, int n) {
    return SvModel(pot, n).model();
}

double DoubleWell::phi(double v) const {
    double p = (v - fa) * (v - fb);
    return 0.25 * p * p + tilt * v;
}
double DoubleWell::dphi(double v) const {
    return 0.5 * (v - fa) * (v - fb) * (2.0 * v - fa - fb) + tilt;
}
double DoubleWell::d2phi(double v) const {
    double u = v - 0.5 * (fa + fb);
    double d = 0.5 * (fb - fa);
    return 3.0 * u * u - d * d;
}

SymmetricPotential separable_potential(const DoubleWell& well) {
    SymmetricPotential pot;
    pot.w = [well](const std::vector<double>& v) {
        double s = 0;
        for (double vi : v) s += well.phi(vi);
        return s;
    };
    pot.wi = [well](int i, const std::vector<double>& v) { return well.dphi(v[i]); };
    pot.wij = [well](int i, int j, const std::vector<double>& v) {
        return i == j ? well.d2phi(v[i]) : 0.0;
    };
    return pot;
}

SvModel make_double_well_sv(double fa, double fb, int n, double tilt) {
    if (!(fa < fb)) throw ConfigError("make_double_well_sv: fa < fb required");
    return SvModel(separable_potential(DoubleWell{fa, fb, tilt}), n);
}

double Potential1D::wave_speed(double F) const {
    double s = dP(F);
    if (s <= 0) throw SolverError("Potential1D: imaginary wave speed");
    return std::sqrt(s);
}

Potential1D make_dynamic_potential(double c2, double c4) {
    if (c2 <= 0 || c4 < 0) throw ConfigError("make_dynamic_potential: need c2 > 0, c4 >= 0");
    return Potential1D{c2, c4};
}

BarPotential make_bar_potential(double W0, double k) {
    if (W0 <= 0 || k <= 0) throw ConfigError("make_bar_potential: need W0 > 0, k > 0");
    return BarPotential{W0, k};
}

EnergyModel make_parametric_det(int n) {
    EnergyModel em;
    em.name = "parametric_det";
    em.m = n;
    em.n = n;
    auto g = [](const Vec& x, const Vec& y) {
        return 1.0 + 0.25 * std::sin(x[0]) + 0.1 * std::cos(y[0]);
    };
    em.W = [g](const Vec& x, const Vec& y, const Mat& F) { return g(x, y) * det(F); };
    em.W_F = [g](const Vec& x, const Vec& y, const Mat& F) { return g(x, y) * cof(F); };
    em.parametric = true;
    em.depends_x = true;
    em.depends_y = true;
    return em;
}

EnergyModel make_area_lagrangian() {
    EnergyModel em;
    em.name = "area_lagrangian";
    em.m = 3;
    em.n = 2;
    auto col = [](const Mat& F, int j) { return Vec{F(0, j), F(1, j), F(2, j)}; };
    em.W = [col](const Vec&, const Vec&, const Mat& F) {
        return norm(cross(col(F, 0), col(F, 1)));
    };
    em.W_F = [col](const Vec&, const Vec&, const Mat& F) {
        Vec f1 = col(F, 0), f2 = col(F, 1);
        Vec c = cross(f1, f2);
        double r = norm(c);
        if (r == 0) throw ContractError("area_lagrangian: rank-deficient F");
        Vec ch = (1.0 / r) * c;
        Vec g1 = cross(f2, ch), g2 = cross(ch, f1);
        Mat P(3, 2);
        for (int i = 0; i < 3; ++i) {
            P(i, 0) = g1[i];
            P(i, 1) = g2[i];
        }
        return P;
    };
    em.parametric = true;
    return em;
}

EnergyModel make_shear_quadratic(double mu, int n) {
    if (mu <= 0) throw ConfigError("make_shear_quadratic: mu > 0 required");
    EnergyModel em;
    em.name = "shear_quadratic";
    em.m = n;
    em.n = n;
    em.W = [mu, n](const Vec&, const Vec&, const Mat& F) {
        return 0.5 * mu * (inner(F, F) - n);
    };
    em.W_F = [mu](const Vec&, const Vec&, const Mat& F) { return mu * F; };
    em.scale_free = true;
    return em;
}

}  // namespace varlab
