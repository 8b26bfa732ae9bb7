#include "varlab/shock.hpp"

#include <cmath>
#include <cstdio>

namespace varlab {

double ShockSolution1D::y(double x, double t) const {
    // y(s(t), t) advances with slope v_plus + V F_plus (= v_minus + V F_minus).
    double ys = y0 + (v_plus + V_sh * F_plus) * t;
    double st = s(t);
    return x < st ? ys + F_minus * (x - st) : ys + F_plus * (x - st);
}

double ShockSolution1D::v(double x, double t) const { return x < s(t) ? v_minus : v_plus; }
double ShockSolution1D::F(double x, double t) const { return x < s(t) ? F_minus : F_plus; }

double ShockSolution1D::rh_residual() const {
    return (v_plus - v_minus) * V_sh + (P_plus() - P_minus());
}

double ShockSolution1D::hadamard_residual() const {
    return V_sh * (F_plus - F_minus) + (v_plus - v_minus);
}

LaxVerdict ShockSolution1D::lax() const {
    if (!has_shock || V_sh < 1e-14) return LaxVerdict::Indeterminate;
    double c_ahead = U.wave_speed(F_plus);
    double c_behind = U.wave_speed(F_minus);
    return (c_ahead < V_sh && V_sh < c_behind) ? LaxVerdict::Admissible : LaxVerdict::NonLax;
}

Mat ShockSolution1D::spacetime_piola(bool behind) const {
    double v = behind ? v_minus : v_plus;
    double P = behind ? P_minus() : P_plus();
    Mat M(1, 2);
    M(0, 0) = v;
    M(0, 1) = -P;
    return M;
}

Mat ShockSolution1D::spacetime_eshelby(bool behind) const {
    double v = behind ? v_minus : v_plus;
    double F = behind ? F_minus : F_plus;
    double P = behind ? P_minus() : P_plus();
    double Uv = U.U(F);
    double e = 0.5 * v * v + Uv;
    Mat M(2, 2);
    M(0, 0) = -e;
    M(0, 1) = P * v;
    M(1, 0) = -F * v;
    M(1, 1) = 0.5 * v * v - (Uv - F * P);
    return M;
}

ShockSolution1D build_shock(const Potential1D& U, double F_minus, double F_plus, double v_plus,
                            double s0, double y0) {
    if (F_minus == F_plus) throw ConfigError("build_shock: F_minus = F_plus is not a shock");
    double slope = (U.P(F_plus) - U.P(F_minus)) / (F_plus - F_minus);
    if (slope <= 0) throw SolverError("build_shock: [P]/[F] <= 0, no real shock speed");
    ShockSolution1D sol;
    sol.U = U;
    sol.F_minus = F_minus;
    sol.F_plus = F_plus;
    sol.v_plus = v_plus;
    sol.V_sh = std::sqrt(slope);
    // [v] = -V [F]
    sol.v_minus = v_plus + sol.V_sh * (F_plus - F_minus);
    sol.s0 = s0;
    sol.y0 = y0;
    sol.has_shock = true;
    return sol;
}

ShockSolution1D uniform_state(const Potential1D& U, double F, double v) {
    ShockSolution1D sol;
    sol.U = U;
    sol.F_minus = sol.F_plus = F;
    sol.v_minus = sol.v_plus = v;
    sol.V_sh = 0;
    sol.has_shock = false;
    return sol;
}

double shock_pstar(const ShockSolution1D& sol) {
    double jU = sol.U.U(sol.F_plus) - sol.U.U(sol.F_minus);
    double jF = sol.F_plus - sol.F_minus;
    double meanP = 0.5 * (sol.P_plus() + sol.P_minus());
    double spatial = jU - meanP * jF;

    // Space-time check: P*_Sigma = [L] - <P_pm, [cal F]> with
    // L = v^2/2 - U, cal P = [v, -P], cal F = [v, F].
    double jL = (0.5 * sol.v_plus * sol.v_plus - sol.U.U(sol.F_plus)) -
                (0.5 * sol.v_minus * sol.v_minus - sol.U.U(sol.F_minus));
    double jv = sol.v_plus - sol.v_minus;
    auto spacetime_with = [&](double v_side, double P_side) {
        return jL - (v_side * jv - P_side * jF);
    };
    double st_minus = spacetime_with(sol.v_minus, sol.P_minus());
    double st_plus = spacetime_with(sol.v_plus, sol.P_plus());
    if (std::abs(st_minus - st_plus) > 1e-12 * (1.0 + std::abs(st_minus)))
        throw SolverError("shock_pstar: space-time evaluation is side-dependent");
    if (std::abs(st_minus + spatial) > 1e-12 * (1.0 + std::abs(spatial)))
        throw SolverError("shock_pstar: space-time and spatial forms disagree");
    return spatial;
}

IdentityReport verify_energy_balance(const ShockSolution1D& sol, double a, double b, double t,
                                     const VerifyOptions& opt, double va, double vb) {
    if (!(a < b)) throw ConfigError("verify_energy_balance: a < b required");
    double st = sol.s(t);
    if (sol.has_shock && !(a < st && st < b))
        throw ConfigError("verify_energy_balance: shock outside the control interval");

    double em = sol.e_minus(), ep = sol.e_plus();
    double pstar_term = 0;
    double lhs;
    if (sol.has_shock) {
        // d/dt [ e_minus (s - a(t)) + e_plus (b(t) - s) ]
        lhs = sol.V_sh * (em - ep) - va * em + vb * ep;
        pstar_term = sol.V_sh * (-shock_pstar(sol));  // V P*_Sigma
    } else {
        lhs = -va * em + vb * ep;
    }
    double flux = sol.P_plus() * sol.v_plus - sol.P_minus() * sol.v_minus;
    double transport = ep * vb - em * va;
    double rhs = flux + transport + pstar_term;
    return IdentityReport::make("energy-balance", opt.scenario, lhs, rhs, opt.tol);
}

IdentityReport verify_dynamic_clapeyron(const ShockSolution1D& sol, double a, double b, double t,
                                        const VerifyOptions& opt) {
    if (!(a < b)) throw ConfigError("verify_dynamic_clapeyron: a < b required");
    double st = sol.s(t);
    if (sol.has_shock && !(a < st && st < b))
        throw ConfigError("verify_dynamic_clapeyron: shock outside the control interval");

    double Um = sol.U.U(sol.F_minus), Up = sol.U.U(sol.F_plus);
    double lhs = sol.has_shock ? Um * (st - a) + Up * (b - st) : Um * (b - a);

    double ya = sol.y(a, t), yb = sol.y(b, t);
    double Pm = sol.P_minus(), Pp = sol.P_plus();
    double Psm = Um - sol.F_minus * Pm;
    double Psp = Up - sol.F_plus * Pp;
    double static_term = (Pp * yb + Psp * b) - (Pm * ya + Psm * a);
    double inertial = 0;
    if (sol.has_shock) {
        double ps = shock_pstar(sol);
        static_term -= ps * st;
        double jv = sol.v_plus - sol.v_minus;
        double meanF = 0.5 * (sol.F_plus + sol.F_minus);
        inertial = sol.V_sh * jv * (sol.y(st, t) - meanF * st);
    }
    double rhs = static_term + inertial;  // n = 1
    char notes[128];
    std::snprintf(notes, sizeof notes, "static %.12g, inertial %.12g", static_term, inertial);
    return IdentityReport::make("clapeyron-dynamic", opt.scenario, lhs, rhs, opt.tol, notes);
}

void export_shock_tsv(const ShockSolution1D& sol, double a, double b, double t, int samples,
                      const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) throw ConfigError("export_shock_tsv: cannot open " + path);
    std::fprintf(fp, "x\tv\tF\te\n");
    for (int i = 0; i <= samples; ++i) {
        double x = a + (b - a) * double(i) / samples;
        double v = sol.v(x, t), F = sol.F(x, t);
        double e = 0.5 * v * v + sol.U.U(F);
        std::fprintf(fp, "%.17g\t%.17g\t%.17g\t%.17g\n", x, v, F, e);
    }
    std::fclose(fp);
}

}  // namespace varlab
