#include "varlab/radial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "varlab/tensor_ops.hpp"

namespace varlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double unit_ball_volume(int n) {
    switch (n) {
        case 1: return 2.0;
        case 2: return kPi;
        case 3: return 4.0 * kPi / 3.0;
        default: throw ConfigError("unit_ball_volume: unsupported dimension");
    }
}

}  // namespace

RadialProfile example1_profile(int n, double a, double R) {
    if (n < 2 || R <= 0) throw ConfigError("example1_profile: need n >= 2, R > 0");
    auto eta = [a, n, R](double r) { return a / n * (r + (n - 1) * r * std::log(r / R)); };
    auto etap = [a, n, R](double r) { return a / n * (n + (n - 1) * std::log(r / R)); };
    auto etapp = [a, n](double r) { return a * (n - 1) / (n * r); };

    RadialProfile prof;
    prof.n = n;
    // Log-spaced grid toward the strain singularity at the center.
    int N = 4000;
    double r_lo = 1e-8 * R;
    for (int i = 0; i <= N; ++i) {
        double r = r_lo * std::pow(R / r_lo, double(i) / N);
        prof.grid.t.push_back(r);
        prof.grid.y.push_back(eta(r));
        prof.grid.yp.push_back(etap(r));
        prof.grid.ypp.push_back(etapp(r));
    }
    prof.far.f_inf = etap(R);  // boundary slope; no exterior part
    prof.far.fit_ok = false;
    return prof;
}

DeformationField example1_field(int n, double a, double R) {
    auto eta = [a, n, R](double r) { return a / n * (r + (n - 1) * r * std::log(r / R)); };
    auto etap = [a, n, R](double r) { return a / n * (n + (n - 1) * std::log(r / R)); };
    return radial_field(n, eta, etap);
}

double example1_energy(int n, double a, double R) {
    double closed = a * a * (n - 1) / (2.0 * n * n) * unit_ball_volume(n) * std::pow(R, n);
    if (a == 0) return 0.0;

    // Cross-check by ball quadrature; radial mesh graded toward the log
    // singularity at the center.
    auto W = [a, n, R](double r) {
        double ep = a / n * (n + (n - 1) * std::log(r / R));
        double tang = a / n * (1 + (n - 1) * std::log(r / R));
        return 0.5 * ((ep - a) * (ep - a) + (n - 1) * tang * tang);
    };
    QuadratureRule radial = graded_interval_rule(R, 24, 40, 2.0);
    double quad = 0;
    {
        double s = 0;
        for (size_t i = 0; i < radial.nodes.size(); ++i) {
            double r = radial.nodes[i][0];
            s += radial.weights[i] * W(r) * std::pow(r, n - 1);
        }
        quad = s * n * unit_ball_volume(n);  // |S^{n-1}| = n |B(0,1)|
    }
    if (std::abs(quad - closed) > 1e-6 * std::abs(closed))
        throw SolverError("example1_energy: quadrature disagrees with closed form");
    return closed;
}

Vec LinearExterior::u_in(const Vec& z) const {
    double r = norm(z);
    if (r < 1.0 - 1e-12) throw ContractError("linear_exterior: u_in defined for |z| >= 1");
    return (p / (n * kappa) + p / (2.0 * mu * (n - 1) * std::pow(r, n))) * z;
}

Mat LinearExterior::grad_u_in(const Vec& z) const {
    double r = norm(z);
    if (r < 1.0 - 1e-12) throw ContractError("linear_exterior: grad_u_in defined for |z| >= 1");
    Vec zh = (1.0 / r) * z;
    double b = p / (2.0 * mu * (n - 1) * std::pow(r, n));
    // grad(z / |z|^n) = |z|^{-n} (I - n zh (x) zh)
    return (p / (n * kappa)) * identity(n) + b * (identity(n) - double(n) * outer(zh, zh));
}

Vec LinearExterior::u0(const Vec& x) const { return (p / (n * kappa)) * x; }

Vec LinearExterior::u_eps(const Vec& x, double eps) const {
    double r = norm(x);
    double en = std::pow(eps, n);
    return (p / (n * kappa * (1.0 - en)) + p * en / (2.0 * mu * (n - 1) * (1.0 - en) * std::pow(r, n))) *
           x;
}

Vec LinearExterior::w_lin(const Vec& x) const {
    double r = norm(x);
    return (p / (n * kappa) + p / (2.0 * mu * (n - 1) * std::pow(r, n))) * x;
}

Mat LinearExterior::stress_in(const Vec& z) const {
    Mat e = sym(grad_u_in(z));
    return lambda * trace(e) * identity(n) + 2.0 * mu * e;
}

DeformationField LinearExterior::field_in() const {
    DeformationField f;
    f.m = n;
    f.n = n;
    LinearExterior self = *this;
    f.y = [self](const Vec& z) { return self.u_in(z); };
    f.grad = [self](const Vec& z) { return self.grad_u_in(z); };
    f.singular_points.push_back(Vec(n));
    return f;
}

LinearExterior linear_exterior(double p, double kappa, double mu, int n) {
    if (mu <= 0 || kappa <= 0 || n < 2) throw ConfigError("linear_exterior: bad moduli");
    LinearExterior ext;
    ext.n = n;
    ext.p = p;
    ext.kappa = kappa;
    ext.mu = mu;
    ext.lambda = kappa - 2.0 * mu / n;
    return ext;
}

namespace {

// Interface system: g1 = w1 continuity, g2 = chord condition.
struct InterfaceSystem {
    const SvModel& m;
    int n;
    Vec g(double f0, double beta) const {
        Vec r(2);
        r[0] = m.w1(beta, f0) - m.w1(f0, f0);
        r[1] = m.w(beta, f0) - m.w(f0, f0) - m.w1(f0, f0) * (beta - f0);
        return r;
    }
    Mat jac(double f0, double beta) const {
        Mat J(2, 2);
        double w1ff = m.w11(f0, f0) + (n - 1) * m.w12(f0, f0);  // d/df0 of w1(f0,...,f0)
        J(0, 0) = (n - 1) * m.w12(beta, f0) - w1ff;
        J(0, 1) = m.w11(beta, f0);
        J(1, 0) = (n - 1) * (m.w2(beta, f0) - m.w1(f0, f0)) - w1ff * (beta - f0);
        J(1, 1) = m.w1(beta, f0) - m.w1(f0, f0);
        return J;
    }
};

}  // namespace

InterfaceData solve_interface_conditions(const SvModel& model, double guess_f0,
                                         double guess_beta) {
    InterfaceSystem sys{model, model.dim()};
    double f0 = guess_f0, beta = guess_beta;
    Vec g = sys.g(f0, beta);
    double gn = norm(g);
    bool converged = gn <= 1e-12;

    for (int it = 0; it < 60 && !converged; ++it) {
        Mat J = sys.jac(f0, beta);
        double dj = det(J);
        if (std::abs(dj) < 1e-300) break;
        Vec step = inverse(J) * g;
        double lam = 1.0;
        bool improved = false;
        for (int ls = 0; ls < 40; ++ls) {
            double f0n = f0 - lam * step[0], betan = beta - lam * step[1];
            Vec gn2 = sys.g(f0n, betan);
            if (norm(gn2) < gn) {
                f0 = f0n;
                beta = betan;
                g = gn2;
                gn = norm(g);
                improved = true;
                break;
            }
            lam *= 0.5;
        }
        if (!improved) break;
        if (gn <= 1e-13) {
            converged = true;
            break;
        }
    }

    if (!converged && gn > 1e-10) {
        // Maxwell bisection fallback for separable wells: sweep the common
        // stress sigma, solving w1 = sigma in each well basin.
        auto branch_root = [&](double sigma, double lo, double hi) {
            auto f = [&](double v) { return model.w1(v, v) - sigma; };
            double flo = f(lo), fhi = f(hi);
            if (flo * fhi > 0) throw BracketError("interface fallback: no stress root in branch");
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = f(mid);
                if (flo * fm <= 0) {
                    hi = mid;
                    fhi = fm;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            return 0.5 * (lo + hi);
        };
        double lo_a = guess_f0 - 0.45 * (guess_beta - guess_f0);
        double hi_a = guess_f0 + 0.45 * (guess_beta - guess_f0);
        double lo_b = guess_beta - 0.45 * (guess_beta - guess_f0);
        double hi_b = guess_beta + 0.45 * (guess_beta - guess_f0);
        auto maxwell = [&](double sigma) {
            double fa = branch_root(sigma, lo_a, hi_a);
            double fb = branch_root(sigma, lo_b, hi_b);
            return model.w(fb, fb) - model.w(fa, fa) - sigma * (fb - fa);
        };
        double s_lo = -0.5, s_hi = 0.5, m_lo = maxwell(s_lo);
        if (m_lo * maxwell(s_hi) > 0)
            throw BracketError(
                "solve_interface_conditions: no Maxwell root in stress bracket [-0.5, 0.5]");
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (s_lo + s_hi);
            if (m_lo * maxwell(mid) <= 0)
                s_hi = mid;
            else
                s_lo = mid;
        }
        double sigma = 0.5 * (s_lo + s_hi);
        f0 = branch_root(sigma, lo_a, hi_a);
        beta = branch_root(sigma, lo_b, hi_b);
        g = sys.g(f0, beta);
        if (norm(g) > 1e-9)
            throw BracketError("solve_interface_conditions: fallback did not converge");
    }

    InterfaceData data;
    data.f0 = f0;
    data.beta = beta;
    data.residual_w1 = g[0];
    data.residual_chord = g[1];
    return data;
}

InterfaceData solve_interface_conditions(const SvModel& model, const DoubleWell& well) {
    return solve_interface_conditions(model, well.fa, well.fb);
}

RadialProfile shoot_rODE(const SvModel& model, double f0, double beta, int n, double r_max) {
    if (r_max <= 1.5) throw ConfigError("shoot_rODE: r_max > 1.5 required");

    auto rhs = [&](double r, const Vec& s) {
        double eta = s[0], etap = s[1];
        if (eta < 0 || etap < 0)
            throw SolverError("shoot_rODE: trajectory left the eta, eta' >= 0 cone");
        double tang = eta / r;
        double w11 = model.w11(etap, tang);
        if (w11 <= 0) throw EllipticityLossError("shoot_rODE: w11 <= 0 along trajectory");
        double w12 = model.w12(etap, tang);
        double w1 = model.w1(etap, tang);
        double w2 = model.w2(etap, tang);
        double tang_rate = (etap - tang) / r;
        double etapp = -((n - 1) * w12 * tang_rate + (n - 1) / r * (w1 - w2)) / w11;
        return Vec{etap, etapp};
    };

    // Output grid: dense near the interface (FD-grade reconstruction),
    // log-spaced through the far field.
    std::vector<double> rout;
    double dense_hi = std::min(15.0, r_max);
    int ndense = int((dense_hi - 1.0) / 0.002) + 1;
    for (int i = 0; i <= ndense; ++i) rout.push_back(1.0 + (dense_hi - 1.0) * i / ndense);
    if (dense_hi < r_max) {
        int nlog = std::max(60, int(48 * std::log10(r_max / dense_hi)));
        for (int i = 1; i <= nlog; ++i)
            rout.push_back(dense_hi * std::pow(r_max / dense_hi, double(i) / nlog));
    }

    OdeOptions opt;
    opt.rtol = 1e-10;
    opt.atol = 1e-12;
    opt.h0 = 1e-4;
    std::vector<Vec> states = ode45(rhs, 1.0, Vec{f0, beta}, rout, opt);

    RadialProfile prof;
    prof.n = n;
    prof.r0 = 1.0;
    prof.f0 = f0;
    prof.beta = beta;
    for (size_t i = 0; i < rout.size(); ++i) {
        prof.grid.t.push_back(rout[i]);
        prof.grid.y.push_back(states[i][0]);
        prof.grid.yp.push_back(states[i][1]);
        prof.grid.ypp.push_back(rhs(rout[i], states[i])[1]);
    }

    // Far-field record. The endpoint pair (eta, eta') matched against
    // eta = f_inf r + A r^{1-n} determines (f_inf, A) with the leading
    // r^{-n} corrections cancelled; the decay exponent alpha comes from a
    // least-squares line on the last decade.
    double rm = rout.back();
    double eta_m = prof.grid.y.back(), etap_m = prof.grid.yp.back();
    double f_inf = ((n - 1) * eta_m / rm + etap_m) / n;
    prof.far.f_inf = f_inf;
    prof.far.A = std::pow(rm, n - 1) * (eta_m - etap_m * rm) / n;

    std::vector<double> lr, lg;
    double gmax = 0;
    double window_lo = rm / 10.0;
    double gsign = 0;
    for (size_t i = 0; i < rout.size(); ++i) {
        if (rout[i] < window_lo) continue;
        double g = prof.grid.y[i] - f_inf * rout[i];
        gmax = std::max(gmax, std::abs(g));
        if (gsign == 0 && g != 0) gsign = g > 0 ? 1.0 : -1.0;
        if (g * gsign > 0) {
            lr.push_back(std::log(rout[i]));
            lg.push_back(std::log(std::abs(g)));
        }
    }
    if (gmax < 1e-12 * (1.0 + std::abs(f_inf) * rm)) {
        // Affine profile: no decaying mode to fit.
        prof.far.A = 0;
        prof.far.alpha = n - 1;
        prof.far.fit_ok = true;
        prof.far.fit_residual = 0;
        return prof;
    }
    if (lr.size() < 8) throw SolverError("shoot_rODE: too few far-field samples for the fit");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    size_t N = lr.size();
    for (size_t i = 0; i < N; ++i) {
        sx += lr[i];
        sy += lg[i];
        sxx += lr[i] * lr[i];
        sxy += lr[i] * lg[i];
    }
    double slope = (N * sxy - sx * sy) / (N * sxx - sx * sx);
    double icept = (sy - slope * sx) / N;
    prof.far.alpha = -slope;

    // Fit quality: relative prediction error of the fitted power law at
    // the far end of the window.
    double g_end = eta_m - f_inf * rm;
    double pred = gsign * std::exp(icept + slope * std::log(rm));
    prof.far.fit_residual = std::abs(pred - g_end) / std::abs(g_end);
    prof.far.fit_ok = prof.far.fit_residual <= 1e-4;
    return prof;
}

DeformationField composite_radial_field(const RadialProfile& profile) {
    if (!profile.r0) throw ContractError("composite_radial_field: profile has no interface");
    int n = profile.n;
    double r0 = *profile.r0;
    double f0 = profile.f0;
    auto grid = profile.grid;  // value copy; field owns its data

    DeformationField f;
    f.m = n;
    f.n = n;
    f.y = [grid, r0, f0](const Vec& x) {
        double r = norm(x);
        if (r < r0) return f0 * x;
        return (grid.eval(r) / r) * x;
    };
    f.grad = [grid, r0, f0, n](const Vec& x) {
        double r = norm(x);
        if (r < r0) return f0 * identity(n);
        Vec xh = (1.0 / r) * x;
        Mat P = outer(xh, xh);
        return grid.eval_d(r) * P + (grid.eval(r) / r) * (identity(n) - P);
    };
    RadialJump jump;
    jump.r0 = r0;
    jump.grad_minus = [f0, n](const Vec&) { return f0 * identity(n); };
    double beta = profile.beta;
    jump.grad_plus = [beta, f0, n](const Vec& x) {
        Vec xh = normalized(x);
        Mat P = outer(xh, xh);
        return beta * P + f0 * (identity(n) - P);
    };
    f.jump = jump;
    return f;
}

PohozaevSolution pohozaev_shoot(int n, double q, double R) {
    if (n < 3) throw ConfigError("pohozaev_shoot: n >= 3 required");
    if (!(q > 1 && q < double(n + 2) / double(n - 2)))
        throw ConfigError("pohozaev_shoot: subcritical q in (1, (n+2)/(n-2)) required");
    if (R <= 0) throw ConfigError("pohozaev_shoot: R > 0 required");

    double r_start = 1e-4 * R;
    auto rhs = [n, q](double r, const Vec& s) {
        double u = s[0], up = s[1];
        double uq = (u >= 0) ? std::pow(u, q) : -std::pow(-u, q);
        return Vec{up, -(n - 1) / r * up - uq};
    };
    auto shoot_end = [&](double alpha) {
        // Series start: u = alpha - alpha^q r^2 / (2n).
        double c = -std::pow(alpha, q) / (2.0 * n);
        Vec y0{alpha + c * r_start * r_start, 2.0 * c * r_start};
        OdeOptions opt;
        opt.rtol = 1e-12;
        opt.atol = 1e-14;
        opt.h0 = 1e-5;
        return ode45(rhs, r_start, y0, {R}, opt)[0][0];
    };

    // Bracket scan in alpha, then bisection.
    double lo = 1e-3, hi = 0;
    double glo = shoot_end(lo);
    double a = lo;
    bool bracketed = false;
    while (a < 1e3) {
        double b = a * 1.6;
        double gb = shoot_end(b);
        if (glo * gb <= 0) {
            lo = a;
            hi = b;
            bracketed = true;
            break;
        }
        a = b;
        glo = gb;
        lo = a;
    }
    if (!bracketed)
        throw BracketError("pohozaev_shoot: no sign change of u(R) for alpha in [1e-3, 1e3]");

    double alpha = 0.5 * (lo + hi), g = 0;
    double g_lo = shoot_end(lo);
    for (int it = 0; it < 200; ++it) {
        alpha = 0.5 * (lo + hi);
        g = shoot_end(alpha);
        if (std::abs(g) <= 1e-10) break;
        if (g_lo * g <= 0)
            hi = alpha;
        else {
            lo = alpha;
            g_lo = g;
        }
    }
    if (std::abs(g) > 1e-10) throw SolverError("pohozaev_shoot: bisection stalled");

    // Final dense pass at the converged alpha.
    PohozaevSolution sol;
    sol.n = n;
    sol.q = q;
    sol.R = R;
    sol.alpha = alpha;
    sol.r_start = r_start;
    std::vector<double> rout;
    int N = 4000;
    for (int i = 0; i <= N; ++i) rout.push_back(r_start + (R - r_start) * double(i) / N);
    double c = -std::pow(alpha, q) / (2.0 * n);
    Vec y0{alpha + c * r_start * r_start, 2.0 * c * r_start};
    OdeOptions opt;
    opt.rtol = 1e-12;
    opt.atol = 1e-14;
    opt.h0 = 1e-5;
    std::vector<Vec> states = ode45(rhs, r_start, y0, rout, opt);
    for (size_t i = 0; i < rout.size(); ++i) {
        sol.grid.t.push_back(rout[i]);
        sol.grid.y.push_back(states[i][0]);
        sol.grid.yp.push_back(states[i][1]);
        sol.grid.ypp.push_back(rhs(rout[i], states[i])[1]);
    }
    sol.du_dn = states.back()[1];
    return sol;
}

double PohozaevSolution::u(double r) const {
    if (r <= r_start) {
        double c = -std::pow(alpha, q) / (2.0 * n);
        return alpha + c * r * r;
    }
    return grid.eval(r);
}

double PohozaevSolution::du(double r) const {
    if (r <= r_start) {
        double c = -std::pow(alpha, q) / (2.0 * n);
        return 2.0 * c * r;
    }
    return grid.eval_d(r);
}

Bar1DResult bar_1d(const BarPotential& bar, double U0, double U1) {
    if (!(U1 > U0)) throw ConfigError("bar_1d: U1 > U0 required");

    double lo = 1e-8, hi = lo;
    double plo = bar.Pstar(lo);
    bool bracketed = false;
    for (double e = 0.1 / bar.k; e < 200.0 / bar.k; e *= 1.5) {
        if (bar.Pstar(e) < 0) {
            hi = e;
            bracketed = true;
            break;
        }
        lo = e;
        plo = bar.Pstar(e);
    }
    if (!bracketed) throw BracketError("bar_1d: P* has no sign change on (0, eps_max)");
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (plo * bar.Pstar(mid) <= 0)
            hi = mid;
        else {
            lo = mid;
            plo = bar.Pstar(mid);
        }
    }

    Bar1DResult res;
    res.eps_opt = 0.5 * (lo + hi);
    double D = U1 - U0;
    res.L_opt = D / res.eps_opt;
    res.energy = [bar, D](double L) { return L * bar.W(D / L); };
    double h = 1e-6 * res.L_opt;
    res.dE_dL_at_opt = (res.energy(res.L_opt + h) - res.energy(res.L_opt - h)) / (2.0 * h);
    res.d2E_dL2_at_opt =
        (res.energy(res.L_opt + h) - 2.0 * res.energy(res.L_opt) + res.energy(res.L_opt - h)) /
        (h * h);
    return res;
}

void export_profile_tsv(const RadialProfile& profile, const std::string& path,
                        const std::function<ProfileRow(double, double, double)>& row) {
    std::FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) throw ConfigError("export_profile_tsv: cannot open " + path);
    std::fprintf(fp, "r\teta\teta_prime\tW\tP_rr\tPstar_rr\n");
    for (size_t i = 0; i < profile.grid.t.size(); ++i) {
        double r = profile.grid.t[i], e = profile.grid.y[i], ep = profile.grid.yp[i];
        ProfileRow pr = row(r, e, ep);
        std::fprintf(fp, "%.17g\t%.17g\t%.17g\t%.17g\t%.17g\t%.17g\n", r, e, ep, pr.W, pr.P_rr,
                     pr.Pstar_rr);
    }
    std::fclose(fp);
}

std::function<ProfileRow(double, double, double)> sv_profile_rows(const SvModel& model) {
    SvModel m = model;
    return [m](double r, double eta, double etap) {
        double tang = eta / r;
        ProfileRow row;
        row.W = m.w(etap, tang);
        row.P_rr = m.w1(etap, tang);
        row.Pstar_rr = row.W - etap * row.P_rr;
        return row;
    };
}

std::function<ProfileRow(double, double, double)> example1_profile_rows(double a, int n) {
    return [a, n](double r, double eta, double etap) {
        ProfileRow row;
        double tang = eta / r;
        row.P_rr = etap - a;
        row.W = 0.5 * (row.P_rr * row.P_rr + (n - 1) * tang * tang);
        row.Pstar_rr = row.W - etap * row.P_rr;
        return row;
    };
}

}  // namespace varlab
