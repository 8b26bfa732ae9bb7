#include "varlab/ode.hpp"

#include <algorithm>
#include <cmath>

namespace varlab {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

std::vector<Vec> ode45(const std::function<Vec(double, const Vec&)>& f, double t0, const Vec& y0,
                       const std::vector<double>& tout, const OdeOptions& opt) {
    std::vector<Vec> out;
    out.reserve(tout.size());
    size_t next = 0;
    double t = t0;
    Vec y = y0;
    if (next < tout.size() && tout[next] <= t0 + 1e-15 * (1.0 + std::abs(t0))) {
        out.push_back(y);
        ++next;
    }
    if (next >= tout.size()) return out;

    double h = opt.h0;
    Vec k1 = f(t, y);
    long steps = 0;
    while (next < tout.size()) {
        if (++steps > opt.max_steps) throw SolverError("ode45: step limit exceeded");
        double target = tout[next];
        bool clipped = false;
        if (t + h >= target) {
            h = target - t;
            clipped = true;
        }

        auto axpy = [&](std::initializer_list<std::pair<double, const Vec*>> terms) {
            Vec r = y;
            for (auto& [a, k] : terms)
                for (int i = 0; i < y.n; ++i) r.a[i] += h * a * k->a[i];
            return r;
        };

        Vec k2 = f(t + c2 * h, axpy({{a21, &k1}}));
        Vec k3 = f(t + c3 * h, axpy({{a31, &k1}, {a32, &k2}}));
        Vec k4 = f(t + c4 * h, axpy({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        Vec k5 = f(t + c5 * h, axpy({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        Vec k6 = f(t + h, axpy({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        Vec y5 = axpy({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        Vec k7 = f(t + h, y5);

        double err = 0;
        for (int i = 0; i < y.n; ++i) {
            double ei = h * (e1 * k1.a[i] + e3 * k3.a[i] + e4 * k4.a[i] + e5 * k5.a[i] +
                             e6 * k6.a[i] + e7 * k7.a[i]);
            double sc = opt.atol + opt.rtol * std::max(std::abs(y.a[i]), std::abs(y5.a[i]));
            err = std::max(err, std::abs(ei) / sc);
        }

        if (err <= 1.0) {
            t += h;
            y = y5;
            k1 = k7;  // FSAL
            if (clipped || std::abs(t - target) <= 1e-14 * (1.0 + std::abs(target))) {
                out.push_back(y);
                ++next;
            }
        }
        double fac = err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(fac, 0.2, 5.0);
        if (h < 1e-14 * (1.0 + std::abs(t))) throw SolverError("ode45: step size underflow");
    }
    return out;
}

size_t HermiteGrid::segment(double s) const {
    if (t.size() < 2) throw SolverError("HermiteGrid: needs at least two nodes");
    if (s < t.front() - 1e-12 || s > t.back() + 1e-12)
        throw ContractError("HermiteGrid: evaluation outside grid");
    auto it = std::upper_bound(t.begin(), t.end(), s);
    size_t k = (it == t.begin()) ? 0 : size_t(it - t.begin()) - 1;
    return std::min(k, t.size() - 2);
}

namespace {
// Two-point quintic Hermite basis on s in [0, 1].
struct Quintic {
    double h0, h1, h2, k0, k1, k2;        // value weights
    double dh0, dh1, dh2, dk0, dk1, dk2;  // d/ds
    double ddh0, ddh1, ddh2, ddk0, ddk1, ddk2;
    explicit Quintic(double s) {
        double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
        h0 = 1 - 10 * s3 + 15 * s4 - 6 * s5;
        h1 = s - 6 * s3 + 8 * s4 - 3 * s5;
        h2 = 0.5 * (s2 - 3 * s3 + 3 * s4 - s5);
        k0 = 10 * s3 - 15 * s4 + 6 * s5;
        k1 = -4 * s3 + 7 * s4 - 3 * s5;
        k2 = 0.5 * (s3 - 2 * s4 + s5);
        dh0 = -30 * s2 + 60 * s3 - 30 * s4;
        dh1 = 1 - 18 * s2 + 32 * s3 - 15 * s4;
        dh2 = 0.5 * (2 * s - 9 * s2 + 12 * s3 - 5 * s4);
        dk0 = 30 * s2 - 60 * s3 + 30 * s4;
        dk1 = -12 * s2 + 28 * s3 - 15 * s4;
        dk2 = 0.5 * (3 * s2 - 8 * s3 + 5 * s4);
        ddh0 = -60 * s + 180 * s2 - 120 * s3;
        ddh1 = -36 * s + 96 * s2 - 60 * s3;
        ddh2 = 0.5 * (2 - 18 * s + 36 * s2 - 20 * s3);
        ddk0 = 60 * s - 180 * s2 + 120 * s3;
        ddk1 = -24 * s + 84 * s2 - 60 * s3;
        ddk2 = 0.5 * (6 * s - 24 * s2 + 20 * s3);
    }
};
}  // namespace

double HermiteGrid::eval(double s) const {
    size_t k = segment(s);
    double h = t[k + 1] - t[k], u = (s - t[k]) / h;
    Quintic q(u);
    return y[k] * q.h0 + h * yp[k] * q.h1 + h * h * ypp[k] * q.h2 + y[k + 1] * q.k0 +
           h * yp[k + 1] * q.k1 + h * h * ypp[k + 1] * q.k2;
}

double HermiteGrid::eval_d(double s) const {
    size_t k = segment(s);
    double h = t[k + 1] - t[k], u = (s - t[k]) / h;
    Quintic q(u);
    return (y[k] * q.dh0 + h * yp[k] * q.dh1 + h * h * ypp[k] * q.dh2 + y[k + 1] * q.dk0 +
            h * yp[k + 1] * q.dk1 + h * h * ypp[k + 1] * q.dk2) /
           h;
}

double HermiteGrid::eval_dd(double s) const {
    size_t k = segment(s);
    double h = t[k + 1] - t[k], u = (s - t[k]) / h;
    Quintic q(u);
    return (y[k] * q.ddh0 + h * yp[k] * q.ddh1 + h * h * ypp[k] * q.ddh2 + y[k + 1] * q.ddk0 +
            h * yp[k + 1] * q.ddk1 + h * h * ypp[k + 1] * q.ddk2) /
           (h * h);
}

}  // namespace varlab
