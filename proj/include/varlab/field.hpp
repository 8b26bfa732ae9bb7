#pragma once

// Deformation / displacement fields with optional jump-surface descriptors.

#include <functional>
#include <optional>
#include <vector>

#include "varlab/mat.hpp"

namespace varlab {

// Spherical gradient-discontinuity surface |x| = r0 with one-sided traces.
struct RadialJump {
    double r0 = 0;
    std::function<Mat(const Vec&)> grad_minus;  // trace from |x| < r0
    std::function<Mat(const Vec&)> grad_plus;   // trace from |x| > r0
};

struct DeformationField {
    int m = 0, n = 0;
    std::function<Vec(const Vec&)> y;
    std::function<Mat(const Vec&)> grad;
    std::optional<RadialJump> jump;
    std::vector<Vec> singular_points;
};

inline DeformationField affine_field(const Mat& F0, const Vec& c) {
    DeformationField f;
    f.m = F0.m;
    f.n = F0.n;
    f.y = [F0, c](const Vec& x) { return F0 * x + c; };
    f.grad = [F0](const Vec&) { return F0; };
    return f;
}

inline DeformationField affine_field(const Mat& F0) { return affine_field(F0, Vec(F0.m)); }

// u(x) = eta(|x|) x_hat with analytic eta, eta'; gradient
// eta' xh (x) xh + (eta/r)(I - xh (x) xh).
inline DeformationField radial_field(int n, std::function<double(double)> eta,
                                     std::function<double(double)> eta_prime) {
    DeformationField f;
    f.m = n;
    f.n = n;
    f.singular_points.push_back(Vec(n));
    f.y = [eta](const Vec& x) {
        double r = norm(x);
        return (eta(r) / r) * x;
    };
    f.grad = [n, eta, eta_prime](const Vec& x) {
        double r = norm(x);
        Vec xh = (1.0 / r) * x;
        Mat P = outer(xh, xh);
        return eta_prime(r) * P + (eta(r) / r) * (identity(n) - P);
    };
    return f;
}

}  // namespace varlab
