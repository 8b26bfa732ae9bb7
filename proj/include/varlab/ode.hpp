#pragma once

// Adaptive Dormand-Prince RK45 with forced output points, plus a dense
// quintic-Hermite grid for scalar second-order problems (value, slope and
// curvature stored at every node, so the reconstruction is C^2 and FD
// stencils applied to it behave like on a smooth function).

#include <functional>
#include <vector>

#include "varlab/errors.hpp"
#include "varlab/mat.hpp"

namespace varlab {

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    double h0 = 1e-3;
    long max_steps = 4000000;
};

// Integrates y' = f(t, y) from t0 through the increasing output times tout
// (tout[0] may equal t0) and returns the states at those times.
std::vector<Vec> ode45(const std::function<Vec(double, const Vec&)>& f, double t0, const Vec& y0,
                       const std::vector<double>& tout, const OdeOptions& opt);

// Piecewise-quintic Hermite reconstruction of a scalar function from
// (value, first, second derivative) samples on an increasing grid.
struct HermiteGrid {
    std::vector<double> t, y, yp, ypp;

    double eval(double s) const;
    double eval_d(double s) const;
    double eval_dd(double s) const;

    double front() const { return t.front(); }
    double back() const { return t.back(); }

private:
    size_t segment(double s) const;
};

}  // namespace varlab
