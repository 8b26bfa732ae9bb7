#pragma once

// EnergyModel: a stored-energy density W(x, y, F) with optional analytic
// derivatives and symmetry flags. Models are immutable bags of evaluators;
// everything downstream (stresses, identities, quadrature scenarios)
// consumes this one type.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "varlab/mat.hpp"

namespace varlab {

struct EnergyModel {
    std::string name;
    int m = 0;  // rows of F (dimension of y)
    int n = 0;  // cols of F (dimension of x)

    // W(x, y, F) -> scalar. Required.
    std::function<double(const Vec&, const Vec&, const Mat&)> W;

    // Optional analytic first derivatives; finite differences otherwise.
    std::function<Mat(const Vec&, const Vec&, const Mat&)> W_F;
    std::function<Vec(const Vec&, const Vec&, const Mat&)> W_x;
    std::function<Vec(const Vec&, const Vec&, const Mat&)> W_y;

    // Optional second derivative as a directional linear map:
    // (x, y, F, dF) -> d/dt W_F(x, y, F + t dF) at t = 0.
    std::function<Mat(const Vec&, const Vec&, const Mat&, const Mat&)> W_FF;

    // Symmetry flags.
    bool scale_free = false;          // W(l x, l y, F) = W(x, y, F)
    std::optional<double> p_hom;      // W(x, l y, l F) = l^p W(x, y, F)
    bool parametric = false;          // W(z, F A) = W(z, F) det A
    bool glin_isotropic = false;      // W(R x, R y, R F R^T) = W(x, y, F)

    // Explicit dependence markers (drive which identity terms are needed).
    bool depends_x = false;
    bool depends_y = false;

    // Points where W(x, . , .) is undefined (e.g. the origin for radially
    // prestressed media).
    std::vector<Vec> singular_points;

    double eval(const Vec& x, const Vec& y, const Mat& F) const {
        check_dims(F);
        return W(x, y, F);
    }

    void check_dims(const Mat& F) const {
        if (F.m != m || F.n != n) throw ContractError(name + ": F has wrong dimensions");
    }
};

}  // namespace varlab
