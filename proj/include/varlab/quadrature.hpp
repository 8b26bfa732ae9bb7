#pragma once

// Domains and deterministic quadrature for surface, volume, and path
// integrals. Rules carry their nodes in a fixed, documented order
// (radial-major, then polar, then azimuthal) and integration always sums
// in that order with compensated summation, so results are bitwise
// reproducible.

#include <functional>
#include <string>
#include <vector>

#include "varlab/errors.hpp"
#include "varlab/mat.hpp"

namespace varlab {

enum class QuadTarget { Surface, Volume, Path };

struct QuadratureRule {
    QuadTarget target = QuadTarget::Volume;
    int order = 0;
    std::vector<Vec> nodes;
    std::vector<double> weights;
    std::vector<Vec> normals;  // outward unit normals; surface/path rules only
    double exact_measure = 0;  // |surface|, |volume| or length

    double weight_sum() const;
};

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int npts, std::vector<double>& x, std::vector<double>& w);

// 1D rules.
QuadratureRule interval_rule(double a, double b, int npts);
// Composite rule on [0, R] with graded panel breakpoints R (k/K)^gamma;
// resolves integrable endpoint singularities (log^2 at 0).
QuadratureRule graded_interval_rule(double R, int npts_per_panel, int panels, double gamma);

// Boundary of [a, b]: two nodes with normals -1, +1.
QuadratureRule interval_boundary_rule(double a, double b);

// Sphere |x - center| = R. n = 2: equispaced trapezoid (order nodes);
// n = 3: product Gauss-Legendre in cos(theta) x equispaced phi
// (order x 2*order nodes).
QuadratureRule sphere_rule(int n, double R, int order, const Vec& center);
QuadratureRule sphere_rule(int n, double R, int order);

// Solid ball / annulus: radial Gauss-Legendre x sphere rule.
QuadratureRule ball_rule(int n, double R, int radial_order, int angular_order);
// Graded radial mesh variant for integrands singular at the center.
QuadratureRule ball_rule_graded(int n, double R, int radial_order, int angular_order,
                                double gamma, int panels);
QuadratureRule annulus_rule(int n, double r_in, double r_out, int radial_order,
                            int angular_order);

// Circle path in the plane (for contour integrals); same nodes as the 2D
// sphere rule, tagged as a path.
QuadratureRule circle_path_rule(double R, int order, const Vec& center);

// Weighted sums in fixed node order with Neumaier compensation.
double integrate(const std::function<double(const Vec&)>& f, const QuadratureRule& rule);
Vec integrate_vec(const std::function<Vec(const Vec&)>& f, int dim, const QuadratureRule& rule);

// Surface integrands receive the outward unit normal.
double integrate_surface(const std::function<double(const Vec&, const Vec&)>& f,
                         const QuadratureRule& rule);
Vec integrate_surface_vec(const std::function<Vec(const Vec&, const Vec&)>& f, int dim,
                          const QuadratureRule& rule);

// Analytic tail of a truncated exterior radial integral:
// integral_R^inf c r^-s dr, s > 1.
double power_tail(double c, double s, double R);

// Domains (outward normal points out of the enclosed region).
struct Domain {
    enum class Kind { Ball, Annulus, Interval, Circle2D } kind = Kind::Ball;
    int n = 0;
    double R = 0, r_in = 0, r_out = 0, a = 0, b = 0;
    Vec center;

    static Domain ball(int n, double R, const Vec& center);
    static Domain ball(int n, double R);
    static Domain annulus(int n, double r_in, double r_out);
    static Domain interval(double a, double b);
    static Domain circle2d(double R, const Vec& center);

    double volume() const;
    // Boundary rule with outward normals. order is the angular order.
    QuadratureRule boundary_rule(int order) const;
    QuadratureRule volume_rule(int radial_order, int angular_order) const;
};

}  // namespace varlab
