#include "varlab/quadrature.hpp"

#include <cmath>

namespace varlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Neumaier-compensated accumulator.
struct CompSum {
    double s = 0, c = 0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

double unit_ball_volume(int n) {
    switch (n) {
        case 1: return 2.0;
        case 2: return kPi;
        case 3: return 4.0 * kPi / 3.0;
        default: throw ConfigError("unit_ball_volume: unsupported dimension");
    }
}

}  // namespace

double QuadratureRule::weight_sum() const {
    CompSum s;
    for (double w : weights) s.add(w);
    return s.value();
}

void gauss_legendre(int npts, std::vector<double>& x, std::vector<double>& w) {
    if (npts < 1) throw ConfigError("gauss_legendre: npts >= 1 required");
    x.assign(npts, 0.0);
    w.assign(npts, 0.0);
    int half = (npts + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (npts + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < npts; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = npts * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[npts - 1 - i] = z;
        double wi = 2.0 / ((1.0 - z * z) * pp * pp);
        w[i] = wi;
        w[npts - 1 - i] = wi;
    }
}

QuadratureRule interval_rule(double a, double b, int npts) {
    if (!(a < b)) throw ConfigError("interval_rule: a < b required");
    std::vector<double> x, w;
    gauss_legendre(npts, x, w);
    QuadratureRule rule;
    rule.target = QuadTarget::Volume;
    rule.order = npts;
    rule.exact_measure = b - a;
    double mid = 0.5 * (a + b), hl = 0.5 * (b - a);
    for (int i = 0; i < npts; ++i) {
        rule.nodes.push_back(Vec{mid + hl * x[i]});
        rule.weights.push_back(hl * w[i]);
    }
    return rule;
}

QuadratureRule graded_interval_rule(double R, int npts_per_panel, int panels, double gamma) {
    if (R <= 0 || panels < 1) throw ConfigError("graded_interval_rule: bad parameters");
    std::vector<double> x, w;
    gauss_legendre(npts_per_panel, x, w);
    QuadratureRule rule;
    rule.target = QuadTarget::Volume;
    rule.order = npts_per_panel * panels;
    rule.exact_measure = R;
    for (int k = 0; k < panels; ++k) {
        double a = R * std::pow(double(k) / panels, gamma);
        double b = R * std::pow(double(k + 1) / panels, gamma);
        double mid = 0.5 * (a + b), hl = 0.5 * (b - a);
        for (int i = 0; i < npts_per_panel; ++i) {
            rule.nodes.push_back(Vec{mid + hl * x[i]});
            rule.weights.push_back(hl * w[i]);
        }
    }
    return rule;
}

QuadratureRule interval_boundary_rule(double a, double b) {
    if (!(a < b)) throw ConfigError("interval_boundary_rule: a < b required");
    QuadratureRule rule;
    rule.target = QuadTarget::Surface;
    rule.order = 1;
    rule.exact_measure = 2.0;  // counting measure on two endpoints
    rule.nodes = {Vec{a}, Vec{b}};
    rule.weights = {1.0, 1.0};
    rule.normals = {Vec{-1.0}, Vec{1.0}};
    return rule;
}

QuadratureRule sphere_rule(int n, double R, int order, const Vec& center) {
    if (R <= 0) throw ConfigError("sphere_rule: R > 0 required");
    if (order < 4) throw ConfigError("sphere_rule: order >= 4 required");
    QuadratureRule rule;
    rule.target = QuadTarget::Surface;
    rule.order = order;
    if (n == 2) {
        rule.exact_measure = 2.0 * kPi * R;
        double dw = 2.0 * kPi * R / order;
        for (int j = 0; j < order; ++j) {
            double phi = 2.0 * kPi * j / order;
            Vec nh{std::cos(phi), std::sin(phi)};
            rule.nodes.push_back(center + R * nh);
            rule.weights.push_back(dw);
            rule.normals.push_back(nh);
        }
    } else if (n == 3) {
        rule.exact_measure = 4.0 * kPi * R * R;
        int nphi = 2 * order;
        std::vector<double> ct, wct;
        gauss_legendre(order, ct, wct);
        double dphi = 2.0 * kPi / nphi;
        for (int i = 0; i < order; ++i) {
            double c = ct[i], s = std::sqrt(std::max(0.0, 1.0 - c * c));
            for (int j = 0; j < nphi; ++j) {
                double phi = dphi * j;
                Vec nh{s * std::cos(phi), s * std::sin(phi), c};
                rule.nodes.push_back(center + R * nh);
                rule.weights.push_back(R * R * wct[i] * dphi);
                rule.normals.push_back(nh);
            }
        }
    } else {
        throw ConfigError("sphere_rule: n in {2, 3} required");
    }
    return rule;
}

QuadratureRule sphere_rule(int n, double R, int order) { return sphere_rule(n, R, order, Vec(n)); }

namespace {

QuadratureRule radial_times_angular(int n, const QuadratureRule& radial, int angular_order) {
    QuadratureRule rule;
    rule.target = QuadTarget::Volume;
    rule.order = radial.order * angular_order;
    QuadratureRule unit_sphere = sphere_rule(n, 1.0, angular_order);
    for (size_t k = 0; k < radial.nodes.size(); ++k) {
        double r = radial.nodes[k][0];
        double wr = radial.weights[k];
        double rpow = std::pow(r, n - 1);
        for (size_t a = 0; a < unit_sphere.nodes.size(); ++a) {
            rule.nodes.push_back(r * unit_sphere.normals[a]);
            rule.weights.push_back(wr * rpow * unit_sphere.weights[a]);
        }
    }
    return rule;
}

}  // namespace

QuadratureRule ball_rule(int n, double R, int radial_order, int angular_order) {
    if (R <= 0) throw ConfigError("ball_rule: R > 0 required");
    QuadratureRule rule = radial_times_angular(n, interval_rule(0.0, R, radial_order), angular_order);
    rule.exact_measure = unit_ball_volume(n) * std::pow(R, n);
    return rule;
}

QuadratureRule ball_rule_graded(int n, double R, int radial_order, int angular_order, double gamma,
                                int panels) {
    if (R <= 0) throw ConfigError("ball_rule_graded: R > 0 required");
    QuadratureRule rule =
        radial_times_angular(n, graded_interval_rule(R, radial_order, panels, gamma), angular_order);
    rule.exact_measure = unit_ball_volume(n) * std::pow(R, n);
    return rule;
}

QuadratureRule annulus_rule(int n, double r_in, double r_out, int radial_order,
                            int angular_order) {
    if (!(0 < r_in && r_in < r_out)) throw ConfigError("annulus_rule: 0 < r_in < r_out required");
    QuadratureRule rule =
        radial_times_angular(n, interval_rule(r_in, r_out, radial_order), angular_order);
    rule.exact_measure = unit_ball_volume(n) * (std::pow(r_out, n) - std::pow(r_in, n));
    return rule;
}

QuadratureRule circle_path_rule(double R, int order, const Vec& center) {
    QuadratureRule rule = sphere_rule(2, R, order, center);
    rule.target = QuadTarget::Path;
    return rule;
}

double integrate(const std::function<double(const Vec&)>& f, const QuadratureRule& rule) {
    CompSum s;
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
        double fv = f(rule.nodes[k]);
        if (!std::isfinite(fv))
            throw SolverError("integrate: non-finite integrand at node " + std::to_string(k));
        s.add(rule.weights[k] * fv);
    }
    return s.value();
}

Vec integrate_vec(const std::function<Vec(const Vec&)>& f, int dim, const QuadratureRule& rule) {
    std::vector<CompSum> s(dim);
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
        Vec fv = f(rule.nodes[k]);
        for (int i = 0; i < dim; ++i) {
            if (!std::isfinite(fv[i]))
                throw SolverError("integrate_vec: non-finite integrand at node " +
                                  std::to_string(k));
            s[i].add(rule.weights[k] * fv[i]);
        }
    }
    Vec out(dim);
    for (int i = 0; i < dim; ++i) out[i] = s[i].value();
    return out;
}

double integrate_surface(const std::function<double(const Vec&, const Vec&)>& f,
                         const QuadratureRule& rule) {
    if (rule.normals.empty()) throw ContractError("integrate_surface: rule carries no normals");
    CompSum s;
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
        double fv = f(rule.nodes[k], rule.normals[k]);
        if (!std::isfinite(fv))
            throw SolverError("integrate_surface: non-finite integrand at node " +
                              std::to_string(k));
        s.add(rule.weights[k] * fv);
    }
    return s.value();
}

Vec integrate_surface_vec(const std::function<Vec(const Vec&, const Vec&)>& f, int dim,
                          const QuadratureRule& rule) {
    if (rule.normals.empty())
        throw ContractError("integrate_surface_vec: rule carries no normals");
    std::vector<CompSum> s(dim);
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
        Vec fv = f(rule.nodes[k], rule.normals[k]);
        for (int i = 0; i < dim; ++i) {
            if (!std::isfinite(fv[i]))
                throw SolverError("integrate_surface_vec: non-finite integrand at node " +
                                  std::to_string(k));
            s[i].add(rule.weights[k] * fv[i]);
        }
    }
    Vec out(dim);
    for (int i = 0; i < dim; ++i) out[i] = s[i].value();
    return out;
}

double power_tail(double c, double s, double R) {
    if (s <= 1.0) throw ConfigError("power_tail: decay exponent s > 1 required");
    return c * std::pow(R, 1.0 - s) / (s - 1.0);
}

Domain Domain::ball(int n, double R, const Vec& center) {
    if (R <= 0) throw ConfigError("Domain::ball: R > 0 required");
    Domain d;
    d.kind = Kind::Ball;
    d.n = n;
    d.R = R;
    d.center = center;
    return d;
}
Domain Domain::ball(int n, double R) { return ball(n, R, Vec(n)); }

Domain Domain::annulus(int n, double r_in, double r_out) {
    if (!(0 < r_in && r_in < r_out)) throw ConfigError("Domain::annulus: 0 < r_in < r_out");
    Domain d;
    d.kind = Kind::Annulus;
    d.n = n;
    d.r_in = r_in;
    d.r_out = r_out;
    d.center = Vec(n);
    return d;
}

Domain Domain::interval(double a, double b) {
    if (!(a < b)) throw ConfigError("Domain::interval: a < b required");
    Domain d;
    d.kind = Kind::Interval;
    d.n = 1;
    d.a = a;
    d.b = b;
    return d;
}

Domain Domain::circle2d(double R, const Vec& center) {
    if (R <= 0) throw ConfigError("Domain::circle2d: R > 0 required");
    Domain d;
    d.kind = Kind::Circle2D;
    d.n = 2;
    d.R = R;
    d.center = center;
    return d;
}

double Domain::volume() const {
    switch (kind) {
        case Kind::Ball:
        case Kind::Circle2D:
            return unit_ball_volume(n) * std::pow(R, n);
        case Kind::Annulus:
            return unit_ball_volume(n) * (std::pow(r_out, n) - std::pow(r_in, n));
        case Kind::Interval:
            return b - a;
    }
    throw ConfigError("Domain::volume: bad kind");
}

QuadratureRule Domain::boundary_rule(int order) const {
    switch (kind) {
        case Kind::Ball:
        case Kind::Circle2D:
            return sphere_rule(n, R, order, center);
        case Kind::Interval:
            return interval_boundary_rule(a, b);
        case Kind::Annulus: {
            QuadratureRule outer = sphere_rule(n, r_out, order, center);
            QuadratureRule inner = sphere_rule(n, r_in, order, center);
            // inner boundary: outward-of-annulus normal points toward the center
            for (auto& nh : inner.normals) nh = -1.0 * nh;
            QuadratureRule rule = outer;
            rule.exact_measure += inner.exact_measure;
            rule.nodes.insert(rule.nodes.end(), inner.nodes.begin(), inner.nodes.end());
            rule.weights.insert(rule.weights.end(), inner.weights.begin(), inner.weights.end());
            rule.normals.insert(rule.normals.end(), inner.normals.begin(), inner.normals.end());
            return rule;
        }
    }
    throw ConfigError("Domain::boundary_rule: bad kind");
}

QuadratureRule Domain::volume_rule(int radial_order, int angular_order) const {
    switch (kind) {
        case Kind::Ball:
        case Kind::Circle2D: {
            QuadratureRule rule = ball_rule(n, R, radial_order, angular_order);
            if (norm(center) > 0)
                for (auto& x : rule.nodes) x = x + center;
            return rule;
        }
        case Kind::Annulus:
            return annulus_rule(n, r_in, r_out, radial_order, angular_order);
        case Kind::Interval:
            return interval_rule(a, b, radial_order);
    }
    throw ConfigError("Domain::volume_rule: bad kind");
}

}  // namespace varlab
