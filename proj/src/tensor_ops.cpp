#include "varlab/tensor_ops.hpp"

#include <cmath>

namespace varlab {

namespace {

Mat piola_fd(const EnergyModel& model, const Vec& x, const Vec& y, const Mat& F) {
    double h = 1e-6 * (1.0 + fnorm(F));
    Mat P(model.m, model.n);
    Mat Fp = F, Fm = F;
    for (int i = 0; i < model.m; ++i)
        for (int j = 0; j < model.n; ++j) {
            double f0 = F(i, j);
            Fp(i, j) = f0 + h;
            Fm(i, j) = f0 - h;
            P(i, j) = (model.W(x, y, Fp) - model.W(x, y, Fm)) / (2.0 * h);
            Fp(i, j) = f0;
            Fm(i, j) = f0;
        }
    return P;
}

Vec partial_x_fd(const EnergyModel& model, const Vec& x, const Vec& y, const Mat& F) {
    double h = 1e-6 * (1.0 + norm(x));
    Vec g(x.n);
    Vec xp = x, xm = x;
    for (int k = 0; k < x.n; ++k) {
        double x0 = x[k];
        xp[k] = x0 + h;
        xm[k] = x0 - h;
        g[k] = (model.W(xp, y, F) - model.W(xm, y, F)) / (2.0 * h);
        xp[k] = x0;
        xm[k] = x0;
    }
    return g;
}

Vec partial_y_fd(const EnergyModel& model, const Vec& x, const Vec& y, const Mat& F) {
    double h = 1e-6 * (1.0 + norm(y));
    Vec g(y.n);
    Vec yp = y, ym = y;
    for (int k = 0; k < y.n; ++k) {
        double y0 = y[k];
        yp[k] = y0 + h;
        ym[k] = y0 - h;
        g[k] = (model.W(x, yp, F) - model.W(x, ym, F)) / (2.0 * h);
        yp[k] = y0;
        ym[k] = y0;
    }
    return g;
}

}  // namespace

Mat piola(const EnergyModel& model, const Vec& x, const Vec& y, const Mat& F) {
    model.check_dims(F);
    if (model.W_F) return model.W_F(x, y, F);
    return piola_fd(model, x, y, F);
}

Mat eshelby(const EnergyModel& model, const Vec& x, const Vec& y, const Mat& F) {
    model.check_dims(F);
    double w = model.W(x, y, F);
    return w * identity(model.n) - transpose(F) * piola(model, x, y, F);
}

double excess(const EnergyModel& model, const Vec& x, const Vec& y, const Mat& F, const Mat& G) {
    model.check_dims(F);
    model.check_dims(G);
    return model.W(x, y, G) - model.W(x, y, F) - inner(piola(model, x, y, F), G - F);
}

std::pair<Vec, Vec> euler_residuals(const EnergyModel& model, const DeformationField& field,
                                    const Vec& x, double h) {
    if (field.jump) {
        double r = norm(x);
        if (std::abs(r - field.jump->r0) < 2.0 * h)
            throw NearSingularityError("euler_residuals: point within 2h of jump surface");
    }
    for (const Vec& s : field.singular_points)
        if (norm(x - s) < 2.0 * h)
            throw NearSingularityError("euler_residuals: point within 2h of singular point");

    auto P_at = [&](const Vec& xx) {
        Vec yy = field.y(xx);
        Mat FF = field.grad(xx);
        return piola(model, xx, yy, FF);
    };
    auto Pstar_at = [&](const Vec& xx) {
        Vec yy = field.y(xx);
        Mat FF = field.grad(xx);
        return eshelby(model, xx, yy, FF);
    };

    Vec divP(model.m), divPstar(model.n);
    for (int a = 0; a < model.n; ++a) {
        Vec xp = x, xm = x;
        xp[a] += h;
        xm[a] -= h;
        Mat Pp = P_at(xp), Pm = P_at(xm);
        for (int i = 0; i < model.m; ++i) divP[i] += (Pp(i, a) - Pm(i, a)) / (2.0 * h);
        Mat Qp = Pstar_at(xp), Qm = Pstar_at(xm);
        for (int i = 0; i < model.n; ++i) divPstar[i] += (Qp(i, a) - Qm(i, a)) / (2.0 * h);
    }

    Vec y0 = field.y(x);
    Mat F0 = field.grad(x);
    Vec wy = model.W_y ? model.W_y(x, y0, F0)
                       : (model.depends_y ? partial_y_fd(model, x, y0, F0) : Vec(model.m));
    Vec wx = model.W_x ? model.W_x(x, y0, F0)
                       : (model.depends_x ? partial_x_fd(model, x, y0, F0) : Vec(model.n));

    return {wy - divP, wx - divPstar};
}

double jump_pstar(const EnergyModel& model, const Mat& F_minus, const Mat& F_plus, const Vec& n) {
    model.check_dims(F_minus);
    model.check_dims(F_plus);
    if (n.n != model.n) throw ContractError("jump_pstar: normal has wrong dimension");
    Vec nh = normalized(n);

    Mat dF = F_plus - F_minus;
    Vec a = dF * nh;                       // candidate Hadamard vector
    double had = fnorm(dF - outer(a, nh)); // rank-one defect
    if (had > 1e-10)
        throw HadamardViolation("jump_pstar: [F] is not rank-one (defect " + std::to_string(had) +
                                ")");

    // Evaluate the model along the normal direction; exact for radial
    // interfaces (x_hat = n) and immaterial for homogeneous densities.
    Vec x = nh;
    Vec y(model.m);
    Mat Pm = piola(model, x, y, F_minus);
    Mat Pp = piola(model, x, y, F_plus);
    double traction = norm((Pp - Pm) * nh);
    if (traction > 1e-10)
        throw TractionJumpViolation("jump_pstar: [P] n != 0 (|[P]n| = " +
                                    std::to_string(traction) + ")");

    double jw = model.W(x, y, F_plus) - model.W(x, y, F_minus);
    double with_minus = jw - inner(Pm, dF);
    double with_plus = jw - inner(Pp, dF);
    if (std::abs(with_minus - with_plus) > 1e-10)
        throw SolverError("jump_pstar: P_minus / P_plus evaluations disagree");
    return with_minus;
}

double check_graph_orthogonality(const EnergyModel& model, const Vec& x, const Vec& y,
                                 const Mat& F, const Vec& tangent) {
    Vec tau = normalized(tangent);
    // Any unit normal orthogonal to tau; Gram-Schmidt a canonical axis.
    Vec n(tau.n);
    for (int k = 0; k < tau.n; ++k) {
        Vec e = basis_vec(tau.n, k);
        Vec cand = e - dot(e, tau) * tau;
        if (norm(cand) > 0.5) {
            n = normalized(cand);
            break;
        }
    }
    Mat P = piola(model, x, y, F);
    Mat Ps = eshelby(model, x, y, F);
    return dot(Ps * n, tau) + dot(P * n, F * tau);
}

ExtendedState extended_piola(const EnergyModel& model, const Vec& z, const Mat& Fhat) {
    int m = model.m, n = model.n;
    if (Fhat.m != m + n || Fhat.n != n)
        throw ContractError("extended_piola: Fhat must be (m+n) x n");

    Mat F1(n, n), F2(m, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) F1(i, j) = Fhat(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) F2(i, j) = Fhat(n + i, j);

    double dF1 = det(F1);
    if (std::abs(dF1) < 1e-14) throw SingularMatrixError("extended_piola: singular upper block");

    Mat G = F2 * inverse(F1);
    Vec x(n), y(m);
    for (int i = 0; i < n; ++i) x[i] = z[i];
    for (int i = 0; i < m; ++i) y[i] = z[n + i];

    Mat C = cof(F1);
    Mat top = eshelby(model, x, y, G) * C;  // n x n
    Mat bot = piola(model, x, y, G) * C;    // m x n

    ExtendedState s;
    s.What = model.W(x, y, G) * dF1;
    s.Phat = Mat(m + n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.Phat(i, j) = top(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) s.Phat(n + i, j) = bot(i, j);
    s.eshelby_ext = s.What * identity(n) - transpose(Fhat) * s.Phat;
    return s;
}

double extended_qhom_defect(const EnergyModel& model, const Vec& z, const Mat& Fhat,
                            const Mat& Q) {
    if (Q.m != model.n || Q.n != model.n) throw ContractError("extended_qhom_defect: Q must be n x n");
    double dQ = det(Q);
    if (std::abs(dQ) < 1e-14) throw SingularMatrixError("extended_qhom_defect: singular Q");
    ExtendedState s0 = extended_piola(model, z, Fhat);
    ExtendedState s1 = extended_piola(model, z, Fhat * Q);
    return s1.What / dQ - s0.What;
}

}  // namespace varlab
