#pragma once

// Dense small-vector/matrix algebra on fixed storage. Dimensions are
// runtime values in 1..4; capacity is fixed so values are trivially
// copyable and never allocate.

#include <array>
#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace varlab {

class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kMaxDim = 4;

struct Vec {
    int n = 0;
    std::array<double, kMaxDim> a{};

    Vec() = default;
    explicit Vec(int n_) : n(n_) {
        if (n_ < 1 || n_ > kMaxDim) throw ContractError("Vec: bad dimension");
    }
    Vec(std::initializer_list<double> xs) : n(static_cast<int>(xs.size())) {
        if (n < 1 || n > kMaxDim) throw ContractError("Vec: bad dimension");
        int i = 0;
        for (double x : xs) a[i++] = x;
    }

    double& operator[](int i) {
        if (i < 0 || i >= n) throw ContractError("Vec: index out of bounds");
        return a[i];
    }
    double operator[](int i) const {
        if (i < 0 || i >= n) throw ContractError("Vec: index out of bounds");
        return a[i];
    }
};

inline Vec zeros_vec(int n) { return Vec(n); }

inline Vec operator+(const Vec& u, const Vec& v) {
    if (u.n != v.n) throw ContractError("Vec+: dimension mismatch");
    Vec w(u.n);
    for (int i = 0; i < u.n; ++i) w.a[i] = u.a[i] + v.a[i];
    return w;
}
inline Vec operator-(const Vec& u, const Vec& v) {
    if (u.n != v.n) throw ContractError("Vec-: dimension mismatch");
    Vec w(u.n);
    for (int i = 0; i < u.n; ++i) w.a[i] = u.a[i] - v.a[i];
    return w;
}
inline Vec operator*(double s, const Vec& v) {
    Vec w(v.n);
    for (int i = 0; i < v.n; ++i) w.a[i] = s * v.a[i];
    return w;
}
inline Vec operator-(const Vec& v) { return -1.0 * v; }

inline double dot(const Vec& u, const Vec& v) {
    if (u.n != v.n) throw ContractError("dot: dimension mismatch");
    double s = 0;
    for (int i = 0; i < u.n; ++i) s += u.a[i] * v.a[i];
    return s;
}
inline double norm(const Vec& v) { return std::sqrt(dot(v, v)); }

inline Vec normalized(const Vec& v) {
    double r = norm(v);
    if (r == 0) throw ContractError("normalized: zero vector");
    return (1.0 / r) * v;
}

inline Vec basis_vec(int n, int i) {
    Vec e(n);
    e[i] = 1.0;
    return e;
}

// m x n matrix, row-major with fixed row stride kMaxDim.
struct Mat {
    int m = 0, n = 0;
    std::array<double, kMaxDim * kMaxDim> a{};

    Mat() = default;
    Mat(int m_, int n_) : m(m_), n(n_) {
        if (m_ < 1 || m_ > kMaxDim || n_ < 1 || n_ > kMaxDim)
            throw ContractError("Mat: bad dimensions");
    }

    double& operator()(int i, int j) {
        if (i < 0 || i >= m || j < 0 || j >= n) throw ContractError("Mat: index out of bounds");
        return a[i * kMaxDim + j];
    }
    double operator()(int i, int j) const {
        if (i < 0 || i >= m || j < 0 || j >= n) throw ContractError("Mat: index out of bounds");
        return a[i * kMaxDim + j];
    }
};

inline Mat zeros(int m, int n) { return Mat(m, n); }

inline Mat identity(int n) {
    Mat I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
}

inline Mat operator+(const Mat& A, const Mat& B) {
    if (A.m != B.m || A.n != B.n) throw ContractError("Mat+: dimension mismatch");
    Mat C(A.m, A.n);
    for (int i = 0; i < A.m; ++i)
        for (int j = 0; j < A.n; ++j) C(i, j) = A(i, j) + B(i, j);
    return C;
}
inline Mat operator-(const Mat& A, const Mat& B) {
    if (A.m != B.m || A.n != B.n) throw ContractError("Mat-: dimension mismatch");
    Mat C(A.m, A.n);
    for (int i = 0; i < A.m; ++i)
        for (int j = 0; j < A.n; ++j) C(i, j) = A(i, j) - B(i, j);
    return C;
}
inline Mat operator*(double s, const Mat& A) {
    Mat C(A.m, A.n);
    for (int i = 0; i < A.m; ++i)
        for (int j = 0; j < A.n; ++j) C(i, j) = s * A(i, j);
    return C;
}
inline Mat operator-(const Mat& A) { return -1.0 * A; }

inline Mat operator*(const Mat& A, const Mat& B) {
    if (A.n != B.m) throw ContractError("Mat*: dimension mismatch");
    Mat C(A.m, B.n);
    for (int i = 0; i < A.m; ++i)
        for (int j = 0; j < B.n; ++j) {
            double s = 0;
            for (int k = 0; k < A.n; ++k) s += A(i, k) * B(k, j);
            C(i, j) = s;
        }
    return C;
}

inline Vec operator*(const Mat& A, const Vec& v) {
    if (A.n != v.n) throw ContractError("Mat*Vec: dimension mismatch");
    Vec w(A.m);
    for (int i = 0; i < A.m; ++i) {
        double s = 0;
        for (int j = 0; j < A.n; ++j) s += A(i, j) * v[j];
        w[i] = s;
    }
    return w;
}

inline Mat transpose(const Mat& A) {
    Mat T(A.n, A.m);
    for (int i = 0; i < A.m; ++i)
        for (int j = 0; j < A.n; ++j) T(j, i) = A(i, j);
    return T;
}

inline Mat sym(const Mat& A) {
    if (A.m != A.n) throw ContractError("sym: square matrix required");
    return 0.5 * (A + transpose(A));
}

inline Mat skew(const Mat& A) {
    if (A.m != A.n) throw ContractError("skew: square matrix required");
    return 0.5 * (A - transpose(A));
}

inline double trace(const Mat& A) {
    if (A.m != A.n) throw ContractError("trace: square matrix required");
    double s = 0;
    for (int i = 0; i < A.m; ++i) s += A(i, i);
    return s;
}

// Frobenius inner product <A,B>.
inline double inner(const Mat& A, const Mat& B) {
    if (A.m != B.m || A.n != B.n) throw ContractError("inner: dimension mismatch");
    double s = 0;
    for (int i = 0; i < A.m; ++i)
        for (int j = 0; j < A.n; ++j) s += A(i, j) * B(i, j);
    return s;
}
inline double fnorm(const Mat& A) { return std::sqrt(inner(A, A)); }

inline Mat outer(const Vec& u, const Vec& v) {
    Mat C(u.n, v.n);
    for (int i = 0; i < u.n; ++i)
        for (int j = 0; j < v.n; ++j) C(i, j) = u[i] * v[j];
    return C;
}

inline double det(const Mat& A) {
    if (A.m != A.n) throw ContractError("det: square matrix required");
    switch (A.n) {
        case 1:
            return A(0, 0);
        case 2:
            return A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
        case 3:
            return A(0, 0) * (A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1)) -
                   A(0, 1) * (A(1, 0) * A(2, 2) - A(1, 2) * A(2, 0)) +
                   A(0, 2) * (A(1, 0) * A(2, 1) - A(1, 1) * A(2, 0));
        default:
            throw ContractError("det: only n <= 3 supported");
    }
}

// Cofactor matrix, explicit adjugate formulas: cof(A) = det(A) A^{-T}.
inline Mat cof(const Mat& A) {
    if (A.m != A.n) throw ContractError("cof: square matrix required");
    Mat C(A.n, A.n);
    switch (A.n) {
        case 1:
            C(0, 0) = 1.0;
            return C;
        case 2:
            C(0, 0) = A(1, 1);
            C(0, 1) = -A(1, 0);
            C(1, 0) = -A(0, 1);
            C(1, 1) = A(0, 0);
            return C;
        case 3:
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
                    int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
                    C(i, j) = A(i1, j1) * A(i2, j2) - A(i1, j2) * A(i2, j1);
                }
            return C;
        default:
            throw ContractError("cof: only n <= 3 supported");
    }
}

class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

inline Mat inverse(const Mat& A) {
    double d = det(A);
    if (std::abs(d) < 1e-300) throw SingularMatrixError("inverse: singular matrix");
    return (1.0 / d) * transpose(cof(A));
}

inline Vec cross(const Vec& u, const Vec& v) {
    if (u.n != 3 || v.n != 3) throw ContractError("cross: 3-vectors required");
    return Vec{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

}  // namespace varlab
