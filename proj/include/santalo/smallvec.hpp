#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <initializer_list>
#include <string>

// Small dense vectors and matrices for dimensions up to 4. Everything here
// is by value; no heap traffic in the geometric inner loops.

namespace santalo {

inline constexpr int kMaxDim = 4;

// Global tolerance for geometric predicates (vertex-on-facet, extreme-point
// pruning, interiority margins). Comparisons are scaled by the body size.
inline constexpr double kGeomTol = 1e-9;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct Vec {
    std::array<double, kMaxDim> a{};
    int n = 0;

    Vec() = default;
    explicit Vec(int dim) : n(dim) {}
    Vec(double x, double y) : n(2) { a[0] = x; a[1] = y; }
    Vec(double x, double y, double z) : n(3) { a[0] = x; a[1] = y; a[2] = z; }
    Vec(double x, double y, double z, double w) : n(4) { a[0] = x; a[1] = y; a[2] = z; a[3] = w; }

    static Vec zero(int dim) { return Vec(dim); }
    static Vec axis(int dim, int i, double s = 1.0) {
        Vec v(dim);
        v.a[i] = s;
        return v;
    }

    double& operator[](int i) { return a[i]; }
    double operator[](int i) const { return a[i]; }
    int dim() const { return n; }

    Vec& operator+=(const Vec& o) { for (int i = 0; i < n; ++i) a[i] += o.a[i]; return *this; }
    Vec& operator-=(const Vec& o) { for (int i = 0; i < n; ++i) a[i] -= o.a[i]; return *this; }
    Vec& operator*=(double s) { for (int i = 0; i < n; ++i) a[i] *= s; return *this; }

    friend Vec operator+(Vec u, const Vec& v) { return u += v; }
    friend Vec operator-(Vec u, const Vec& v) { return u -= v; }
    friend Vec operator*(double s, Vec u) { return u *= s; }
    friend Vec operator*(Vec u, double s) { return u *= s; }
    friend Vec operator/(Vec u, double s) { return u *= (1.0 / s); }
    friend Vec operator-(Vec u) { return u *= -1.0; }
};

inline double dot(const Vec& u, const Vec& v) {
    double s = 0;
    for (int i = 0; i < u.n; ++i) s += u.a[i] * v.a[i];
    return s;
}

inline double norm2(const Vec& u) { return dot(u, u); }
inline double norm(const Vec& u) { return std::sqrt(norm2(u)); }

inline Vec normalized(const Vec& u) {
    double r = norm(u);
    return u / r;
}

inline double dist(const Vec& u, const Vec& v) { return norm(u - v); }

inline Vec cross(const Vec& u, const Vec& v) {
    return Vec(u[1] * v[2] - u[2] * v[1],
               u[2] * v[0] - u[0] * v[2],
               u[0] * v[1] - u[1] * v[0]);
}

// counter-clockwise quarter turn
inline Vec rot90(const Vec& u) { return Vec(-u[1], u[0]); }

inline double cross2(const Vec& u, const Vec& v) { return u[0] * v[1] - u[1] * v[0]; }

struct Mat {
    std::array<double, kMaxDim * kMaxDim> m{};
    int n = 0;

    Mat() = default;
    explicit Mat(int dim) : n(dim) {}

    static Mat identity(int dim) {
        Mat r(dim);
        for (int i = 0; i < dim; ++i) r(i, i) = 1.0;
        return r;
    }
    static Mat diag(const Vec& d) {
        Mat r(d.n);
        for (int i = 0; i < d.n; ++i) r(i, i) = d[i];
        return r;
    }

    double& operator()(int i, int j) { return m[i * kMaxDim + j]; }
    double operator()(int i, int j) const { return m[i * kMaxDim + j]; }

    Vec row(int i) const {
        Vec v(n);
        for (int j = 0; j < n; ++j) v[j] = (*this)(i, j);
        return v;
    }
    Vec col(int j) const {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = (*this)(i, j);
        return v;
    }

    friend Vec operator*(const Mat& A, const Vec& x) {
        Vec y(A.n);
        for (int i = 0; i < A.n; ++i) {
            double s = 0;
            for (int j = 0; j < A.n; ++j) s += A(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    friend Mat operator*(const Mat& A, const Mat& B) {
        Mat C(A.n);
        for (int i = 0; i < A.n; ++i)
            for (int j = 0; j < A.n; ++j) {
                double s = 0;
                for (int k = 0; k < A.n; ++k) s += A(i, k) * B(k, j);
                C(i, j) = s;
            }
        return C;
    }

    friend Mat operator*(double s, Mat A) {
        for (int i = 0; i < A.n; ++i)
            for (int j = 0; j < A.n; ++j) A(i, j) *= s;
        return A;
    }

    friend Mat operator+(Mat A, const Mat& B) {
        for (int i = 0; i < A.n; ++i)
            for (int j = 0; j < A.n; ++j) A(i, j) += B(i, j);
        return A;
    }
    friend Mat operator-(Mat A, const Mat& B) {
        for (int i = 0; i < A.n; ++i)
            for (int j = 0; j < A.n; ++j) A(i, j) -= B(i, j);
        return A;
    }

    Mat transposed() const {
        Mat r(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
};

inline Mat outer(const Vec& u, const Vec& v) {
    Mat r(u.n);
    for (int i = 0; i < u.n; ++i)
        for (int j = 0; j < v.n; ++j) r(i, j) = u[i] * v[j];
    return r;
}

double det(const Mat& A);
Mat inverse(const Mat& A);
Vec solve(const Mat& A, const Vec& b);

// determinant of the n x n matrix whose columns are the given vectors
double det_cols(const Vec* cols, int n);

// smallest eigenvalue of a symmetric 1x1 or 2x2 or 3x3 matrix
double min_eigenvalue_sym(const Mat& A);

std::string to_string(const Vec& v);

}  // namespace santalo
