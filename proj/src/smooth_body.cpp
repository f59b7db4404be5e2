#include "santalo/smooth_body.hpp"

#include <cmath>

#include "santalo/hyperplane.hpp"

namespace santalo {

namespace {

double quartic_sum(const Vec& u) {
    double s = 0;
    for (int i = 0; i < u.n; ++i) s += u[i] * u[i] * u[i] * u[i];
    return s;
}

Vec quartic_grad(const Vec& u) {
    Vec g(u.n);
    for (int i = 0; i < u.n; ++i) g[i] = 4.0 * u[i] * u[i] * u[i];
    return g;
}

Mat quartic_hess(const Vec& u) {
    Mat H(u.n);
    for (int i = 0; i < u.n; ++i) H(i, i) = 12.0 * u[i] * u[i];
    return H;
}

// low-discrepancy directions for construction-time curvature checks
std::vector<Vec> probe_directions(int dim, int count) {
    std::vector<Vec> dirs;
    if (dim == 2) {
        for (int k = 0; k < count; ++k) {
            double t = 2.0 * kPi * k / count;
            dirs.push_back(Vec(std::cos(t), std::sin(t)));
        }
    } else {
        const double ga = kPi * (3.0 - std::sqrt(5.0));
        for (int k = 0; k < count; ++k) {
            double z = 1.0 - 2.0 * (k + 0.5) / count;
            double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            dirs.push_back(Vec(r * std::cos(ga * k), r * std::sin(ga * k), z));
        }
    }
    return dirs;
}

}  // namespace

double SmoothBody::support(const Vec& u) const {
    double r = norm(u);
    if (r == 0.0) throw ZeroDirection();
    if (kind == Kind::Ellipsoid) return std::sqrt(dot(u, Qinv * u));
    double p2 = dot(u, S * u);
    double p4 = quartic_sum(u);
    return r + eps * (p2 / r + quartic * p4 / (r * r * r));
}

Vec SmoothBody::support_grad(const Vec& u) const {
    double r = norm(u);
    if (r == 0.0) throw ZeroDirection();
    if (kind == Kind::Ellipsoid) {
        Vec Mu = Qinv * u;
        return Mu / std::sqrt(dot(u, Mu));
    }
    double r3 = r * r * r, r5 = r3 * r * r;
    double p2 = dot(u, S * u);
    double p4 = quartic_sum(u);
    Vec g = u / r;                                       // grad |u|
    g += eps * (2.0 * (S * u) / r - (p2 / r3) * u);      // grad p2/r
    g += eps * quartic * (quartic_grad(u) / r3 - (3.0 * p4 / r5) * u);
    return g;
}

Mat SmoothBody::support_hess(const Vec& u) const {
    double r = norm(u);
    if (r == 0.0) throw ZeroDirection();
    if (kind == Kind::Ellipsoid) {
        double h = std::sqrt(dot(u, Qinv * u));
        Vec Mu = Qinv * u;
        return (1.0 / h) * Qinv - (1.0 / (h * h * h)) * outer(Mu, Mu);
    }
    double r2 = r * r, r3 = r2 * r, r5 = r3 * r2, r7 = r5 * r2;
    double p2 = dot(u, S * u);
    double p4 = quartic_sum(u);
    Vec Su = S * u;
    Vec g4 = quartic_grad(u);
    Mat H = (1.0 / r) * (Mat::identity(dim) - (1.0 / r2) * outer(u, u));
    H = H + eps * ((2.0 / r) * S -
                   (1.0 / r3) * (2.0 * outer(Su, u) + 2.0 * outer(u, Su) + p2 * Mat::identity(dim)) +
                   (3.0 * p2 / r5) * outer(u, u));
    H = H + (eps * quartic) *
                ((1.0 / r3) * quartic_hess(u) -
                 (3.0 / r5) * (outer(g4, u) + outer(u, g4) + p4 * Mat::identity(dim)) +
                 (15.0 * p4 / r7) * outer(u, u));
    return H;
}

Mat SmoothBody::tangential_hessian(const Vec& u) const {
    auto basis = orthonormal_complement(u);
    Mat H = support_hess(normalized(u));
    Mat A(dim - 1);
    for (int i = 0; i < dim - 1; ++i)
        for (int j = 0; j < dim - 1; ++j) A(i, j) = dot(basis[i], H * basis[j]);
    return A;
}

double SmoothBody::gauss_jacobian(const Vec& u) const { return det(tangential_hessian(u)); }

double SmoothBody::scale() const {
    double s = 0;
    for (const auto& u : probe_directions(dim, 64)) s = std::max(s, support(u));
    return s;
}

SmoothBody make_ellipsoid(const Mat& Q) {
    if (min_eigenvalue_sym(Q) <= 0) throw SpecError("ellipsoid matrix must be positive definite");
    SmoothBody B;
    B.dim = Q.n;
    B.kind = SmoothBody::Kind::Ellipsoid;
    B.Q = Q;
    B.Qinv = inverse(Q);
    validate(B);
    return B;
}

SmoothBody make_ball(int dim, double radius) {
    if (radius <= 0) throw SpecError("ball radius must be positive");
    return make_ellipsoid((1.0 / (radius * radius)) * Mat::identity(dim));
}

SmoothBody make_perturbed_ball(int dim, double eps, const Mat& S, double quartic) {
    SmoothBody B;
    B.dim = dim;
    B.kind = SmoothBody::Kind::PerturbedBall;
    B.eps = eps;
    B.S = S;
    B.quartic = quartic;
    validate(B);
    return B;
}

void validate(const SmoothBody& B) {
    if (B.dim < 2 || B.dim > 3) throw WrongDimension("smooth bodies must have dimension 2 or 3");
    if (B.kind == SmoothBody::Kind::Ellipsoid && min_eigenvalue_sym(B.Q) <= 0)
        throw SpecError("ellipsoid matrix must be positive definite");
    for (const auto& u : probe_directions(B.dim, B.dim == 2 ? 720 : 1000)) {
        if (B.support(u) <= 0) throw SpecError("support function not positive: origin not interior");
        if (min_eigenvalue_sym(B.tangential_hessian(u)) <= 1e-8)
            throw CurvatureDegenerate();
        // 1-homogeneity spot check
        double h1 = B.support(u), h3 = B.support(3.0 * u);
        if (std::abs(h3 - 3.0 * h1) > 1e-9 * std::abs(h3))
            throw SpecError("support function is not 1-homogeneous");
    }
}

}  // namespace santalo
