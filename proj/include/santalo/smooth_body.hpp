#pragma once

#include <vector>

#include "santalo/errors.hpp"
#include "santalo/smallvec.hpp"

namespace santalo {

// Convex body with smooth positively curved boundary, given by support
// function oracles. Two built-in families:
//   ellipsoid      {x : x^T Q x <= 1},  h(u) = sqrt(u^T Q^{-1} u)
//   perturbed_ball h(u) = |u| (1 + eps * f(u/|u|)),  f an even polynomial
//                  f(v) = v^T S v + quartic * sum_i v_i^4
// The boundary point with outer normal u is grad h(u); the Gauss-map area
// Jacobian is the determinant of the tangential Hessian on u^perp.
struct SmoothBody {
    enum class Kind { Ellipsoid, PerturbedBall };

    int dim = 0;
    Kind kind = Kind::Ellipsoid;

    Mat Q;        // ellipsoid matrix (body = {x : x^T Q x <= 1})
    Mat Qinv;
    double eps = 0;       // perturbed ball parameters
    Mat S;
    double quartic = 0;

    double support(const Vec& u) const;
    Vec support_grad(const Vec& u) const;
    Mat support_hess(const Vec& u) const;

    Vec boundary_point(const Vec& unit_normal) const { return support_grad(unit_normal); }

    // (n-1)x(n-1) matrix of the tangential Hessian in the basis
    // orthonormal_complement(u); equals the reverse Weingarten map, so its
    // determinant is the Gauss-map area Jacobian.
    Mat tangential_hessian(const Vec& unit_normal) const;
    double gauss_jacobian(const Vec& unit_normal) const;

    double scale() const;  // max boundary radius estimate
};

SmoothBody make_ellipsoid(const Mat& Q);
SmoothBody make_ball(int dim, double radius);
SmoothBody make_perturbed_ball(int dim, double eps, const Mat& S, double quartic);

// 1-homogeneity, positivity and positive curvature, checked by sampling.
void validate(const SmoothBody& B);

}  // namespace santalo
