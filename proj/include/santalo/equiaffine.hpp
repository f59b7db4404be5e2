#pragma once

#include <functional>
#include <vector>

#include "santalo/body.hpp"
#include "santalo/quadrature.hpp"

namespace santalo {

// Point on the boundary of a smooth body together with a tangent basis.
struct TangentFrame {
    Vec x;
    std::vector<Vec> basis;
};

// Frames built here are orthonormal and positively oriented for the inward
// conormal: det(-u, e_1, ..., e_{n-1}) = +1.
std::vector<Vec> oriented_tangent_frame(const Vec& u);

// recovers the outer unit normal from a frame (orthogonal to the basis,
// positive pairing with x) and checks the frame sits on the boundary
Vec frame_normal(const TangentFrame& frame, const SmoothBody& B);

struct EquiaffineData {
    Vec x;                    // boundary point
    std::vector<Vec> frame;   // oriented orthonormal tangent basis
    Vec xi;                   // Blaschke normal field value (inward-pointing)
    Mat g;                    // equiaffine metric in that frame
    double alpha_density;     // volume density of g = det(xi, frame)
};

// Blaschke normal at the boundary point with outer normal u. Built by the
// two-step normalization: start from the inward Euclidean normal, rescale
// by phi = (det g0 / det(xi0, frame)^2)^{1/(n+1)}, then add the tangential
// correction killing the transversal part of nabla Xi. Second-order data is
// analytic (support Hessian); the correction needs one finite-difference
// level for d(phi).
EquiaffineData blaschke_normal(const SmoothBody& B, const Vec& u);

struct EquiaffineResiduals {
    double tangency;   // max_i |<nabla_{e_i} Xi, u>| / |Xi|
    double metric;     // relative defect of det(Xi, frame)^2 = det g
    double g_min_eig;  // smallest eigenvalue of g (must be positive)
};
EquiaffineResiduals equiaffine_residuals(const SmoothBody& B, const Vec& u, double step = 1e-4);

// L_{i,j} = det(nabla_{xi_i} X_j, xi_1, ..., xi_{n-1}) for the Gauss-map
// extension of the frame, and L = det(L_{i,j}).
Mat L_matrix(const TangentFrame& frame, const SmoothBody& B);
double L_value(const TangentFrame& frame, const SmoothBody& B);

// C_B(K*): integral over the boundary of B of the nu_x-moment of the
// projection pi_x(K^polar) onto the annihilator of the Blaschke normal,
// with kernel spanned by the conormal of the tangent space. mu is the
// Euclidean surface measure unless a positive density is supplied (the
// result is invariant under that choice).
Vec dual_centroid(const ConvexBody& K, const SmoothBody& B, const Resolution& res = {},
                  const std::function<double(const Vec&)>* mu_density = nullptr);

}  // namespace santalo
