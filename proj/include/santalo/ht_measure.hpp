#pragma once

#include "santalo/body.hpp"
#include "santalo/sections.hpp"

namespace santalo {

// volume of the k-dimensional Euclidean unit ball, eps_k = pi^{k/2}/Gamma(k/2+1)
double unit_ball_volume(int k);

// Lebesgue volume of a body (exact for polytopes, Gauss-map quadrature for
// smooth bodies) and of its polar.
double body_volume(const ConvexBody& A, const Resolution& res = {});
double polar_volume(const ConvexBody& A, const Resolution& res = {});

// Holmes-Thompson volume of A in the norm with unit ball B:
// vol_B(A) = |A| |B^polar| / eps_n
double ht_volume(const ConvexBody& A, const ConvexBody& B, const Resolution& res = {});

// Holmes-Thompson area A_B(boundary of M): integral over the boundary of M
// of |(T_x cap B)^polar|_{n-1} / eps_{n-1}. Exact facet sums when M is a
// polytope; kink-split quadrature when M is smooth and B a polytope.
double ht_area(const ConvexBody& M, const ConvexBody& B, const Resolution& res = {});

// A_{B*}(boundary of K*), reported from the K-side computation A_K(dB)
// (they agree by the Holmes-Thompson duality). ht_area_dual_pair exposes
// the independently computed polar-side value for the duality test.
struct DualAreaPair {
    double primal;  // A_K(boundary of B)
    double polar;   // A_{B^polar}(boundary of K^polar)
};
DualAreaPair ht_area_dual_pair(const ConvexBody& K, const ConvexBody& B,
                               const Resolution& res = {});
double ht_area_dual(const ConvexBody& K, const ConvexBody& B, const Resolution& res = {});

// (1/(2 eps_1)) double boundary integral of |x'(t) . p'(s)| over
// dK x dB^polar; edge-pair exact for polygon pairs.
double symplectic_area_2d(const ConvexBody& K, const ConvexBody& B, const Resolution& res = {});

// support function of the isoperimetrix: |pi_{u^perp}(K^polar)| / eps_{n-1}
double isoperimetrix_support(const ConvexBody& K, const Vec& u, const Resolution& res = {});

struct IsoperimetricResult {
    double ratio;  // A_K(dB)^n / vol_K(B)^{n-1}
    double bound;  // (4n)^n / (n! eps_n)
};
IsoperimetricResult isoperimetric_ratio(const ConvexBody& K, const ConvexBody& B,
                                        const Resolution& res = {});

}  // namespace santalo
