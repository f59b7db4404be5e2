#pragma once

#include "santalo/body.hpp"
#include "santalo/hyperplane.hpp"
#include "santalo/quadrature.hpp"

namespace santalo {

// Support function of the central slice H cap (K - x) in an in-plane
// direction e, computed as inf over t of h_{K-x}(e + t n_H). For polytopes
// the infimum of the piecewise-linear function is bracketed and solved by
// golden section; for smooth bodies by safeguarded Newton.
double slice_support(const ConvexBody& K, const LinearHyperplane& H, const Vec& x, const Vec& e);

// f_K(H, x) = |(H cap (K - x))^polar|_{n-1}, the (n-1)-volume of the polar
// (taken inside H) of the central slice. Polytopes go through the polar
// projection identity |pi_H((K-x)^polar)|; smooth bodies through the
// support-function integral with angular quadrature.
double slice_polar_volume(const ConvexBody& K, const LinearHyperplane& H, const Vec& x,
                          const Resolution& res = {});

// |pi_H(K)|_{n-1}: width in 2D, Cauchy formula (polytope) or the support
// function area integral (smooth) in 3D.
double shadow_volume_any(const ConvexBody& K, const LinearHyperplane& H,
                         const Resolution& res = {});

// margin of x to the boundary: exact facet margin for polytopes, sampled
// support margin for smooth bodies
double interior_margin(const ConvexBody& K, const Vec& x);

struct SurfaceAtom {
    LinearHyperplane direction;  // tangent hyperplane (normal up to sign)
    double weight;
};

// Surface area measure mu_{boundary B} on the space of unoriented tangent
// directions: atomic on merged facet normals for polytopes, Gauss-map
// quadrature weights for smooth bodies.
struct SurfaceAreaMeasure {
    std::vector<SurfaceAtom> atoms;
    bool atomic = true;
    double total_mass() const {
        double s = 0;
        for (const auto& a : atoms) s += a.weight;
        return s;
    }
};

SurfaceAreaMeasure surface_area_measure(const ConvexBody& B, const Resolution& res = {});

}  // namespace santalo
