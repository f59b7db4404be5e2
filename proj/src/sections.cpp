#include "santalo/sections.hpp"

#include <cmath>

namespace santalo {

namespace {

double slice_support_smooth(const SmoothBody& K, const Vec& nH, const Vec& x, const Vec& e) {
    // minimize q(t) = h_K(e + t n) - <x, e + t n>; strictly convex in t
    double t = 0;
    for (int it = 0; it < 60; ++it) {
        Vec w = e + t * nH;
        Vec g = K.support_grad(w);
        double q1 = dot(g - x, nH);
        double q2 = dot(nH, K.support_hess(w) * nH);
        double step = q1 / q2;
        t -= step;
        if (std::abs(step) < 1e-14 * (1.0 + std::abs(t))) break;
    }
    Vec w = e + t * nH;
    return K.support(w) - dot(x, w);
}

double slice_support_polytope(const Polytope& K, const Vec& nH, const Vec& x, const Vec& e) {
    auto q = [&](double t) {
        Vec w = e + t * nH;
        return K.support(w) - dot(x, w);
    };
    // bracket the minimum of the convex piecewise-linear function
    double lo = -1.0, hi = 1.0;
    while (q(lo) < q(lo + 1e-6)) lo *= 2.0;
    while (q(hi) < q(hi - 1e-6)) hi *= 2.0;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = q(c), fd = q(d);
    for (int it = 0; it < 200 && (b - a) > 1e-13 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = q(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = q(d);
        }
    }
    return q(0.5 * (a + b));
}

}  // namespace

double slice_support(const ConvexBody& K, const LinearHyperplane& H, const Vec& x, const Vec& e) {
    if (is_polytope(K)) return slice_support_polytope(as_polytope(K), H.normal, x, e);
    return slice_support_smooth(as_smooth(K), H.normal, x, e);
}

double interior_margin(const ConvexBody& K, const Vec& x) {
    if (is_polytope(K)) return as_polytope(K).interior_margin(x);
    const SmoothBody& B = as_smooth(K);
    double m = 1e300;
    SphereRule rule = B.dim == 2 ? circle_rule(256) : icosphere_rule(2);
    for (const auto& u : rule.nodes) m = std::min(m, B.support(u) - dot(u, x));
    return m;
}

double slice_polar_volume(const ConvexBody& K, const LinearHyperplane& H, const Vec& x,
                          const Resolution& res) {
    const int n = dim_of(K);
    if (H.dim() != n) throw DimensionMismatch();
    const double margin_tol = kGeomTol * std::max(1.0, body_scale(K));
    if (interior_margin(K, x) <= margin_tol) throw PointNotInterior();

    if (is_polytope(K)) {
        Polytope C = polar(as_polytope(K).translated(-x));
        return shadow_volume(C, H);
    }
    const SmoothBody& B = as_smooth(K);
    auto basis = hyperplane_basis(H);
    if (n == 2) {
        double a = slice_support_smooth(B, H.normal, x, basis[0]);
        double b = slice_support_smooth(B, H.normal, x, -basis[0]);
        if (a <= margin_tol || b <= margin_tol) throw PointNotInterior();
        return 1.0 / a + 1.0 / b;
    }
    // |C|_m = (1/m) integral of h_{C^polar}^{-m}; here m = 2 and the slice
    // support plays the role of h_{C^polar}
    auto f = [&](double t) {
        Vec e = std::cos(t) * basis[0] + std::sin(t) * basis[1];
        double h = slice_support_smooth(B, H.normal, x, e);
        return 1.0 / (h * h);
    };
    return 0.5 * integrate_circle(f, res.slice_angles);
}

double shadow_volume_any(const ConvexBody& K, const LinearHyperplane& H, const Resolution& res) {
    if (is_polytope(K)) return shadow_volume(as_polytope(K), H);
    const SmoothBody& B = as_smooth(K);
    auto basis = hyperplane_basis(H);
    if (B.dim == 2) return B.support(basis[0]) + B.support(-basis[0]);
    // area of the projected body from its support function h(t) = h_B(e(t))
    auto term = [&](double t) {
        Vec e = std::cos(t) * basis[0] + std::sin(t) * basis[1];
        Vec de = -std::sin(t) * basis[0] + std::cos(t) * basis[1];
        double h = B.support(e);
        double hp = dot(B.support_grad(e), de);
        return h * h - hp * hp;
    };
    return 0.5 * integrate_circle(term, res.slice_angles);
}

SurfaceAreaMeasure surface_area_measure(const ConvexBody& Bv, const Resolution& res) {
    SurfaceAreaMeasure mu;
    if (is_polytope(Bv)) {
        const Polytope& B = as_polytope(Bv);
        if (B.facets.empty()) throw DegenerateBody();
        mu.atomic = true;
        for (const auto& f : B.facets) {
            LinearHyperplane dir(f.normal);
            bool merged = false;
            for (auto& a : mu.atoms)
                if (a.direction.same_as(dir)) {
                    a.weight += f.area;
                    merged = true;
                    break;
                }
            if (!merged) mu.atoms.push_back({dir, f.area});
        }
        return mu;
    }
    const SmoothBody& B = as_smooth(Bv);
    SurfaceRule rule = surface_quadrature(B, res);
    mu.atomic = false;
    mu.atoms.reserve(rule.normals.size());
    for (size_t k = 0; k < rule.normals.size(); ++k)
        mu.atoms.push_back({LinearHyperplane(rule.normals[k]), rule.weights[k]});
    return mu;
}

}  // namespace santalo
