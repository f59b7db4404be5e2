#include "santalo/ht_measure.hpp"

#include <cmath>

namespace santalo {

double unit_ball_volume(int k) {
    if (k < 0) throw SpecError("unit_ball_volume: negative dimension");
    return std::exp(0.5 * k * std::log(kPi) - std::lgamma(0.5 * k + 1.0));
}

double body_volume(const ConvexBody& A, const Resolution& res) {
    if (is_polytope(A)) return volume(as_polytope(A));
    const SmoothBody& B = as_smooth(A);
    // |A| = (1/n) integral of h over the boundary sphere (divergence theorem
    // through the Gauss map)
    SphereRule rule = sphere_rule(B.dim, res);
    double s = 0;
    for (size_t k = 0; k < rule.nodes.size(); ++k)
        s += rule.weights[k] * B.support(rule.nodes[k]) * B.gauss_jacobian(rule.nodes[k]);
    return s / B.dim;
}

double polar_volume(const ConvexBody& A, const Resolution& res) {
    if (is_polytope(A)) return volume(polar(as_polytope(A)));
    const SmoothBody& B = as_smooth(A);
    SphereRule rule = sphere_rule(B.dim, res);
    double s = 0;
    for (size_t k = 0; k < rule.nodes.size(); ++k)
        s += rule.weights[k] * std::pow(B.support(rule.nodes[k]), -B.dim);
    return s / B.dim;
}

double ht_volume(const ConvexBody& A, const ConvexBody& B, const Resolution& res) {
    if (dim_of(A) != dim_of(B)) throw DimensionMismatch();
    return body_volume(A, res) * polar_volume(B, res) / unit_ball_volume(dim_of(A));
}

namespace {

// |(H cap B)^polar| as a function of the tangent hyperplane, with the polar
// of a polytope norm body precomputed
struct NormSlices {
    const ConvexBody* B;
    const Resolution* res;
    Polytope polarB;  // set iff B is a polytope

    explicit NormSlices(const ConvexBody& Bv, const Resolution& r) : B(&Bv), res(&r) {
        if (is_polytope(Bv)) polarB = polar(as_polytope(Bv));
    }
    double operator()(const LinearHyperplane& H) const {
        if (is_polytope(*B)) return shadow_volume(polarB, H);
        return slice_polar_volume(*B, H, Vec::zero(dim_of(*B)), *res);
    }
};

double ht_area_smooth_boundary(const SmoothBody& M, const ConvexBody& B, const Resolution& res) {
    const int n = M.dim;
    const double eps = unit_ball_volume(n - 1);
    if (is_polytope(B)) {
        // split the shadow function of B^polar into facet terms
        // |pi_{u^perp}(B^polar)| = (1/2) sum_j a_j |<u_j, u>| and integrate
        // each term with the equator-split rule (the integrand kink sits
        // exactly on the great circle <u_j, u> = 0)
        Polytope Bp = polar(as_polytope(B));
        double total = 0;
        if (n == 2) {
            for (const auto& f : Bp.facets) {
                auto g = [&](double t) { return M.gauss_jacobian(Vec(std::cos(t), std::sin(t))); };
                total += f.area * integrate_abs_dot_circle(f.normal, g, res.gauss_nodes);
            }
        } else {
            auto g = [&](const Vec& u) { return M.gauss_jacobian(u); };
            for (const auto& f : Bp.facets)
                total += f.area *
                         integrate_abs_dot_sphere(f.normal, g, res.gauss_nodes, 2 * res.gauss_nodes);
        }
        return total / (2.0 * eps);
    }
    // smooth norm body: plain Gauss-map quadrature of the slice integrand
    NormSlices fB(B, res);
    SurfaceRule rule = surface_quadrature(M, res);
    double s = 0;
    for (size_t k = 0; k < rule.normals.size(); ++k)
        s += rule.weights[k] * fB(LinearHyperplane(rule.normals[k]));
    return s / eps;
}

}  // namespace

double ht_area(const ConvexBody& M, const ConvexBody& B, const Resolution& res) {
    const int n = dim_of(M);
    if (n != dim_of(B)) throw DimensionMismatch();
    if (interior_margin(B, Vec::zero(n)) <= 0) throw OriginNotInterior();
    const double eps = unit_ball_volume(n - 1);
    if (is_polytope(M)) {
        NormSlices fB(B, res);
        double s = 0;
        for (const auto& f : as_polytope(M).facets)
            s += f.area * fB(LinearHyperplane(f.normal));
        return s / eps;
    }
    return ht_area_smooth_boundary(as_smooth(M), B, res);
}

DualAreaPair ht_area_dual_pair(const ConvexBody& K, const ConvexBody& B, const Resolution& res) {
    const int n = dim_of(K);
    if (n != dim_of(B)) throw DimensionMismatch();
    if (interior_margin(K, Vec::zero(n)) <= 0) throw OriginNotInterior();
    DualAreaPair out{};
    out.primal = ht_area(B, K, res);

    const double eps = unit_ball_volume(n - 1);
    if (is_polytope(K)) {
        Polytope Kp = polar(as_polytope(K));
        double s = 0;
        for (const auto& f : Kp.facets)
            s += f.area * shadow_volume_any(B, LinearHyperplane(f.normal), res);
        out.polar = s / eps;
        return out;
    }
    // smooth K: walk the boundary of K^polar through the radial map
    // p(u) = u / h_K(u); the outer normal of K^polar at p(u) is grad h_K(u)
    const SmoothBody& Ks = as_smooth(K);
    SphereRule rule = sphere_rule(n, res);
    double s = 0;
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
        const Vec& u = rule.nodes[k];
        double h = Ks.support(u);
        Vec g = Ks.support_grad(u);
        auto basis = orthonormal_complement(u);
        auto dp = [&](const Vec& w) { return (1.0 / (h * h)) * (h * w - dot(g, w) * u); };
        double jac = (n == 2) ? norm(dp(basis[0])) : norm(cross(dp(basis[0]), dp(basis[1])));
        s += rule.weights[k] * jac * shadow_volume_any(B, LinearHyperplane(g), res);
    }
    out.polar = s / eps;
    return out;
}

double ht_area_dual(const ConvexBody& K, const ConvexBody& B, const Resolution& res) {
    return ht_area_dual_pair(K, B, res).primal;
}

namespace {

// boundary parametrization for the symplectic double integral: a polygon
// edge list or uniformly sampled derivative vectors
struct CurveDerivs {
    bool exact_edges = false;
    std::vector<Vec> v;  // edge vectors, or x'(t_k) dt
};

CurveDerivs boundary_of(const ConvexBody& K, const Resolution& res) {
    CurveDerivs c;
    if (is_polytope(K)) {
        const Polytope& P = as_polytope(K);
        c.exact_edges = true;
        int m = static_cast<int>(P.vertices.size());
        for (int i = 0; i < m; ++i) c.v.push_back(P.vertices[(i + 1) % m] - P.vertices[i]);
        return c;
    }
    const SmoothBody& B = as_smooth(K);
    int N = res.circle_nodes;
    double dt = 2.0 * kPi / N;
    for (int k = 0; k < N; ++k) {
        double t = dt * k;
        Vec u(std::cos(t), std::sin(t));
        Vec e = rot90(u);
        double jac = B.gauss_jacobian(u);  // curvature radius h + h''
        c.v.push_back((jac * dt) * e);
    }
    return c;
}

CurveDerivs polar_boundary_of(const ConvexBody& B, const Resolution& res) {
    if (is_polytope(B)) {
        Polytope Bp = polar(as_polytope(B));
        CurveDerivs c;
        c.exact_edges = true;
        int m = static_cast<int>(Bp.vertices.size());
        for (int i = 0; i < m; ++i) c.v.push_back(Bp.vertices[(i + 1) % m] - Bp.vertices[i]);
        return c;
    }
    const SmoothBody& S = as_smooth(B);
    CurveDerivs c;
    int N = res.circle_nodes;
    double dt = 2.0 * kPi / N;
    for (int k = 0; k < N; ++k) {
        double t = dt * k;
        Vec u(std::cos(t), std::sin(t));
        Vec e = rot90(u);
        double h = S.support(u);
        double hp = dot(S.support_grad(u), e);
        // derivative of p(t) = u(t)/h(t)
        c.v.push_back(dt * ((1.0 / h) * e - (hp / (h * h)) * u));
    }
    return c;
}

}  // namespace

double symplectic_area_2d(const ConvexBody& K, const ConvexBody& B, const Resolution& res) {
    if (dim_of(K) != 2 || dim_of(B) != 2)
        throw WrongDimension("symplectic_area_2d needs planar bodies");
    if (interior_margin(B, Vec::zero(2)) <= 0) throw OriginNotInterior();
    CurveDerivs ck = boundary_of(K, res);
    CurveDerivs cb = polar_boundary_of(B, res);
    double s = 0;
    for (const auto& a : ck.v)
        for (const auto& b : cb.v) s += std::abs(a[0] * b[0] + a[1] * b[1]);
    return s / (2.0 * unit_ball_volume(1));
}

double isoperimetrix_support(const ConvexBody& K, const Vec& u, const Resolution& res) {
    const int n = dim_of(K);
    if (norm(u) == 0.0) throw ZeroDirection();
    if (interior_margin(K, Vec::zero(n)) <= 0) throw OriginNotInterior();
    LinearHyperplane H(u);
    double shadow;
    if (is_polytope(K))
        shadow = shadow_volume(polar(as_polytope(K)), H);
    else
        shadow = slice_polar_volume(K, H, Vec::zero(n), res);
    return shadow / unit_ball_volume(n - 1);
}

IsoperimetricResult isoperimetric_ratio(const ConvexBody& K, const ConvexBody& B,
                                        const Resolution& res) {
    const int n = dim_of(K);
    double area = ht_area(B, K, res);          // A_K(boundary of B)
    double vol = ht_volume(B, K, res);         // vol_K(B)
    IsoperimetricResult r{};
    r.ratio = std::pow(area, n) / std::pow(vol, n - 1);
    r.bound = std::pow(4.0 * n, n) / (std::tgamma(n + 1.0) * unit_ball_volume(n));
    return r;
}

}  // namespace santalo
