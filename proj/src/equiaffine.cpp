#include "santalo/equiaffine.hpp"

#include <cmath>

#include "santalo/hyperplane.hpp"

namespace santalo {

std::vector<Vec> oriented_tangent_frame(const Vec& u_in) {
    Vec u = normalized(u_in);
    if (u.dim() == 2) {
        // det(-u, e) = +1
        return {Vec(u[1], -u[0])};
    }
    auto b = orthonormal_complement(u);  // det(u, b0, b1) = +1
    return {b[1], b[0]};
}

namespace {

constexpr double kCurvatureEigMin = 1e-8;

// tangential Hessian (reverse Weingarten) in the given tangent basis
Mat weingarten_inverse(const SmoothBody& B, const Vec& u, const std::vector<Vec>& frame) {
    Mat H = B.support_hess(u);
    int m = static_cast<int>(frame.size());
    Mat A(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) A(i, j) = dot(frame[i], H * frame[j]);
    return A;
}

// phi = (det g0)^{1/(n+1)} evaluated in an orthonormal tangent basis, where
// g0 is the second fundamental form for the inward Euclidean normal. The
// ratio defining phi is frame-invariant, so any orthonormal basis works.
double phi_at(const SmoothBody& B, const Vec& u) {
    auto frame = oriented_tangent_frame(u);
    Mat A = weingarten_inverse(B, u, frame);
    double mineig = min_eigenvalue_sym(A);
    if (mineig <= kCurvatureEigMin) throw CurvatureDegenerate();
    double detW = 1.0 / det(A);
    return std::pow(detW, 1.0 / (B.dim + 1));
}

// curve on the sphere whose boundary image passes through grad h(u) with
// velocity v (tangent); returns the perturbed unit normal
Vec normal_curve(const Vec& u, const std::vector<Vec>& frame, const Mat& A, const Vec& v_coords,
                 double t) {
    Vec w_coords = solve(A, v_coords);
    Vec w(u.dim());
    for (size_t j = 0; j < frame.size(); ++j) w += w_coords[static_cast<int>(j)] * frame[j];
    return normalized(u + t * w);
}

}  // namespace

EquiaffineData blaschke_normal(const SmoothBody& B, const Vec& u_in) {
    const Vec u = normalized(u_in);
    const int n = B.dim;
    const double step = 1e-4;

    EquiaffineData out;
    out.x = B.support_grad(u);
    out.frame = oriented_tangent_frame(u);
    Mat A = weingarten_inverse(B, u, out.frame);
    if (min_eigenvalue_sym(A) <= kCurvatureEigMin) throw CurvatureDegenerate();
    Mat W = inverse(A);  // g0 in the orthonormal frame
    double phi = std::pow(det(W), 1.0 / (n + 1));

    // d(phi) along the boundary, one central difference per frame direction
    Vec dphi(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        Vec ei = Vec::axis(n - 1, i);
        double pp = phi_at(B, normal_curve(u, out.frame, A, ei, step));
        double pm = phi_at(B, normal_curve(u, out.frame, A, ei, -step));
        dphi[i] = (pp - pm) / (2.0 * step);
    }
    // tangential correction: g0(Z, e_i) = -dphi_i
    Vec z_coords = -1.0 * (A * dphi);  // W z = -dphi
    Vec Z(n);
    for (int j = 0; j < n - 1; ++j) Z += z_coords[j] * out.frame[j];

    out.xi = -phi * u + Z;
    out.g = (1.0 / phi) * W;
    out.alpha_density = phi;
    return out;
}

EquiaffineResiduals equiaffine_residuals(const SmoothBody& B, const Vec& u_in, double step) {
    const Vec u = normalized(u_in);
    EquiaffineData ed = blaschke_normal(B, u);
    Mat A = weingarten_inverse(B, u, ed.frame);

    EquiaffineResiduals r{};
    double xi_norm = norm(ed.xi);
    for (int i = 0; i < B.dim - 1; ++i) {
        Vec ei = Vec::axis(B.dim - 1, i);
        Vec up = normal_curve(u, ed.frame, A, ei, step);
        Vec um = normal_curve(u, ed.frame, A, ei, -step);
        Vec dxi = (blaschke_normal(B, up).xi - blaschke_normal(B, um).xi) / (2.0 * step);
        r.tangency = std::max(r.tangency, std::abs(dot(dxi, u)) / xi_norm);
    }
    Vec cols[kMaxDim];
    cols[0] = ed.xi;
    for (int i = 0; i < B.dim - 1; ++i) cols[i + 1] = ed.frame[i];
    double lhs = det_cols(cols, B.dim);
    double detg = det(ed.g);
    r.metric = std::abs(lhs * lhs - detg) / std::abs(detg);
    r.g_min_eig = min_eigenvalue_sym(ed.g);
    return r;
}

Vec frame_normal(const TangentFrame& frame, const SmoothBody& B) {
    const int n = frame.x.dim();
    if (static_cast<int>(frame.basis.size()) != n - 1)
        throw SpecError("tangent frame needs n-1 basis vectors");
    Vec u(n);
    if (n == 2) {
        u = normalized(rot90(frame.basis[0]));
    } else {
        Vec c = cross(frame.basis[0], frame.basis[1]);
        double r = norm(c);
        if (r <= 1e-12 * norm(frame.basis[0]) * norm(frame.basis[1]))
            throw SpecError("tangent frame basis is degenerate");
        u = c / r;
    }
    if (dot(u, frame.x) < 0) u = -u;
    // consistency: x must be the boundary point with outer normal u
    if (dist(B.support_grad(u), frame.x) > 1e-6 * std::max(1.0, norm(frame.x)))
        throw SpecError("frame point is not on the boundary with this tangent space");
    return u;
}

Mat L_matrix(const TangentFrame& frame, const SmoothBody& B) {
    const int n = frame.x.dim();
    const int m = n - 1;
    Vec u = frame_normal(frame, B);
    auto onb = oriented_tangent_frame(u);
    Mat A = weingarten_inverse(B, u, onb);

    // Gauss-map extension X_j(u') = (I - u'u'^T) xi_j differentiates to
    // nabla_{xi_i} X_j = -<A^{-1} xi_i, xi_j> u  (tangential parts are
    // killed by the determinant below)
    Mat L(m);
    Vec cols[kMaxDim];
    cols[0] = u;
    for (int k = 0; k < m; ++k) cols[k + 1] = frame.basis[k];
    double D = det_cols(cols, n);
    for (int i = 0; i < m; ++i) {
        Vec ci(m), cj(m);
        for (int k = 0; k < m; ++k) ci[k] = dot(frame.basis[i], onb[k]);
        Vec wi = solve(A, ci);
        for (int j = 0; j < m; ++j) {
            for (int k = 0; k < m; ++k) cj[k] = dot(frame.basis[j], onb[k]);
            L(i, j) = -dot(wi, cj) * D;
        }
    }
    return L;
}

double L_value(const TangentFrame& frame, const SmoothBody& B) {
    return det(L_matrix(frame, B));
}

namespace {

// one surface-measure-weighted moment evaluation for dual_centroid
struct DualCentroidNode {
    Vec moment_density;  // integrand value (weight factors applied)
    int argmax = -1;     // extremal projected vertices (2D kink tracking)
    int argmin = -1;
};

DualCentroidNode dual_centroid_integrand(const Polytope& Kp, const SmoothBody& B, const Vec& u,
                                         const std::function<double(const Vec&)>* mu_density) {
    const int n = B.dim;
    EquiaffineData ed = blaschke_normal(B, u);
    double weight = B.gauss_jacobian(u);
    double nu_scale = 1.0;
    if (mu_density) {
        double rho = (*mu_density)(ed.x);
        weight *= rho;
        nu_scale /= rho;
    }
    // oblique projection onto xi^perp along the conormal span(u)
    double denom = dot(u, ed.xi);
    auto project = [&](const Vec& p) { return p - (dot(p, ed.xi) / denom) * u; };
    // normalize nu so the eta-parallelepiped has measure one, where eta_i
    // projects the dual basis of an orthonormal tangent basis
    Mat G(n - 1);
    std::vector<Vec> eta;
    for (const auto& e : ed.frame) eta.push_back(project(e));
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) G(i, j) = dot(eta[i], eta[j]);
    nu_scale /= std::sqrt(det(G));

    auto plane = orthonormal_complement(ed.xi);
    DualCentroidNode out;
    Vec moment(n);
    if (n == 2) {
        double lo = 1e300, hi = -1e300;
        for (size_t i = 0; i < Kp.vertices.size(); ++i) {
            double s = dot(project(Kp.vertices[i]), plane[0]);
            if (s < lo) { lo = s; out.argmin = static_cast<int>(i); }
            if (s > hi) { hi = s; out.argmax = static_cast<int>(i); }
        }
        moment = (0.5 * (hi * hi - lo * lo)) * plane[0];
    } else {
        std::vector<Vec> pts;
        pts.reserve(Kp.vertices.size());
        for (const auto& v : Kp.vertices) {
            Vec q = project(v);
            pts.push_back(Vec(dot(q, plane[0]), dot(q, plane[1])));
        }
        Vec m2 = centroid_integral(convex_hull(pts));
        moment = m2[0] * plane[0] + m2[1] * plane[1];
    }
    out.moment_density = (weight * nu_scale) * moment;
    return out;
}

// 2D path: the integrand is smooth except where the extremal projected
// vertex switches; locate those angles and apply Gauss rules in between,
// with the per-piece order scaling with the resolution knob
Vec dual_centroid_2d(const Polytope& Kp, const SmoothBody& B, const Resolution& res,
                     const std::function<double(const Vec&)>* mu_density) {
    auto at = [&](double t) {
        return dual_centroid_integrand(Kp, B, Vec(std::cos(t), std::sin(t)), mu_density);
    };
    const int scan = std::max(1024, 2 * res.circle_nodes);
    std::vector<double> brk;
    DualCentroidNode prev = at(0.0);
    for (int k = 1; k <= scan; ++k) {
        double t = 2.0 * kPi * k / scan;
        DualCentroidNode cur = at(t);
        if (cur.argmax != prev.argmax || cur.argmin != prev.argmin) {
            double lo = 2.0 * kPi * (k - 1) / scan, hi = t;
            for (int it = 0; it < 50; ++it) {
                double mid = 0.5 * (lo + hi);
                DualCentroidNode m = at(mid);
                if (m.argmax == prev.argmax && m.argmin == prev.argmin) lo = mid;
                else hi = mid;
            }
            brk.push_back(hi);
        }
        prev = cur;
    }
    const int order = std::max(2, res.circle_nodes / 64);
    const GaussRule& gr = gauss_legendre(order);
    if (brk.empty()) brk.push_back(0.0);
    std::sort(brk.begin(), brk.end());
    Vec C(2);
    for (size_t i = 0; i < brk.size(); ++i) {
        double a = brk[i];
        double b = (i + 1 < brk.size()) ? brk[i + 1] : brk[0] + 2.0 * kPi;
        if (b - a < 1e-13) continue;
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int q = 0; q < order; ++q)
            C += (half * gr.weights[q]) * at(mid + half * gr.nodes[q]).moment_density;
    }
    return C;
}

}  // namespace

Vec dual_centroid(const ConvexBody& K, const SmoothBody& B, const Resolution& res,
                  const std::function<double(const Vec&)>* mu_density) {
    const int n = B.dim;
    if (dim_of(K) != n) throw DimensionMismatch();
    if (!is_polytope(K))
        throw SpecError("dual_centroid projects the polar polytope; K must be a polytope");
    const Polytope& P = as_polytope(K);
    if (P.interior_margin(Vec::zero(n)) <= kGeomTol * P.scale()) throw OriginNotInterior();
    Polytope Kp = polar(P);

    if (n == 2) return dual_centroid_2d(Kp, B, res, mu_density);
    SphereRule rule = sphere_rule(n, res);
    Vec C(n);
    for (size_t k = 0; k < rule.nodes.size(); ++k)
        C += rule.weights[k] *
             dual_centroid_integrand(Kp, B, rule.nodes[k], mu_density).moment_density;
    return C;
}

}  // namespace santalo
