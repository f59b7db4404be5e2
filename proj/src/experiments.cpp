#include "santalo/experiments.hpp"

#include <algorithm>
#include <cmath>

namespace santalo {

namespace {

double rel_gap(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

Polytope shifted_square() { return make_cube(2, 1.0).translated(Vec(-0.3, -0.1)); }
Polytope shifted_cube() { return make_cube(3, 1.0).translated(Vec(-0.25, 0.15, -0.1)); }

SmoothBody default_perturbed(int dim) {
    Mat S(dim);
    if (dim == 2) {
        S(0, 0) = 0.3; S(0, 1) = S(1, 0) = 0.1; S(1, 1) = -0.2;
        return make_perturbed_ball(2, 0.1, S, 0.2);
    }
    S(0, 0) = 0.2; S(0, 1) = S(1, 0) = 0.05; S(1, 1) = -0.15;
    S(1, 2) = S(2, 1) = 0.05; S(2, 2) = 0.1;
    return make_perturbed_ball(3, 0.1, S, 0.15);
}

}  // namespace

std::vector<CheckRecord> suite_analytic_anchors(const Resolution& res) {
    std::vector<CheckRecord> out;
    ConvexBody disc = make_ball(2, 1.0);
    ConvexBody square = make_cube(2, 1.0);
    out.push_back(check_abs("ht_area(disc, disc) = 2*pi", ht_area(disc, disc, res), 2 * kPi, 1e-6));
    out.push_back(check_abs("ht_area(square, square) = 8", ht_area(square, square, res), 8.0, 1e-9));
    out.push_back(
        check_abs("ht_volume(disc, disc) = pi", ht_volume(disc, disc, res), kPi, 1e-12));
    return out;
}

std::vector<CheckRecord> suite_duality(std::uint64_t seed, int count, const Resolution& res) {
    RandomSource rng(seed);
    std::vector<CheckRecord> out;
    double gap2 = 0;
    for (int i = 0; i < 50 * count; ++i) {
        ConvexBody K = random_polytope(rng, 2, rng.uniform_int(5, 12));
        ConvexBody B = random_polytope(rng, 2, rng.uniform_int(5, 12));
        DualAreaPair p = ht_area_dual_pair(K, B, res);
        gap2 = std::max(gap2, rel_gap(p.primal, p.polar));
    }
    out.push_back(check_le("duality 2d polytope pairs: max relative gap", gap2, 1e-9, 0.0));

    double gap3 = 0;
    for (int i = 0; i < 20 * count; ++i) {
        ConvexBody K = random_polytope(rng, 3, rng.uniform_int(8, 16));
        ConvexBody B = random_polytope(rng, 3, rng.uniform_int(8, 16));
        DualAreaPair p = ht_area_dual_pair(K, B, res);
        gap3 = std::max(gap3, rel_gap(p.primal, p.polar));
    }
    out.push_back(check_le("duality 3d polytope pairs: max relative gap", gap3, 1e-9, 0.0));

    double gapm = 0;
    for (int i = 0; i < 4 * count; ++i) {
        ConvexBody K2 = random_polytope(rng, 2, rng.uniform_int(5, 10));
        ConvexBody B2 = random_smooth_body(rng, 2);
        DualAreaPair p2 = ht_area_dual_pair(K2, B2, res);
        gapm = std::max(gapm, rel_gap(p2.primal, p2.polar));
        ConvexBody K3 = random_polytope(rng, 3, rng.uniform_int(8, 14));
        ConvexBody B3 = random_smooth_body(rng, 3);
        DualAreaPair p3 = ht_area_dual_pair(K3, B3, res);
        gapm = std::max(gapm, rel_gap(p3.primal, p3.polar));
    }
    out.push_back(check_le("duality smooth/polytope pairs: max relative gap", gapm, 1e-5, 0.0));
    return out;
}

std::vector<CheckRecord> suite_crofton_2d(std::uint64_t seed, int count, const Resolution& res) {
    RandomSource rng(seed);
    std::vector<CheckRecord> out;
    double gap_poly = 0, gap_mixed = 0;
    for (int i = 0; i < 20 * count; ++i) {
        ConvexBody K = random_polytope(rng, 2, rng.uniform_int(4, 10));
        ConvexBody B = random_polytope(rng, 2, rng.uniform_int(4, 10));
        double a = ht_area(K, B, res);
        double s = symplectic_area_2d(K, B, res);
        gap_poly = std::max(gap_poly, rel_gap(a, s));
    }
    for (int i = 0; i < 6 * count; ++i) {
        ConvexBody K = random_polytope(rng, 2, rng.uniform_int(4, 10));
        ConvexBody B = random_smooth_body(rng, 2);
        gap_mixed = std::max(gap_mixed, rel_gap(ht_area(K, B, res), symplectic_area_2d(K, B, res)));
        gap_mixed = std::max(gap_mixed, rel_gap(ht_area(B, K, res), symplectic_area_2d(B, K, res)));
    }
    out.push_back(
        check_le("crofton 2d polygon pairs: max relative gap", gap_poly, 1e-9, 0.0));
    out.push_back(check_le("crofton 2d mixed pairs: max relative gap", gap_mixed, 1e-3, 0.0));
    return out;
}

std::vector<CheckRecord> suite_isoperimetric(std::uint64_t seed, int count, const Resolution& res) {
    RandomSource rng(seed);
    std::vector<CheckRecord> out;
    double bound2 = isoperimetric_ratio(make_cube(2, 1.0), make_cube(2, 1.0), res).bound;
    out.push_back(check_abs("isoperimetric bound n=2 equals 32/pi", bound2, 32.0 / kPi, 1e-12));
    for (int dim : {2, 3}) {
        double min_margin = 1e300;
        for (int i = 0; i < 25 * count; ++i) {
            ConvexBody K = random_polytope(rng, dim, rng.uniform_int(dim + 2, 12));
            ConvexBody B = (i % 5 == 4) ? ConvexBody(random_smooth_body(rng, dim))
                                        : ConvexBody(random_polytope(rng, dim, rng.uniform_int(dim + 2, 12)));
            IsoperimetricResult r = isoperimetric_ratio(K, B, res);
            min_margin = std::min(min_margin, r.ratio - r.bound);
        }
        out.push_back(check_ge("isoperimetric margin n=" + std::to_string(dim), min_margin, 0.0,
                               1e-9));
    }
    return out;
}

std::vector<CheckRecord> suite_convexity(std::uint64_t seed, int count, const Resolution& res) {
    RandomSource rng(seed);
    std::vector<CheckRecord> out;

    // midpoint defect of the objective on random bodies and point pairs
    double min_defect = 1e300;
    for (int i = 0; i < 200 * count; ++i) {
        int dim = (i % 2) ? 3 : 2;
        Polytope K = random_polytope(rng, dim, rng.uniform_int(dim + 2, 10));
        ConvexBody B = (i % 7 == 3) ? ConvexBody(random_smooth_body(rng, dim))
                                    : ConvexBody(random_polytope(rng, dim, rng.uniform_int(dim + 2, 10)));
        Vec x1 = random_interior_point(rng, K, 0.55);
        Vec x2 = random_interior_point(rng, K, 0.55);
        ConvexBody Kb = K;
        double d = objective(x1, Kb, B, res) + objective(x2, Kb, B, res) -
                   2.0 * objective(0.5 * (x1 + x2), Kb, B, res);
        min_defect = std::min(min_defect, d);
    }
    out.push_back(check_ge("objective midpoint defect (random probes)", min_defect, 0.0, 1e-10));

    // slice-level defect of f_K(H, .) is nonnegative as well
    double min_slice = 1e300;
    for (int i = 0; i < 50 * count; ++i) {
        int dim = (i % 2) ? 3 : 2;
        Polytope K = random_polytope(rng, dim, rng.uniform_int(dim + 2, 10));
        LinearHyperplane H(rng.unit_vector(dim));
        Vec x1 = random_interior_point(rng, K, 0.55);
        Vec x2 = random_interior_point(rng, K, 0.55);
        min_slice = std::min(min_slice, strcvx_defect(H, x1, x2, K, res));
    }
    out.push_back(check_ge("slice midpoint defect (random probes)", min_slice, 0.0, 1e-12));

    // C^1 norm bodies give uniformly positive defects for separated pairs
    double min_c1 = 1e300;
    for (int i = 0; i < 20 * count; ++i) {
        int dim = (i % 2) ? 3 : 2;
        Polytope K = random_polytope(rng, dim, rng.uniform_int(dim + 2, 10));
        ConvexBody B = (i % 2) ? ConvexBody(make_ball(dim, 1.0))
                               : ConvexBody(make_ellipsoid(random_spd(rng, dim)));
        Vec x1, x2;
        do {
            x1 = random_interior_point(rng, K, 0.7);
            x2 = random_interior_point(rng, K, 0.7);
        } while (dist(x1, x2) < 0.1 * K.diameter());
        ConvexBody Kb = K;
        double d = objective(x1, Kb, B, res) + objective(x2, Kb, B, res) -
                   2.0 * objective(0.5 * (x1 + x2), Kb, B, res);
        min_c1 = std::min(min_c1, d);
    }
    out.push_back(check_ge("strict defect for C1 norms, separated pairs", min_c1, 1e-6, 0.0));

    // K = B polytope: no flat segments (self-norm uniqueness)
    double min_span = 1e300;
    std::vector<Polytope> self_bodies = {make_cube(2, 1.0), make_regular_polygon(6),
                                         random_polytope(rng, 2, 7), make_cube(3, 1.0)};
    for (const auto& Kb : self_bodies) {
        ConvexBody K = Kb, B = Kb;
        for (int i = 0; i < 5 * count; ++i) {
            Vec x1, x2;
            do {
                x1 = random_interior_point(rng, Kb, 0.6);
                x2 = random_interior_point(rng, Kb, 0.6);
            } while (dist(x1, x2) < 0.1 * Kb.diameter());
            double lo = 1e300, hi = -1e300;
            for (int s = 0; s <= 10; ++s) {
                double t = s / 10.0;
                double v = objective(x1 + t * (x2 - x1), K, B, res);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            min_span = std::min(min_span, hi - lo);
        }
    }
    out.push_back(check_ge("K = B segments are non-flat", min_span, 1e-10, 0.0));
    return out;
}

std::vector<CheckRecord> suite_equivariance(std::uint64_t seed, int count, const Resolution& res) {
    RandomSource rng(seed);
    std::vector<CheckRecord> out;

    // ht_area invariance under simultaneous linear maps
    double gap_area = 0;
    for (int i = 0; i < 10 * count; ++i) {
        int dim = (i % 2) ? 3 : 2;
        Polytope K = random_polytope(rng, dim, rng.uniform_int(dim + 2, 10));
        Polytope B = random_polytope(rng, dim, rng.uniform_int(dim + 2, 10));
        Mat T = random_invertible(rng, dim);
        double a = ht_area(ConvexBody(K), ConvexBody(B), res);
        double b = ht_area(ConvexBody(K.linear_image(T)), ConvexBody(B.linear_image(T)), res);
        gap_area = std::max(gap_area, rel_gap(a, b));
    }
    out.push_back(check_le("ht_area linear invariance: max relative gap", gap_area, 1e-9, 0.0));

    // affine equivariance of B -> santalo_point(B, B)
    SolverOptions opts;
    opts.tol = 1e-10;
    std::vector<Polytope> bodies = {make_cube(2, 1.0), make_regular_polygon(6),
                                    random_polytope(rng, 2, 5), random_polytope(rng, 2, 7),
                                    random_polytope(rng, 2, 9)};
    double worst = 0;
    for (const auto& B0 : bodies) {
        SolveResult base = santalo_point(ConvexBody(B0), ConvexBody(B0), opts, res);
        for (int i = 0; i < 4 * count; ++i) {
            Mat T = random_invertible(rng, 2);
            Vec shift(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
            Polytope TB = B0.linear_image(T).translated(shift);
            SolveResult moved = santalo_point(ConvexBody(TB), ConvexBody(TB), opts, res);
            Vec expect = T * base.point + shift;
            worst = std::max(worst, dist(moved.point, expect) / TB.diameter());
        }
    }
    out.push_back(check_le("santalo affine equivariance: max |S(TB)-T S(B)| / diam", worst,
                           1e-6, 0.0));

    // continuity probe: smaller vertex perturbations move the point less
    Polytope P = make_regular_polygon(5);
    SolveResult base = santalo_point(ConvexBody(P), ConvexBody(P), opts, res);
    std::vector<Vec> dirs;
    for (size_t i = 0; i < P.vertices.size(); ++i) dirs.push_back(rng.unit_vector(2));
    std::vector<double> moved;
    for (double delta : {1e-2, 1e-3, 1e-4}) {
        std::vector<Vec> pts = P.vertices;
        for (size_t i = 0; i < pts.size(); ++i) pts[i] += delta * dirs[i];
        Polytope Pd = convex_hull(pts);
        SolveResult r = santalo_point(ConvexBody(Pd), ConvexBody(Pd), opts, res);
        moved.push_back(dist(r.point, base.point));
    }
    out.push_back(check_le("santalo continuity: move(1e-3) < move(1e-2)", moved[1], moved[0], 0.0));
    out.push_back(check_le("santalo continuity: move(1e-4) < move(1e-3)", moved[2], moved[1], 0.0));

    // ht_area continuity under vanishing vertex perturbations
    Polytope K0 = random_polytope(rng, 2, 7);
    Polytope B0 = random_polytope(rng, 2, 6);
    std::vector<Vec> kdirs;
    for (size_t i = 0; i < K0.vertices.size(); ++i) kdirs.push_back(rng.unit_vector(2));
    double a0 = ht_area(ConvexBody(K0), ConvexBody(B0), res);
    std::vector<double> drift;
    for (double delta : {1e-3, 1e-4, 1e-5}) {
        std::vector<Vec> pts = K0.vertices;
        for (size_t i = 0; i < pts.size(); ++i) pts[i] += delta * kdirs[i];
        drift.push_back(std::abs(ht_area(ConvexBody(convex_hull(pts)), ConvexBody(B0), res) - a0));
    }
    out.push_back(check_le("ht_area continuity: drift(1e-4) < drift(1e-3)", drift[1], drift[0], 0.0));
    out.push_back(check_le("ht_area continuity: drift(1e-5) < drift(1e-4)", drift[2], drift[1], 0.0));
    return out;
}

std::vector<CheckRecord> suite_properness(const Resolution& res) {
    std::vector<CheckRecord> out;
    ConvexBody square = make_cube(2, 1.0);

    auto increasing = [](const std::vector<PropernessSample>& s) {
        double min_step = 1e300;
        for (size_t i = 1; i < s.size(); ++i) min_step = std::min(min_step, s[i].value - s[i - 1].value);
        return min_step;
    };

    auto cls = properness_probe(square, nullptr, Vec(1.0, 0.0), res);
    out.push_back(check_ge("classical blow-up along ray: strictly increasing", increasing(cls), 0.0, 0.0));
    out.push_back(check_ge("classical blow-up: final / interior value", cls.back().value / cls.front().value,
                           10.0, 0.0));

    auto ht = properness_probe(square, &square, normalized(Vec(1.0, 1.0)), res);
    out.push_back(check_ge("ht blow-up along diagonal: strictly increasing", increasing(ht), 0.0, 0.0));
    out.push_back(check_ge("ht blow-up: final / interior value", ht.back().value / ht.front().value, 10.0, 0.0));

    // |B_k^polar| diverges as the origin drifts to the boundary
    std::vector<double> vols;
    for (double k : {10.0, 100.0, 1000.0}) {
        Polytope Bk = make_cube(2, 1.0).translated(Vec(-(1.0 - 1.0 / k), 0.0));
        vols.push_back(volume(polar(Bk)));
    }
    out.push_back(check_ge("polar volume divergence: v(100)/v(10)", vols[1] / vols[0], 5.0, 0.0));
    out.push_back(check_ge("polar volume divergence: v(1000)/v(100)", vols[2] / vols[1], 5.0, 0.0));
    return out;
}

std::vector<CheckRecord> suite_equiaffine(std::uint64_t seed, const Resolution& res) {
    (void)res;
    RandomSource rng(seed);
    std::vector<CheckRecord> out;

    std::vector<SmoothBody> bodies;
    bodies.push_back(make_ball(2, 1.0));
    bodies.push_back(make_ball(3, 1.0));
    bodies.push_back(make_ellipsoid(Mat::diag(Vec(1.0, 2.0))));
    bodies.push_back(make_ellipsoid(Mat::diag(Vec(1.0, 2.0, 0.5))));
    bodies.push_back(default_perturbed(2));
    bodies.push_back(default_perturbed(3));

    double tangency = 0, metric = 0, min_eig = 1e300;
    for (const auto& B : bodies)
        for (int i = 0; i < 40; ++i) {
            Vec u = rng.unit_vector(B.dim);
            EquiaffineResiduals r = equiaffine_residuals(B, u);
            tangency = std::max(tangency, r.tangency);
            metric = std::max(metric, r.metric);
            min_eig = std::min(min_eig, r.g_min_eig);
        }
    out.push_back(check_le("equiaffine condition (i): max tangency residual", tangency, 1e-6, 0.0));
    out.push_back(check_le("equiaffine condition (ii): max metric residual", metric, 1e-6, 0.0));
    out.push_back(check_ge("equiaffine metric positive definite", min_eig, 0.0, 0.0));

    // unit sphere: Xi(x) = -x exactly; radius-2 circle: Xi = -2^{-4/3} x
    double sphere_gap = 0;
    for (const SmoothBody& B : {make_ball(2, 1.0), make_ball(3, 1.0)})
        for (int i = 0; i < 20; ++i) {
            Vec u = rng.unit_vector(B.dim);
            EquiaffineData ed = blaschke_normal(B, u);
            sphere_gap = std::max(sphere_gap, dist(ed.xi, -1.0 * ed.x));
        }
    out.push_back(check_le("unit sphere: |Xi(x) + x|", sphere_gap, 1e-9, 0.0));

    SmoothBody circle2 = make_ball(2, 2.0);
    double c2_gap = 0;
    double want = std::pow(2.0, -4.0 / 3.0);
    for (int i = 0; i < 20; ++i) {
        Vec u = rng.unit_vector(2);
        EquiaffineData ed = blaschke_normal(circle2, u);
        c2_gap = std::max(c2_gap, dist(ed.xi, -want * ed.x));
    }
    out.push_back(check_le("radius-2 circle: |Xi + 2^{-4/3} x|", c2_gap, 1e-8, 0.0));

    // centered ellipsoids are affine spheres: Xi(x) parallel to x
    double collin = 0;
    for (const SmoothBody& E : {make_ellipsoid(Mat::diag(Vec(1.0, 2.0))),
                                make_ellipsoid(Mat::diag(Vec(0.7, 1.3, 2.1)))})
        for (int i = 0; i < 30; ++i) {
            Vec u = rng.unit_vector(E.dim);
            EquiaffineData ed = blaschke_normal(E, u);
            Vec xhat = normalized(ed.x);
            Vec residual = ed.xi - dot(ed.xi, xhat) * xhat;
            collin = std::max(collin, norm(residual) / norm(ed.xi));
        }
    out.push_back(check_le("ellipsoid: Xi collinear with x", collin, 1e-6, 0.0));

    // L identities
    double l_sphere = 0;
    SmoothBody ball3 = make_ball(3, 1.0);
    for (int i = 0; i < 10; ++i) {
        Vec u = rng.unit_vector(3);
        TangentFrame fr{ball3.support_grad(u), oriented_tangent_frame(u)};
        l_sphere = std::max(l_sphere, std::abs(L_value(fr, ball3) - 1.0));
    }
    out.push_back(check_le("unit sphere orthonormal frame: |L - 1|", l_sphere, 1e-10, 0.0));

    double sym_gap = 0, ident_gap = 0, scale_gap = 0, change_gap = 0;
    for (const SmoothBody& B : {make_ellipsoid(Mat::diag(Vec(1.0, 2.0, 0.6))), default_perturbed(3)})
        for (int i = 0; i < 15; ++i) {
            Vec u = rng.unit_vector(3);
            auto onb = oriented_tangent_frame(u);
            // random frame: invertible combination of the orthonormal one
            Mat C = random_invertible(rng, 2, 0.2);
            TangentFrame fr;
            fr.x = B.support_grad(u);
            fr.basis = {C(0, 0) * onb[0] + C(0, 1) * onb[1], C(1, 0) * onb[0] + C(1, 1) * onb[1]};
            Mat L = L_matrix(fr, B);
            sym_gap = std::max(sym_gap, std::abs(L(0, 1) - L(1, 0)) /
                                            std::max(1.0, std::abs(L(0, 1))));
            double lv = det(L);
            EquiaffineData ed = blaschke_normal(B, u);
            Vec cols[3] = {ed.xi, fr.basis[0], fr.basis[1]};
            double rhs = std::pow(det_cols(cols, 3), 4);  // n + 1 = 4
            ident_gap = std::max(ident_gap, rel_gap(lv, rhs));

            // scaling law: L(x, l1 xi_1, l2 xi_2) = (l1 l2)^{n+1} L(x, xi)
            double l1 = rng.uniform(0.4, 1.8), l2 = rng.uniform(0.4, 1.8);
            TangentFrame fs{fr.x, {l1 * fr.basis[0], l2 * fr.basis[1]}};
            double expect = std::pow(l1 * l2, 4) * lv;
            scale_gap = std::max(scale_gap, rel_gap(L_value(fs, B), expect));

            // general frame change scales by det(S)^{n+1}
            Mat S2 = random_invertible(rng, 2, 0.2);
            TangentFrame fc{fr.x,
                            {S2(0, 0) * fr.basis[0] + S2(0, 1) * fr.basis[1],
                             S2(1, 0) * fr.basis[0] + S2(1, 1) * fr.basis[1]}};
            change_gap = std::max(change_gap,
                                  rel_gap(L_value(fc, B), std::pow(det(S2), 4) * lv));
        }
    out.push_back(check_le("L symmetry: max relative asymmetry", sym_gap, 1e-10, 0.0));
    out.push_back(check_le("L = det(Xi, frame)^{n+1}: max relative gap", ident_gap, 1e-6, 0.0));
    out.push_back(check_le("L scaling law: max relative gap", scale_gap, 1e-10, 0.0));
    out.push_back(check_le("L frame change det^{n+1}: max relative gap", change_gap, 1e-9, 0.0));
    return out;
}

std::vector<CheckRecord> suite_classical_variation(std::uint64_t seed, int count,
                                                   const Resolution& res) {
    RandomSource rng(seed);
    std::vector<CheckRecord> out;
    double worst = 0;
    for (int dim : {2, 3})
        for (int i = 0; i < 10 * count; ++i) {
            Polytope K = random_polytope(rng, dim, rng.uniform_int(dim + 2, 10));
            Vec x = random_interior_point(rng, K, 0.5);
            Vec v = rng.unit_vector(dim);
            ConvexBody Kb = K;
            Vec g = classical_gradient(x, Kb, res);
            double h = 1e-5 * K.interior_margin(x);
            double fd = (classical_objective(x + h * v, Kb, res) -
                         classical_objective(x - h * v, Kb, res)) /
                        (2.0 * h);
            // d/dt |(K - x - t v)^polar| = (n+1) <c((K-x)^polar), v>
            worst = std::max(worst, std::abs(dot(g, v) - fd) / std::max(std::abs(fd), norm(g)));
        }
    out.push_back(check_le("classical derivative vs finite differences", worst, 1e-6, 0.0));

    Polytope tri = make_simplex_2d();
    Vec grid = classical_grid_minimum(tri);
    SolverOptions opts;
    opts.tol = 1e-12;
    SolveResult r = classical_santalo_point(ConvexBody(tri), opts, res);
    out.push_back(check_le("triangle classical Santalo point vs grid oracle",
                           dist(r.point, grid), 1e-4, 0.0));
    out.push_back(check_le("triangle classical Santalo point vs (1/3,1/3)",
                           dist(r.point, Vec(1.0 / 3.0, 1.0 / 3.0)), 1e-4, 0.0));
    return out;
}

double ht_area_translation_derivative(const Polytope& K, const ConvexBody& B, const Vec& v,
                                      const Resolution& res, double step) {
    auto at = [&](double t) { return ht_area_dual(K.translated(-t * v), B, res); };
    // five-point stencil: the truncation floor stays well under the
    // quadrature error of the centroid formula at every tested resolution
    return (at(-2 * step) - 8.0 * at(-step) + 8.0 * at(step) - at(2 * step)) / (12.0 * step);
}

std::vector<CheckRecord> suite_first_variation(std::uint64_t seed, const Resolution& res) {
    RandomSource rng(seed);
    std::vector<CheckRecord> out;

    struct Instance {
        std::string name;
        Polytope K;
        SmoothBody B;
    };
    std::vector<Instance> grid;
    Polytope sq = shifted_square();
    Polytope cu = shifted_cube();
    Polytope r2 = random_polytope(rng, 2, 7).translated(Vec(0.12, -0.2));
    Polytope r3 = random_polytope(rng, 3, 10).translated(Vec(-0.1, 0.08, 0.15));
    grid.push_back({"square/disc", sq, make_ball(2, 1.0)});
    grid.push_back({"square/ellipse(1,2)", sq, make_ellipsoid(Mat::diag(Vec(1.0, 2.0)))});
    grid.push_back({"square/perturbed2", sq, default_perturbed(2)});
    grid.push_back({"random2/disc", r2, make_ball(2, 1.0)});
    grid.push_back({"random2/ellipse(1,2)", r2, make_ellipsoid(Mat::diag(Vec(1.0, 2.0)))});
    grid.push_back({"random2/perturbed2", r2, default_perturbed(2)});
    grid.push_back({"cube/ball", cu, make_ball(3, 1.0)});
    grid.push_back({"cube/perturbed3", cu, default_perturbed(3)});
    grid.push_back({"random3/ball", r3, make_ball(3, 1.0)});
    grid.push_back({"random3/perturbed3", r3, default_perturbed(3)});

    for (const auto& inst : grid) {
        const int n = inst.K.dim;
        double factor = (n + 1.0) / unit_ball_volume(n - 1);
        // halve the resolution twice and refine back up to the default, so
        // the monotone-improvement sweep ends at the default resolution
        std::vector<double> errs;
        for (int level = 0; level < 3; ++level) {
            Resolution r = res;
            r.circle_nodes = std::max(64, res.circle_nodes >> (2 - level));
            r.sphere_level = std::max(1, res.sphere_level - (2 - level));
            Vec C = dual_centroid(ConvexBody(inst.K), inst.B, r);
            double worst = 0;
            for (int axis = 0; axis < n; ++axis) {
                for (double sign : {1.0, -1.0}) {
                    Vec v = Vec::axis(n, axis, sign);
                    double fd = ht_area_translation_derivative(inst.K, ConvexBody(inst.B), v, res);
                    double an = factor * dot(C, v);
                    worst = std::max(worst, std::abs(an - fd) / std::max(std::abs(fd), 1e-12));
                }
            }
            errs.push_back(worst);
        }
        out.push_back(check_le("first variation " + inst.name + " (default resolution)", errs[2],
                               1e-2, 0.0));
        out.push_back(check_le("first variation " + inst.name + " monotone refinement",
                               std::max(errs[1] / errs[0], errs[2] / errs[1]), 1.0, 0.0));
    }
    return out;
}

std::vector<CheckRecord> suite_nonuniqueness(const Resolution& res) {
    std::vector<CheckRecord> out;
    for (double eps0 : {0.2, 0.05}) {
        NonUniqueExample ex = nonunique_example(eps0);
        ConvexBody K = ex.K, B = ex.B;
        double lo = 1e300, hi = -1e300;
        for (int s = 0; s <= 10; ++s) {
            double t = s / 10.0;
            double v = objective(ex.segment_a + t * (ex.segment_b - ex.segment_a), K, B, res);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        std::string tag = " (eps0=" + std::to_string(eps0).substr(0, 4) + ")";
        out.push_back(check_le("objective flat along segment" + tag, hi - lo, 1e-10, 0.0));
        if (eps0 == 0.2)
            out.push_back(check_ge("flat segment length", dist(ex.segment_a, ex.segment_b), 0.4,
                                   1e-12));
        double worst_defect = 0;
        for (const auto& f : ex.B.facets) {
            double d = strcvx_defect(LinearHyperplane(f.normal), ex.segment_a, ex.segment_b, K, res);
            worst_defect = std::max(worst_defect, std::abs(d));
        }
        out.push_back(check_le("zero-defect certificate on B facet directions" + tag,
                               worst_defect, 1e-12, 0.0));
    }
    return out;
}

Vec classical_grid_minimum(const Polytope& K, int coarse, int refine_rounds) {
    ConvexBody Kb = K;
    Vec lo = K.vertices[0], hi = K.vertices[0];
    for (const auto& v : K.vertices)
        for (int i = 0; i < K.dim; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    Vec best = K.vertex_barycenter();
    double fbest = classical_objective(best, Kb);
    double mtol = 1e-7 * K.scale();
    for (int round = 0; round <= refine_rounds; ++round) {
        Vec c_lo = lo, c_hi = hi;
        if (round > 0) {
            double w = (hi[0] - lo[0]) * std::pow(0.12, round);
            for (int i = 0; i < K.dim; ++i) {
                c_lo[i] = best[i] - w;
                c_hi[i] = best[i] + w;
            }
        }
        if (K.dim == 2) {
            for (int a = 0; a <= coarse; ++a)
                for (int b = 0; b <= coarse; ++b) {
                    Vec x(c_lo[0] + (c_hi[0] - c_lo[0]) * a / coarse,
                          c_lo[1] + (c_hi[1] - c_lo[1]) * b / coarse);
                    if (K.interior_margin(x) <= mtol) continue;
                    double f = classical_objective(x, Kb);
                    if (f < fbest) {
                        fbest = f;
                        best = x;
                    }
                }
        } else {
            int g = std::max(coarse / 4, 16);
            for (int a = 0; a <= g; ++a)
                for (int b = 0; b <= g; ++b)
                    for (int c = 0; c <= g; ++c) {
                        Vec x(c_lo[0] + (c_hi[0] - c_lo[0]) * a / g,
                              c_lo[1] + (c_hi[1] - c_lo[1]) * b / g,
                              c_lo[2] + (c_hi[2] - c_lo[2]) * c / g);
                        if (K.interior_margin(x) <= mtol) continue;
                        double f = classical_objective(x, Kb);
                        if (f < fbest) {
                            fbest = f;
                            best = x;
                        }
                    }
        }
    }
    return best;
}

}  // namespace santalo
