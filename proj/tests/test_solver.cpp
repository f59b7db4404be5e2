#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "santalo/experiments.hpp"
#include "santalo/generators.hpp"
#include "santalo/solver.hpp"

using namespace santalo;

TEST_CASE("objective values and symmetry") {
    ConvexBody sq = make_cube(2, 1.0);
    CHECK(objective(Vec(0.0, 0.0), sq, sq) == doctest::Approx(8.0).epsilon(1e-12));
    ConvexBody disc = make_ball(2, 1.0);
    CHECK(objective(Vec(0.0, 0.0), disc, disc) == doctest::Approx(2.0 * kPi).epsilon(1e-6));
    CHECK_THROWS_AS(objective(Vec(1.5, 0.0), sq, sq), PointNotInterior);

    RandomSource rng(51);
    for (int i = 0; i < 20; ++i) {
        Vec x = 0.6 * rng.in_ball(2);
        CHECK(objective(x, sq, sq) == doctest::Approx(objective(-x, sq, sq)).epsilon(1e-12));
    }
}

TEST_CASE("classical objective and gradient") {
    ConvexBody sq = make_cube(2, 1.0);
    CHECK(classical_objective(Vec(0.0, 0.0), sq) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(norm(classical_gradient(Vec(0.0, 0.0), sq)) < 1e-12);

    ConvexBody tri = make_simplex_2d();
    RandomSource rng(52);
    for (int i = 0; i < 10; ++i) {
        Vec x = Vec(1.0 / 3.0, 1.0 / 3.0) + 0.15 * rng.in_ball(2);
        Vec g = classical_gradient(x, tri);
        for (int axis = 0; axis < 2; ++axis) {
            Vec e = Vec::axis(2, axis);
            double fd = oracles::central_diff(
                [&](double t) { return classical_objective(x + t * e, tri); }, 1e-6);
            CHECK(std::abs(g[axis] - fd) / std::max(std::abs(fd), norm(g)) < 1e-6);
        }
    }

    // smooth-body route matches its own finite differences
    ConvexBody ell = make_ellipsoid(Mat::diag(Vec(1.0, 2.0)));
    Vec x(0.12, -0.2);
    Vec g = classical_gradient(x, ell);
    for (int axis = 0; axis < 2; ++axis) {
        Vec e = Vec::axis(2, axis);
        double fd = oracles::central_diff(
            [&](double t) { return classical_objective(x + t * e, ell); }, 1e-6);
        CHECK(g[axis] == doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("classical Santalo point of the unit right triangle") {
    Polytope tri = make_simplex_2d();
    SolverOptions opts;
    opts.tol = 1e-12;
    SolveResult r = classical_santalo_point(ConvexBody(tri), opts);
    CHECK(r.status == SolveStatus::Converged);
    CHECK(dist(r.point, Vec(1.0 / 3.0, 1.0 / 3.0)) < 1e-4);
    Vec grid = classical_grid_minimum(tri);
    CHECK(dist(r.point, grid) < 1e-4);
    // at the minimizer the polar moment vanishes
    CHECK(norm(classical_gradient(r.point, ConvexBody(tri))) < 1e-8);
}

TEST_CASE("ht gradient: formula vs finite differences, descent direction") {
    Resolution res;
    Polytope K = make_cube(2, 1.0).translated(Vec(-0.3, -0.1));
    ConvexBody Kb = K;
    ConvexBody B = make_ball(2, 1.0);
    Vec x(0.05, 0.1);
    Vec g = gradient(x, Kb, B, res);
    for (int axis = 0; axis < 2; ++axis) {
        Vec e = Vec::axis(2, axis);
        double fd = oracles::central_diff(
            [&](double t) { return objective(x + t * e, Kb, B, res); }, 1e-4);
        CHECK(std::abs(g[axis] - fd) / std::max(std::abs(fd), norm(g)) < 1e-2);
    }
    // symmetric case: zero gradient
    CHECK(norm(gradient(Vec(0.0, 0.0), make_cube(2, 1.0), B, res)) < 1e-9);

    // a small gradient step decreases the objective
    RandomSource rng(53);
    for (int i = 0; i < 5; ++i) {
        Vec y = random_interior_point(rng, K, 0.5);
        Vec gy = gradient(y, Kb, B, res);
        double f0 = objective(y, Kb, B, res);
        double f1 = objective(y - (0.02 / norm(gy)) * gy, Kb, B, res);
        CHECK(f1 < f0);
    }
}

TEST_CASE("santalo_point: symmetric bodies give the center") {
    SolverOptions opts;
    opts.tol = 1e-9;
    // polytope norm: Nelder-Mead path
    Polytope sq = make_cube(2, 1.0).translated(Vec(0.4, -0.3));
    SolveResult r = santalo_point(ConvexBody(sq), ConvexBody(make_cube(2, 1.0)), opts);
    CHECK(r.status == SolveStatus::Converged);
    CHECK(dist(r.point, Vec(0.4, -0.3)) < 1e-7);
    CHECK(sq.interior_margin(r.point) > 0);
    // reported value is reproducible from the objective
    CHECK(r.value ==
          doctest::Approx(objective(r.point, ConvexBody(sq), ConvexBody(make_cube(2, 1.0))))
              .epsilon(1e-10));

    // smooth norm: gradient descent path
    SolveResult rs = santalo_point(ConvexBody(sq), ConvexBody(make_ball(2, 1.0)), opts);
    CHECK(rs.status == SolveStatus::Converged);
    CHECK(dist(rs.point, Vec(0.4, -0.3)) < 1e-6);
    // minimizer certificate: the dual centroid of the recentred body vanishes
    Vec cb = dual_centroid(ConvexBody(sq.translated(-1.0 * rs.point)), make_ball(2, 1.0));
    CHECK(norm(cb) < 1e-6);
}

TEST_CASE("santalo_point: asymmetric 3D body with a smooth norm") {
    // the analytic gradient is quadrature-limited in 3D; the solver must
    // still certify convergence through the simplex fallback
    RandomSource rng(58);
    Polytope K = random_polytope(rng, 3, 6);
    SolverOptions opts;
    opts.tol = 1e-5;
    Resolution res;
    res.sphere_level = 3;
    SolveResult r = santalo_point(ConvexBody(K), ConvexBody(make_ball(3, 1.0)), opts, res);
    CHECK(r.status == SolveStatus::Converged);
    CHECK(r.gradient_norm <= opts.tol);
    CHECK(K.interior_margin(r.point) > 0);
    // no interior direction improves the returned value
    double f0 = objective(r.point, ConvexBody(K), ConvexBody(make_ball(3, 1.0)), res);
    for (int ax = 0; ax < 3; ++ax)
        for (double s : {-1e-3, 1e-3})
            CHECK(objective(r.point + Vec::axis(3, ax, s), ConvexBody(K),
                            ConvexBody(make_ball(3, 1.0)), res) >= f0 - 1e-12);
}

TEST_CASE("santalo_point: affine equivariance spot check") {
    SolverOptions opts;
    opts.tol = 1e-10;
    RandomSource rng(54);
    Polytope B0 = random_polytope(rng, 2, 7);
    SolveResult base = santalo_point(ConvexBody(B0), ConvexBody(B0), opts);
    Mat T = random_invertible(rng, 2);
    Vec shift(0.3, -0.7);
    Polytope TB = B0.linear_image(T).translated(shift);
    SolveResult moved = santalo_point(ConvexBody(TB), ConvexBody(TB), opts);
    CHECK(dist(moved.point, T * base.point + shift) < 1e-6 * TB.diameter());
}

TEST_CASE("strict convexity defect probes") {
    ConvexBody sq = make_cube(2, 1.0);
    Vec x1(0.0, -0.3), x2(0.0, 0.3);
    // slice along the x-axis is [-1,1] regardless of vertical shifts
    CHECK(std::abs(strcvx_defect(LinearHyperplane(Vec(0.0, 1.0)), x1, x2, sq)) < 1e-14);
    // the y-axis slice sees the shift
    CHECK(strcvx_defect(LinearHyperplane(Vec(1.0, 0.0)), x1, x2, sq) > 1e-3);

    RandomSource rng(55);
    for (int i = 0; i < 50; ++i) {
        int dim = (i % 2) ? 3 : 2;
        Polytope K = random_polytope(rng, dim, rng.uniform_int(dim + 2, 10));
        Vec a = random_interior_point(rng, K, 0.5);
        Vec b = random_interior_point(rng, K, 0.5);
        CHECK(strcvx_defect(LinearHyperplane(rng.unit_vector(dim)), a, b, ConvexBody(K)) >=
              -1e-12);
    }
}

TEST_CASE("non-uniqueness construction") {
    NonUniqueExample ex = nonunique_example();
    ConvexBody K = ex.K, B = ex.B;
    CHECK(dist(ex.segment_a, ex.segment_b) == doctest::Approx(0.4));

    double lo = 1e300, hi = -1e300;
    for (int s = 0; s <= 10; ++s) {
        double v = objective(ex.segment_a + (s / 10.0) * (ex.segment_b - ex.segment_a), K, B);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi - lo < 1e-10);
    for (const auto& f : ex.B.facets)
        CHECK(std::abs(strcvx_defect(LinearHyperplane(f.normal), ex.segment_a, ex.segment_b, K)) <
              1e-12);

    // the solver reports the flat valley rather than a fake unique point
    SolverOptions opts;
    opts.tol = 1e-9;
    SolveResult r = santalo_point(K, B, opts);
    CHECK(r.status == SolveStatus::FlatRegion);
    REQUIRE(r.flat_segment.has_value());
    CHECK(dist(r.flat_segment->first, r.flat_segment->second) >= 1e-3 * ex.K.diameter());
    // flat valley runs along the y-axis
    CHECK(std::abs(r.flat_segment->first[0] - r.flat_segment->second[0]) < 1e-6);
    // tie-break: reported point is the segment midpoint
    CHECK(dist(r.point, 0.5 * (r.flat_segment->first + r.flat_segment->second)) < 1e-12);

    NonUniqueExample small = nonunique_example(0.05);
    double v0 = objective(small.segment_a, K, B);
    double v1 = objective(small.segment_b, K, B);
    double vm = objective(0.5 * (small.segment_a + small.segment_b), K, B);
    CHECK(std::abs(v0 - v1) < 1e-12);
    CHECK(std::abs(v0 - vm) < 1e-12);
}

TEST_CASE("properness probes") {
    ConvexBody sq = make_cube(2, 1.0);
    auto cls = properness_probe(sq, nullptr, Vec(1.0, 0.0));
    REQUIRE(cls.size() == 4);
    for (size_t i = 1; i < cls.size(); ++i) CHECK(cls[i].value > cls[i - 1].value);
    CHECK(cls.back().value > 10.0 * cls.front().value);

    auto ht = properness_probe(sq, &sq, normalized(Vec(1.0, 1.0)));
    for (size_t i = 1; i < ht.size(); ++i) CHECK(ht[i].value > ht[i - 1].value);
    CHECK(ht.back().value > 10.0 * ht.front().value);

    double prev = 0;
    for (double k : {10.0, 100.0, 1000.0}) {
        double v = volume(polar(make_cube(2, 1.0).translated(Vec(-(1.0 - 1.0 / k), 0.0))));
        CHECK(v > prev);
        prev = v;
    }
    CHECK(prev > 1000.0);
}

TEST_CASE("objective midpoint convexity on random instances") {
    Resolution res;
    RandomSource rng(56);
    for (int i = 0; i < 60; ++i) {
        int dim = (i % 2) ? 3 : 2;
        Polytope K = random_polytope(rng, dim, rng.uniform_int(dim + 2, 9));
        ConvexBody B = (i % 5 == 2) ? ConvexBody(random_smooth_body(rng, dim))
                                    : ConvexBody(random_polytope(rng, dim, rng.uniform_int(dim + 2, 9)));
        Vec x1 = random_interior_point(rng, K, 0.55);
        Vec x2 = random_interior_point(rng, K, 0.55);
        ConvexBody Kb = K;
        double d = objective(x1, Kb, B, res) + objective(x2, Kb, B, res) -
                   2.0 * objective(0.5 * (x1 + x2), Kb, B, res);
        CHECK(d >= -1e-10);
    }
}
