#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "santalo/equiaffine.hpp"
#include "santalo/experiments.hpp"
#include "santalo/generators.hpp"

using namespace santalo;

TEST_CASE("Blaschke normal on round bodies") {
    RandomSource rng(41);
    // unit spheres: Xi(x) = -x
    for (const SmoothBody& B : {make_ball(2, 1.0), make_ball(3, 1.0)})
        for (int i = 0; i < 10; ++i) {
            EquiaffineData ed = blaschke_normal(B, rng.unit_vector(B.dim));
            CHECK(dist(ed.xi, -1.0 * ed.x) < 1e-10);
            CHECK(ed.alpha_density == doctest::Approx(1.0).epsilon(1e-10));
        }
    // radius-2 circle: conditions force Xi = -2^{-4/3} x
    SmoothBody c2 = make_ball(2, 2.0);
    double c = std::pow(2.0, -4.0 / 3.0);
    for (int i = 0; i < 10; ++i) {
        EquiaffineData ed = blaschke_normal(c2, rng.unit_vector(2));
        CHECK(dist(ed.xi, -c * ed.x) < 1e-8);
    }
}

TEST_CASE("equiaffine conditions hold on smooth bodies") {
    RandomSource rng(42);
    std::vector<SmoothBody> bodies = {
        make_ball(3, 1.0), make_ball(2, 2.0), make_ellipsoid(Mat::diag(Vec(1.0, 2.0))),
        make_ellipsoid(Mat::diag(Vec(0.6, 1.4, 2.2))),
        make_perturbed_ball(2, 0.1, [] { Mat S(2); S(0,0)=0.3; S(0,1)=S(1,0)=0.1; S(1,1)=-0.2; return S; }(), 0.2)};
    for (const auto& B : bodies)
        for (int i = 0; i < 15; ++i) {
            EquiaffineResiduals r = equiaffine_residuals(B, rng.unit_vector(B.dim));
            CHECK(r.tangency < 1e-6);
            CHECK(r.metric < 1e-6);
            CHECK(r.g_min_eig > 0);
        }
}

TEST_CASE("centered ellipsoids are affine spheres") {
    RandomSource rng(43);
    for (const SmoothBody& E : {make_ellipsoid(Mat::diag(Vec(1.0, 2.0))),
                                make_ellipsoid(Mat::diag(Vec(0.7, 1.1, 2.3)))})
        for (int i = 0; i < 20; ++i) {
            EquiaffineData ed = blaschke_normal(E, rng.unit_vector(E.dim));
            Vec xhat = normalized(ed.x);
            CHECK(norm(ed.xi - dot(ed.xi, xhat) * xhat) / norm(ed.xi) < 1e-6);
        }
}

TEST_CASE("L on the unit sphere with an oriented orthonormal frame") {
    RandomSource rng(44);
    SmoothBody ball = make_ball(3, 1.0);
    for (int i = 0; i < 10; ++i) {
        Vec u = rng.unit_vector(3);
        TangentFrame fr{ball.support_grad(u), oriented_tangent_frame(u)};
        Mat L = L_matrix(fr, ball);
        CHECK(L(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(L(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(L(0, 1)) < 1e-12);
        CHECK(L_value(fr, ball) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("L identities: symmetry, scaling, frame change, det power") {
    RandomSource rng(45);
    SmoothBody E = make_ellipsoid(Mat::diag(Vec(0.8, 1.5, 2.0)));
    for (int i = 0; i < 15; ++i) {
        Vec u = rng.unit_vector(3);
        auto onb = oriented_tangent_frame(u);
        Mat Cmb = random_invertible(rng, 2, 0.2);
        TangentFrame fr{E.support_grad(u),
                        {Cmb(0, 0) * onb[0] + Cmb(0, 1) * onb[1],
                         Cmb(1, 0) * onb[0] + Cmb(1, 1) * onb[1]}};
        Mat L = L_matrix(fr, E);
        CHECK(L(0, 1) == doctest::Approx(L(1, 0)).epsilon(1e-10));

        double lv = det(L);
        EquiaffineData ed = blaschke_normal(E, u);
        Vec cols[3] = {ed.xi, fr.basis[0], fr.basis[1]};
        CHECK(lv == doctest::Approx(std::pow(det_cols(cols, 3), 4)).epsilon(1e-6));

        double l1 = rng.uniform(0.5, 1.7), l2 = rng.uniform(0.5, 1.7);
        TangentFrame fs{fr.x, {l1 * fr.basis[0], l2 * fr.basis[1]}};
        CHECK(L_value(fs, E) == doctest::Approx(std::pow(l1 * l2, 4) * lv).epsilon(1e-10));

        Mat S = random_invertible(rng, 2, 0.2);
        TangentFrame fc{fr.x,
                        {S(0, 0) * fr.basis[0] + S(0, 1) * fr.basis[1],
                         S(1, 0) * fr.basis[0] + S(1, 1) * fr.basis[1]}};
        CHECK(L_value(fc, E) == doctest::Approx(std::pow(det(S), 4) * lv).epsilon(1e-9));
    }
}

TEST_CASE("tangent frames are validated against the boundary") {
    SmoothBody ball = make_ball(3, 1.0);
    Vec u = normalized(Vec(0.3, -0.8, 0.5));
    TangentFrame good{ball.support_grad(u), oriented_tangent_frame(u)};
    CHECK_NOTHROW(L_matrix(good, ball));
    TangentFrame off{2.0 * ball.support_grad(u), oriented_tangent_frame(u)};
    CHECK_THROWS_AS(L_matrix(off, ball), SpecError);
}

TEST_CASE("dual centroid: symmetry and the Euclidean specialization") {
    Resolution res;
    // centrally symmetric K with B a ball
    Vec c2 = dual_centroid(ConvexBody(make_cube(2, 1.0)), make_ball(2, 1.0), res);
    CHECK(norm(c2) < 1e-10);
    Vec c3 = dual_centroid(ConvexBody(make_cube(3, 1.0)), make_ball(3, 1.0), res);
    CHECK(norm(c3) < 1e-10);

    // B = unit ball reduces to the average of centroids of orthogonal
    // projections of the polar body
    RandomSource rng(46);
    for (int dim : {2, 3}) {
        Polytope K = random_polytope(rng, dim, dim + 4).translated(
            dim == 2 ? Vec(0.15, -0.1) : Vec(0.1, -0.05, 0.08));
        Vec lib = dual_centroid(ConvexBody(K), make_ball(dim, 1.0), res);
        Vec orc = oracles::euclidean_projection_centroid(K, 65536);
        CHECK(dist(lib, orc) / norm(orc) < (dim == 2 ? 1e-6 : 1e-3));
    }

    CHECK_THROWS_AS(
        dual_centroid(ConvexBody(make_ellipsoid(Mat::identity(2))), make_ball(2, 1.0), res),
        SpecError);
}

TEST_CASE("dual centroid does not depend on the surface density") {
    Resolution res;
    Polytope K = make_cube(2, 1.0).translated(Vec(-0.3, -0.1));
    SmoothBody B = make_ellipsoid(Mat::diag(Vec(1.0, 2.0)));
    Vec base = dual_centroid(ConvexBody(K), B, res);
    std::function<double(const Vec&)> rho = [](const Vec& x) {
        return 1.0 + 0.5 * std::sin(x[0]) * std::cos(2.0 * x[1]);
    };
    Vec scaled = dual_centroid(ConvexBody(K), B, res, &rho);
    CHECK(dist(base, scaled) / norm(base) < 1e-6);
}

TEST_CASE("first variation formula against finite differences") {
    Resolution res;
    Polytope K = make_cube(2, 1.0).translated(Vec(-0.3, -0.1));
    SmoothBody B = make_ball(2, 1.0);
    Vec C = dual_centroid(ConvexBody(K), B, res);
    double factor = 3.0 / unit_ball_volume(1);
    for (int axis = 0; axis < 2; ++axis) {
        Vec v = Vec::axis(2, axis);
        double fd = ht_area_translation_derivative(K, ConvexBody(B), v, res);
        CHECK(factor * dot(C, v) == doctest::Approx(fd).epsilon(1e-2));
    }
}
