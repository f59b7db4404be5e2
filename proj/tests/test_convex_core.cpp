#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "santalo/body.hpp"
#include "santalo/generators.hpp"
#include "santalo/sections.hpp"

using namespace santalo;

TEST_CASE("polar: square <-> cross-polytope") {
    Polytope sq = make_cube(2, 1.0);
    Polytope cr = polar(sq);
    REQUIRE(cr.vertices.size() == 4);
    for (const auto& v : cr.vertices) CHECK(std::abs(norm(v) - 1.0) < 1e-12);
    CHECK(volume(cr) == doctest::Approx(2.0).epsilon(1e-12));
    Polytope back = polar(cr);
    CHECK(volume(back) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("polar: involution on an asymmetric triangle") {
    Polytope T = convex_hull({Vec(2.0, 0.0), Vec(0.0, 2.0), Vec(-1.0, -1.0)});
    Polytope TT = polar(polar(T));
    REQUIRE(TT.vertices.size() == T.vertices.size());
    for (const auto& v : T.vertices) {
        double best = 1e300;
        for (const auto& w : TT.vertices) best = std::min(best, dist(v, w));
        CHECK(best < 1e-12);
    }
}

TEST_CASE("polar: cube -> octahedron") {
    Polytope oct = polar(make_cube(3, 1.0));
    REQUIRE(oct.vertices.size() == 6);
    REQUIRE(oct.facets.size() == 8);
    CHECK(volume(oct) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("polar: origin must be interior") {
    Polytope off = make_cube(2, 1.0).translated(Vec(3.0, 0.0));
    CHECK_THROWS_AS(polar(off), OriginNotInterior);
}

TEST_CASE("polar involution on random polytopes, vertexwise") {
    RandomSource rng(11);
    for (int dim : {2, 3})
        for (int i = 0; i < 10; ++i) {
            Polytope P = random_polytope(rng, dim, rng.uniform_int(dim + 3, 12));
            Polytope PP = polar(polar(P));
            REQUIRE(PP.vertices.size() == P.vertices.size());
            for (const auto& v : P.vertices) {
                double best = 1e300;
                for (const auto& w : PP.vertices) best = std::min(best, dist(v, w));
                CHECK(best < 1e-9);
            }
        }
}

TEST_CASE("support function") {
    ConvexBody sq = make_cube(2, 1.0);
    CHECK(support(sq, Vec(1.0, 1.0)) == doctest::Approx(2.0));
    ConvexBody ell = make_ellipsoid(Mat::diag(Vec(1.0, 4.0)));
    CHECK(support(ell, Vec(0.0, 1.0)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(support(sq, Vec(0.0, 0.0)), ZeroDirection);

    RandomSource rng(12);
    Polytope P = random_polytope(rng, 2, 9);
    for (int i = 0; i < 5; ++i) {
        Vec u = rng.unit_vector(2);
        double direct = P.support(u);
        double sampled = oracles::support_by_boundary_sampling(P, u, 20000, rng);
        CHECK(sampled <= direct + 1e-12);
        CHECK(direct - sampled < 2e-3 * P.scale());
    }
}

TEST_CASE("volume: frozen values and Monte-Carlo oracle") {
    CHECK(volume(make_cross_polytope(2)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(volume(make_cube(3)) == doctest::Approx(8.0).epsilon(1e-12));

    RandomSource rng(13);
    Polytope P = random_polytope(rng, 3, 12);
    double v = volume(P);
    MonteCarloEstimate mc = volume_monte_carlo(P, 999, 200000);
    CHECK(std::abs(v - mc.value) < 3.0 * mc.std_error);
}

TEST_CASE("volume: dimension-4 Monte-Carlo path") {
    Polytope cross4 = make_cross_polytope(4);
    REQUIRE(cross4.vertices.size() == 8);
    CHECK_THROWS_AS(volume(cross4), WrongDimension);
    MonteCarloEstimate mc = volume_monte_carlo(cross4, 7, 60000);
    CHECK(std::abs(mc.value - 2.0 / 3.0) < 3.0 * mc.std_error);  // 2^4 / 4!
}

TEST_CASE("centroid integral: symmetry, simplex moment, Monte-Carlo oracle") {
    Vec c = centroid_integral(make_cube(3, 1.0));
    CHECK(norm(c) < 1e-12);
    Vec t = centroid_integral(make_simplex_2d());
    CHECK(t[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(t[1] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

    RandomSource rng(14);
    Polytope P = random_polytope(rng, 2, 8).translated(Vec(0.2, -0.1));
    Vec m = centroid_integral(P);
    MomentMonteCarlo mc = moment_monte_carlo(P, 1000, 200000);
    for (int i = 0; i < 2; ++i) CHECK(std::abs(m[i] - mc.value[i]) < 3.0 * mc.std_error[i]);
}

TEST_CASE("projection onto hyperplanes") {
    Polytope cube = make_cube(3, 1.0);
    Polytope sq = project_onto_hyperplane(cube, LinearHyperplane(Vec(0.0, 0.0, 1.0)));
    CHECK(sq.dim == 2);
    CHECK(volume(sq) == doctest::Approx(4.0).epsilon(1e-12));

    Polytope cross = make_cross_polytope(2);
    Polytope seg = project_onto_hyperplane(cross, LinearHyperplane(Vec(1.0, 0.0)));
    CHECK(seg.dim == 1);
    CHECK(volume(seg) == doctest::Approx(2.0).epsilon(1e-12));

    // projection support equals support restricted to the hyperplane
    RandomSource rng(15);
    Polytope P = random_polytope(rng, 3, 10);
    LinearHyperplane H(rng.unit_vector(3));
    auto basis = hyperplane_basis(H);
    Polytope Q = project_onto_hyperplane(P, H);
    for (int i = 0; i < 10; ++i) {
        Vec d2 = rng.unit_vector(2);
        Vec d3 = d2[0] * basis[0] + d2[1] * basis[1];
        CHECK(Q.support(d2) == doctest::Approx(P.support(d3)).epsilon(1e-10));
    }
}

TEST_CASE("shadow_volume agrees with the projected hull") {
    RandomSource rng(16);
    for (int i = 0; i < 8; ++i) {
        Polytope P = random_polytope(rng, 3, 10);
        LinearHyperplane H(rng.unit_vector(3));
        CHECK(shadow_volume(P, H) ==
              doctest::Approx(volume(project_onto_hyperplane(P, H))).epsilon(1e-10));
    }
}

TEST_CASE("slice polar volume: frozen square values") {
    ConvexBody sq = make_cube(2, 1.0);
    LinearHyperplane xaxis(Vec(0.0, 1.0));  // the hyperplane {y = 0}
    CHECK(slice_polar_volume(sq, xaxis, Vec(0.0, 0.0)) == doctest::Approx(2.0).epsilon(1e-12));
    // slice through (1/2, 0) is [-3/2, 1/2]; its polar has length 1/a + 1/b = 8/3
    CHECK(slice_polar_volume(sq, xaxis, Vec(0.5, 0.0)) ==
          doctest::Approx(8.0 / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(slice_polar_volume(sq, xaxis, Vec(2.0, 0.0)), PointNotInterior);
}

TEST_CASE("slice polar volume: ray-clip and support-integral oracles (2D)") {
    RandomSource rng(17);
    for (int i = 0; i < 10; ++i) {
        Polytope K = random_polytope(rng, 2, rng.uniform_int(5, 11));
        LinearHyperplane H(rng.unit_vector(2));
        Vec x = random_interior_point(rng, K, 0.6);
        double lib = slice_polar_volume(K, H, x);
        CHECK(lib == doctest::Approx(oracles::slice_polar_length_by_ray_clip(K, H, x))
                         .epsilon(1e-10));
        // inf-projection route (the smooth-body formula, applied to a polytope)
        Vec e = hyperplane_basis(H)[0];
        double a = slice_support(K, H, x, e);
        double b = slice_support(K, H, x, -e);
        CHECK(lib == doctest::Approx(1.0 / a + 1.0 / b).epsilon(1e-6));
    }
}

TEST_CASE("surface area measure") {
    // two directions {x=y}, {x=-y}, each of weight 2*sqrt(2)
    SurfaceAreaMeasure mu = surface_area_measure(make_cross_polytope(2));
    REQUIRE(mu.atoms.size() == 2);
    for (const auto& a : mu.atoms) CHECK(a.weight == doctest::Approx(2.0 * std::sqrt(2.0)));

    SurfaceAreaMeasure msq = surface_area_measure(make_cube(2, 1.0));
    REQUIRE(msq.atoms.size() == 2);
    for (const auto& a : msq.atoms) CHECK(a.weight == doctest::Approx(4.0));

    SurfaceAreaMeasure mdisc = surface_area_measure(make_ball(2, 1.0));
    CHECK(mdisc.atomic == false);
    CHECK(mdisc.total_mass() == doctest::Approx(2.0 * kPi).epsilon(1e-10));

    // total mass equals the boundary measure for polytopes
    RandomSource rng(18);
    for (int dim : {2, 3}) {
        Polytope P = random_polytope(rng, dim, 9);
        double h = 0;
        for (const auto& f : P.facets) h += f.area;
        CHECK(surface_area_measure(P).total_mass() == doctest::Approx(h).epsilon(1e-12));
    }
}

TEST_CASE("polarity characterizes membership") {
    RandomSource rng(19);
    Polytope P = random_polytope(rng, 2, 8);
    ConvexBody Pp = polar(P);
    for (int i = 0; i < 200; ++i) {
        Vec v = 1.6 * rng.in_ball(2);
        if (norm(v) < 1e-12) continue;
        bool in_p = P.contains(v, 1e-12);
        CHECK(in_p == (support(Pp, v) <= 1.0 + 1e-9));
    }
}

TEST_CASE("volume and moment are affinely equivariant") {
    RandomSource rng(20);
    for (int dim : {2, 3})
        for (int i = 0; i < 6; ++i) {
            Polytope P = random_polytope(rng, dim, 9);
            Mat T = random_invertible(rng, dim);
            Polytope TP = P.linear_image(T);
            double dT = std::abs(det(T));
            CHECK(volume(TP) == doctest::Approx(dT * volume(P)).epsilon(1e-9));
            Vec lhs = centroid_integral(TP);
            Vec rhs = dT * (T * centroid_integral(P));
            CHECK(dist(lhs, rhs) < 1e-9 * (1.0 + norm(rhs)));
        }
}

TEST_CASE("hull prunes non-extreme points and validates") {
    std::vector<Vec> pts = {Vec(-1.0, -1.0), Vec(1.0, -1.0), Vec(1.0, 1.0), Vec(-1.0, 1.0),
                            Vec(0.0, 0.0),   Vec(0.5, 0.5),  Vec(1.0, 0.0)};
    Polytope P = convex_hull(pts);
    CHECK(P.vertices.size() == 4);
    validate(P);

    RandomSource rng(21);
    for (int dim : {2, 3}) {
        Polytope Q = random_polytope(rng, dim, 20);
        validate(Q);
        validate(polar(Q));
    }
}

TEST_CASE("body spec JSON round trip and rejection") {
    ConvexBody sq =
        parse_body_spec(R"({"type":"polytope","vertices":[[-1,-1],[1,-1],[1,1],[-1,1]]})");
    CHECK(is_polytope(sq));
    ConvexBody sq2 = parse_body_spec(body_spec_json(sq));
    CHECK(volume(as_polytope(sq2)) == doctest::Approx(4.0));

    ConvexBody ell = parse_body_spec(R"({"type":"ellipsoid","Q":[[1,0],[0,2]]})");
    ConvexBody ell2 = parse_body_spec(body_spec_json(ell));
    CHECK(support(ell2, Vec(0.0, 1.0)) == doctest::Approx(support(ell, Vec(0.0, 1.0))));

    CHECK_THROWS_AS(parse_body_spec("not json at all"), SpecError);
    CHECK_THROWS_AS(parse_body_spec(R"({"type":"frisbee"})"), SpecError);
    CHECK_THROWS_AS(parse_body_spec(R"({"type":"polytope","vertices":[[0,0],[1,0]]})"),
                    DegenerateBody);
    CHECK_THROWS_AS(parse_body_spec(R"({"type":"ellipsoid","Q":[[1,0],[0,0]]})"), SpecError);
}

TEST_CASE("smooth body oracles are 1-homogeneous with positive curvature") {
    RandomSource rng(22);
    for (int dim : {2, 3}) {
        SmoothBody B = random_smooth_body(rng, dim);
        for (int i = 0; i < 20; ++i) {
            Vec u = rng.unit_vector(dim);
            double lam = rng.uniform(0.2, 3.0);
            CHECK(B.support(lam * u) == doctest::Approx(lam * B.support(u)).epsilon(1e-12));
            CHECK(B.support(u) > 0);
            CHECK(min_eigenvalue_sym(B.tangential_hessian(u)) > 1e-8);
            CHECK(dot(u, B.support_grad(u)) == doctest::Approx(B.support(u)).epsilon(1e-12));
        }
    }
}
