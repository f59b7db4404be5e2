#include "santalo/generators.hpp"

namespace santalo {

Polytope random_polytope(RandomSource& rng, int dim, int points) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<Vec> pts;
        pts.reserve(points);
        for (int i = 0; i < points; ++i) pts.push_back(rng.in_ball(dim));
        try {
            Polytope P = convex_hull(pts);
            P = P.translated(-P.vertex_barycenter());
            if (P.interior_margin(Vec::zero(dim)) > 0.05) return P;
        } catch (const DegenerateBody&) {
        }
    }
    throw DegenerateBody("random_polytope: could not draw a well-conditioned body");
}

Vec random_interior_point(RandomSource& rng, const Polytope& P, double fraction) {
    Vec b = P.vertex_barycenter();
    // random convex combination of vertices
    Vec y(P.dim);
    double wsum = 0;
    for (const auto& v : P.vertices) {
        double w = rng.uniform();
        y += w * v;
        wsum += w;
    }
    y = y / wsum;
    return b + fraction * (y - b);
}

Mat random_invertible(RandomSource& rng, int dim, double min_abs_det) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Mat M(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) M(i, j) = rng.uniform(-1.0, 1.0);
        if (std::abs(det(M)) >= min_abs_det) return M;
    }
    return Mat::identity(dim);
}

Mat random_spd(RandomSource& rng, int dim, double eig_lo, double eig_hi) {
    // random rotation times diagonal: Q = R D R^T via Gram-Schmidt of a
    // random matrix
    Mat R(dim);
    for (int j = 0; j < dim; ++j) {
        Vec v = rng.unit_vector(dim);
        for (int k = 0; k < j; ++k) {
            Vec rk = R.col(k);
            v -= dot(v, rk) * rk;
        }
        v = normalized(v);
        for (int i = 0; i < dim; ++i) R(i, j) = v[i];
    }
    Vec d(dim);
    for (int i = 0; i < dim; ++i) d[i] = rng.uniform(eig_lo, eig_hi);
    return R * Mat::diag(d) * R.transposed();
}

SmoothBody random_smooth_body(RandomSource& rng, int dim) {
    if (rng.uniform() < 0.5) return make_ellipsoid(random_spd(rng, dim));
    for (int attempt = 0; attempt < 20; ++attempt) {
        Mat S(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = i; j < dim; ++j) S(i, j) = S(j, i) = rng.uniform(-0.25, 0.25);
        double q = rng.uniform(0.0, 0.2);
        try {
            return make_perturbed_ball(dim, 0.1, S, q);
        } catch (const GeometryError&) {
        }
    }
    return make_ball(dim, 1.0);
}

}  // namespace santalo
