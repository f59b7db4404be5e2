#pragma once

// Test-side oracles, independent of the library paths they check.

#include <functional>

#include "santalo/equiaffine.hpp"
#include "santalo/ht_measure.hpp"
#include "santalo/rng.hpp"

namespace oracles {

using namespace santalo;

// support via dense boundary sampling: ray-clip from an interior point in
// many directions and take the max inner product
inline double support_by_boundary_sampling(const Polytope& P, const Vec& u, int samples,
                                           RandomSource& rng) {
    Vec c = P.vertex_barycenter();
    double best = -1e300;
    for (int s = 0; s < samples; ++s) {
        Vec d = rng.unit_vector(P.dim);
        double t = 1e300;
        for (const auto& f : P.facets) {
            double dn = dot(f.normal, d);
            if (dn > 1e-14) t = std::min(t, (f.offset - dot(f.normal, c)) / dn);
        }
        best = std::max(best, dot(u, c + t * d));
    }
    return best;
}

// 2D slice polar length, computed directly: clip the line through x along
// the direction spanning H against the H-representation; the polar of the
// segment [-b, a] has length 1/a + 1/b
inline double slice_polar_length_by_ray_clip(const Polytope& K, const LinearHyperplane& H,
                                             const Vec& x) {
    Vec e = hyperplane_basis(H)[0];
    auto clip = [&](const Vec& d) {
        double t = 1e300;
        for (const auto& f : K.facets) {
            double dn = dot(f.normal, d);
            if (dn > 1e-14) t = std::min(t, (f.offset - dot(f.normal, x)) / dn);
        }
        return t;
    };
    return 1.0 / clip(e) + 1.0 / clip(-e);
}

// central finite difference of a scalar function along v
inline double central_diff(const std::function<double(double)>& f, double h) {
    return (f(h) - f(-h)) / (2.0 * h);
}

// Euclidean average of centroids of orthogonal projections of K^polar:
// explicit orthogonal projections, no equiaffine machinery involved
inline Vec euclidean_projection_centroid(const Polytope& K, int resolution) {
    Polytope Kp = polar(K);
    const int n = K.dim;
    Vec out(n);
    if (n == 2) {
        for (int k = 0; k < resolution; ++k) {
            double t = 2.0 * kPi * k / resolution;
            Vec x(std::cos(t), std::sin(t));
            Vec e = rot90(x);
            double lo = 1e300, hi = -1e300;
            for (const auto& w : Kp.vertices) {
                double s = dot(w, e);
                lo = std::min(lo, s);
                hi = std::max(hi, s);
            }
            out += (2.0 * kPi / resolution) * (0.5 * (hi * hi - lo * lo)) * e;
        }
        return out;
    }
    SphereRule rule = icosphere_rule(5);
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
        const Vec& x = rule.nodes[k];
        auto basis = orthonormal_complement(x);
        std::vector<Vec> pts;
        for (const auto& w : Kp.vertices) {
            Vec q = w - dot(w, x) * x;
            pts.push_back(Vec(dot(q, basis[0]), dot(q, basis[1])));
        }
        Vec m2 = centroid_integral(convex_hull(pts));
        out += rule.weights[k] * (m2[0] * basis[0] + m2[1] * basis[1]);
    }
    return out;
}

}  // namespace oracles
