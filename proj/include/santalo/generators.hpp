#pragma once

#include "santalo/body.hpp"
#include "santalo/rng.hpp"

namespace santalo {

// hull of `points` samples in the unit ball, recentred at the vertex
// barycenter so the origin is interior
Polytope random_polytope(RandomSource& rng, int dim, int points);

// interior point: barycenter pushed a fraction of the way toward a random
// convex combination of vertices (margin stays bounded below)
Vec random_interior_point(RandomSource& rng, const Polytope& P, double fraction);

Mat random_invertible(RandomSource& rng, int dim, double min_abs_det = 0.25);
Mat random_spd(RandomSource& rng, int dim, double eig_lo = 0.5, double eig_hi = 2.0);

// random ellipsoid or gently perturbed ball
SmoothBody random_smooth_body(RandomSource& rng, int dim);

}  // namespace santalo
