#pragma once

#include <optional>
#include <vector>

#include "santalo/errors.hpp"
#include "santalo/hyperplane.hpp"
#include "santalo/smallvec.hpp"

namespace santalo {

struct Facet {
    Vec normal;                    // unit outer normal u
    double offset = 0;             // facet lies on {y : <u,y> = offset}
    double area = 0;               // (n-1)-Hausdorff measure
    std::vector<int> vertex_ids;   // boundary cycle, CCW as seen from outside (3D)
};

// Convex polytope in dimension 1..4 carrying both representations.
// Dimensions 1-3 have the full exact pipeline (hull, polar, volume,
// centroid, projections); dimension 4 is V-representation only and supports
// Monte-Carlo volume/moment.
struct Polytope {
    int dim = 0;
    std::vector<Vec> vertices;
    std::vector<Facet> facets;

    double support(const Vec& u) const;
    bool contains(const Vec& x, double slack = 0.0) const;
    // min over facets of (offset - <u,x>); positive iff x is interior
    double interior_margin(const Vec& x) const;
    Vec vertex_barycenter() const;
    double diameter() const;
    double scale() const;  // max vertex norm; used to scale tolerances

    Polytope translated(const Vec& t) const;
    Polytope linear_image(const Mat& M) const;
};

// Convex hull of a point cloud (dim 2 or 3 exact; dim 1 trivial; dim 4
// keeps extreme points only, no facets).
Polytope convex_hull(const std::vector<Vec>& points);

// Polar body {y : <v,y> <= 1 for all vertices v}. Requires 0 interior.
// Output vertices are in bijection with input facets and vice versa.
Polytope polar(const Polytope& P);

// Lebesgue volume, exact via facet cones (dim 1-3).
double volume(const Polytope& P);

// Unnormalized first moment  integral of x over P  (volume times barycenter).
Vec centroid_integral(const Polytope& P);

struct MonteCarloEstimate {
    double value = 0;
    double std_error = 0;
};

// Hit-or-miss estimate against the bounding box; the only volume path
// available in dimension 4.
MonteCarloEstimate volume_monte_carlo(const Polytope& P, std::uint64_t seed,
                                      int samples = 200000);
struct MomentMonteCarlo {
    Vec value;
    Vec std_error;
};
MomentMonteCarlo moment_monte_carlo(const Polytope& P, std::uint64_t seed,
                                    int samples = 200000);

// Orthogonal projection onto the hyperplane H, returned in the coordinates
// of hyperplane_basis(H). Result has dimension n-1.
Polytope project_onto_hyperplane(const Polytope& P, const LinearHyperplane& H);

// |pi_H(P)|_{n-1} without building the projection: Cauchy projection
// formula in 3D, support width in 2D.
double shadow_volume(const Polytope& P, const LinearHyperplane& H);

// convenience builders
Polytope make_box(const Vec& lo, const Vec& hi);
Polytope make_cube(int dim, double halfwidth = 1.0);
Polytope make_cross_polytope(int dim, double radius = 1.0);
Polytope make_simplex_2d();  // conv{(0,0),(1,0),(0,1)}
Polytope make_regular_polygon(int sides, double radius = 1.0);

// Is x in conv(points)? Solved as a small LP (two-phase simplex); used for
// dimension-4 membership where no H-representation exists.
bool point_in_hull_lp(const std::vector<Vec>& points, const Vec& x, double tol = 1e-9);

// Validity checks backing the type invariants; throws on violation.
void validate(const Polytope& P);

}  // namespace santalo
