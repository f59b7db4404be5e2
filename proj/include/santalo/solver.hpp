#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "santalo/equiaffine.hpp"
#include "santalo/ht_measure.hpp"

namespace santalo {

enum class SolveStatus { Converged, MaxIter, FlatRegion };

struct SolveResult {
    Vec point;
    double value = 0;
    // convergence measure: gradient norm when the descent path finishes,
    // final simplex diameter when Nelder-Mead does (polytopal norms, or the
    // fallback after a quadrature-limited gradient stall)
    double gradient_norm = 0;
    int iterations = 0;
    SolveStatus status = SolveStatus::MaxIter;
    std::vector<std::pair<Vec, double>> trace;
    std::optional<std::pair<Vec, Vec>> flat_segment;
};

// A_{K-x}(boundary of B), the Holmes-Thompson area of the boundary of
// (K-x)^polar in the B^polar norm
double objective(const Vec& x, const ConvexBody& K, const ConvexBody& B,
                 const Resolution& res = {});

// |(K-x)^polar| and its translation derivative (n+1) c((K-x)^polar)
double classical_objective(const Vec& x, const ConvexBody& K, const Resolution& res = {});
Vec classical_gradient(const Vec& x, const ConvexBody& K, const Resolution& res = {});

// gradient of objective(., K, B): the dual-centroid formula
// ((n+1)/eps_{n-1}) C_B((K-x)*) when B is smooth and K a polytope, central
// finite differences otherwise
Vec gradient(const Vec& x, const ConvexBody& K, const ConvexBody& B, const Resolution& res = {});

struct SolverOptions {
    double tol = 1e-8;
    int max_iterations = 400;
    bool keep_trace = false;
    // flat valley detection: value variation below flat_value_tol across a
    // segment of length >= flat_length_fraction * diam K
    double flat_value_tol = 1e-12;
    double flat_length_fraction = 1e-3;
};

SolveResult santalo_point(const ConvexBody& K, const ConvexBody& B, const SolverOptions& opts = {},
                          const Resolution& res = {});
SolveResult classical_santalo_point(const ConvexBody& K, const SolverOptions& opts = {},
                                    const Resolution& res = {});

// midpoint convexity defect f_K(H,x1) + f_K(H,x2) - 2 f_K(H,(x1+x2)/2)
double strcvx_defect(const LinearHyperplane& H, const Vec& x1, const Vec& x2, const ConvexBody& K,
                     const Resolution& res = {});

// Planar instance where the Holmes-Thompson objective is convex but not
// strictly convex: K the standard square with the cylindrical pair
// (0,-eps0), (0,eps0), and B a parallelogram both of whose facet directions
// have zero midpoint defect for that pair. The objective is constant on the
// returned segment.
struct NonUniqueExample {
    Polytope K;
    Polytope B;
    Vec segment_a;
    Vec segment_b;
};
NonUniqueExample nonunique_example(double eps0 = 0.2);

struct PropernessSample {
    double boundary_distance;
    double value;
};
// Objective samples along the ray from the minimizer toward the boundary;
// first entry is the starting point. B == nullptr probes the classical
// polar-volume functional.
std::vector<PropernessSample> properness_probe(const ConvexBody& K, const ConvexBody* B,
                                               const Vec& ray_direction,
                                               const Resolution& res = {});

}  // namespace santalo
