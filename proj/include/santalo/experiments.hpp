#pragma once

#include <cstdint>

#include "santalo/generators.hpp"
#include "santalo/report.hpp"
#include "santalo/solver.hpp"

namespace santalo {

// Randomized verification suites. Each returns aggregate CheckRecords; the
// same functions back the CLI `checks` command and the acceptance tests.
// `count` scales the number of random instances (1 = the documented
// defaults).

std::vector<CheckRecord> suite_analytic_anchors(const Resolution& res);
std::vector<CheckRecord> suite_duality(std::uint64_t seed, int count, const Resolution& res);
std::vector<CheckRecord> suite_crofton_2d(std::uint64_t seed, int count, const Resolution& res);
std::vector<CheckRecord> suite_isoperimetric(std::uint64_t seed, int count, const Resolution& res);
std::vector<CheckRecord> suite_convexity(std::uint64_t seed, int count, const Resolution& res);
std::vector<CheckRecord> suite_equivariance(std::uint64_t seed, int count, const Resolution& res);
std::vector<CheckRecord> suite_properness(const Resolution& res);
std::vector<CheckRecord> suite_equiaffine(std::uint64_t seed, const Resolution& res);
std::vector<CheckRecord> suite_classical_variation(std::uint64_t seed, int count,
                                                   const Resolution& res);
std::vector<CheckRecord> suite_first_variation(std::uint64_t seed, const Resolution& res);
std::vector<CheckRecord> suite_nonuniqueness(const Resolution& res);

// brute-force grid minimization of the classical polar-volume functional
// (test oracle for Santalo points)
Vec classical_grid_minimum(const Polytope& K, int coarse = 120, int refine_rounds = 3);

// central finite difference of t -> ht_area_dual(K - t v, B) at t = 0
double ht_area_translation_derivative(const Polytope& K, const ConvexBody& B, const Vec& v,
                                      const Resolution& res, double step = 1e-3);

}  // namespace santalo
