#pragma once

#include <string>
#include <variant>

#include "santalo/polytope.hpp"
#include "santalo/smooth_body.hpp"

namespace santalo {

// A convex body is either a polytope (V + H representation) or a smooth
// body (support oracle).
using ConvexBody = std::variant<Polytope, SmoothBody>;

inline int dim_of(const ConvexBody& K) {
    return std::visit([](const auto& b) { return b.dim; }, K);
}

inline bool is_polytope(const ConvexBody& K) { return std::holds_alternative<Polytope>(K); }
inline const Polytope& as_polytope(const ConvexBody& K) { return std::get<Polytope>(K); }
inline const SmoothBody& as_smooth(const ConvexBody& K) { return std::get<SmoothBody>(K); }

double support(const ConvexBody& K, const Vec& u);
double body_scale(const ConvexBody& K);

ConvexBody translated(const ConvexBody& K, const Vec& t);

// BodySpec JSON:
//   {"type":"polytope","vertices":[[...],...]}
//   {"type":"ellipsoid","Q":[[...],...]}
//   {"type":"ball","radius":r}
//   {"type":"perturbed_ball","eps":e,"harmonic":{"quadratic":[[...]],"quartic":c}}
// Vectors and matrices are row-major decimal arrays.
ConvexBody parse_body_spec(const std::string& json_text);
ConvexBody load_body_spec(const std::string& path_or_inline);
std::string body_spec_json(const ConvexBody& K);

}  // namespace santalo
