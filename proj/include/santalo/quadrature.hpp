#pragma once

#include <functional>
#include <vector>

#include "santalo/smallvec.hpp"
#include "santalo/smooth_body.hpp"

namespace santalo {

// Quadrature resolution knobs. circle_nodes drives 2D boundary rules,
// sphere_level the icosahedral subdivision in 3D.
struct Resolution {
    int circle_nodes = 512;
    int sphere_level = 4;     // 2562 vertices
    int slice_angles = 256;   // angular nodes for smooth slice integrals
    int gauss_nodes = 32;     // per smooth piece in split rules
};

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

// integral of f over [a, b]
double integrate_gauss(const std::function<double(double)>& f, double a, double b, int n);

// integral of a 2*pi-periodic function, split at the given breakpoints and
// Gauss-integrated piecewise (spectral on piecewise-analytic integrands)
double integrate_circle_split(const std::function<double(double)>& f,
                              std::vector<double> breakpoints, int nodes_per_piece);

// plain periodic trapezoid rule
double integrate_circle(const std::function<double(double)>& f, int nodes);

// quadrature rule on the unit sphere S^{n-1}
struct SphereRule {
    std::vector<Vec> nodes;       // unit vectors
    std::vector<double> weights;  // sum to |S^{n-1}|
};
SphereRule circle_rule(int nodes);
SphereRule icosphere_rule(int level);
SphereRule sphere_rule(int dim, const Resolution& res);

// integral over S^2 of |<a,u>| * g(u); exact splitting at the equator
// {<a,u> = 0} restores spectral accuracy for smooth g
double integrate_abs_dot_sphere(const Vec& a, const std::function<double(const Vec&)>& g,
                                int n_theta, int n_phi);

// 2D version: integral over S^1 of |<a,e(t)>| * g(t), e(t) = (cos t, sin t)
double integrate_abs_dot_circle(const Vec& a, const std::function<double(double)>& g,
                                int nodes_per_piece);

// Gauss-map surface quadrature of a smooth body: sum_k w_k f(u_k, x_k)
// approximates the boundary integral of f against (n-1)-Hausdorff measure.
struct SurfaceRule {
    std::vector<Vec> normals;
    std::vector<Vec> points;
    std::vector<double> weights;  // quadrature weight times Gauss Jacobian
};
SurfaceRule surface_quadrature(const SmoothBody& B, const Resolution& res);

}  // namespace santalo
