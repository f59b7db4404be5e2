#include "santalo/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "santalo/hyperplane.hpp"

namespace santalo {

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton on P_n from the Chebyshev initial guess
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return cache.emplace(n, std::move(r)).first->second;
}

double integrate_gauss(const std::function<double(double)>& f, double a, double b, int n) {
    const GaussRule& r = gauss_legendre(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0;
    for (int i = 0; i < n; ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
    return half * s;
}

double integrate_circle_split(const std::function<double(double)>& f,
                              std::vector<double> brk, int nodes_per_piece) {
    const double tau = 2.0 * kPi;
    for (auto& b : brk) b = b - tau * std::floor(b / tau);
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-12; }),
              brk.end());
    if (brk.empty()) brk.push_back(0.0);
    double s = 0;
    for (size_t i = 0; i < brk.size(); ++i) {
        double a = brk[i];
        double b = (i + 1 < brk.size()) ? brk[i + 1] : brk[0] + tau;
        if (b - a < 1e-12) continue;
        s += integrate_gauss(f, a, b, nodes_per_piece);
    }
    return s;
}

double integrate_circle(const std::function<double(double)>& f, int nodes) {
    double s = 0;
    for (int k = 0; k < nodes; ++k) s += f(2.0 * kPi * k / nodes);
    return s * 2.0 * kPi / nodes;
}

SphereRule circle_rule(int nodes) {
    SphereRule r;
    r.nodes.reserve(nodes);
    r.weights.assign(nodes, 2.0 * kPi / nodes);
    for (int k = 0; k < nodes; ++k) {
        double t = 2.0 * kPi * k / nodes;
        r.nodes.push_back(Vec(std::cos(t), std::sin(t)));
    }
    return r;
}

namespace {

double spherical_triangle_area(const Vec& a, const Vec& b, const Vec& c) {
    // l'Huilier
    double ga = std::acos(std::clamp(dot(b, c), -1.0, 1.0));
    double gb = std::acos(std::clamp(dot(a, c), -1.0, 1.0));
    double gc = std::acos(std::clamp(dot(a, b), -1.0, 1.0));
    double s = 0.5 * (ga + gb + gc);
    double t = std::tan(s / 2) * std::tan((s - ga) / 2) * std::tan((s - gb) / 2) *
               std::tan((s - gc) / 2);
    return 4.0 * std::atan(std::sqrt(std::max(t, 0.0)));
}

struct IcoMesh {
    std::vector<Vec> verts;
    std::vector<std::array<int, 3>> tris;
};

IcoMesh icosahedron() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec> v = {
        {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
        {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
        {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
    for (auto& p : v) p = normalized(p);
    IcoMesh m;
    m.verts = v;
    m.tris = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
              {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
              {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
              {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
    return m;
}

IcoMesh subdivide(const IcoMesh& in) {
    IcoMesh out;
    out.verts = in.verts;
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
        auto key = std::minmax(a, b);
        auto it = midpoint.find(key);
        if (it != midpoint.end()) return it->second;
        Vec m = normalized(out.verts[a] + out.verts[b]);
        int id = static_cast<int>(out.verts.size());
        out.verts.push_back(m);
        midpoint[key] = id;
        return id;
    };
    for (const auto& t : in.tris) {
        int ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[2], t[0]);
        out.tris.push_back({t[0], ab, ca});
        out.tris.push_back({t[1], bc, ab});
        out.tris.push_back({t[2], ca, bc});
        out.tris.push_back({ab, bc, ca});
    }
    return out;
}

}  // namespace

SphereRule icosphere_rule(int level) {
    static std::map<int, SphereRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(level);
    if (it != cache.end()) return it->second;

    IcoMesh m = icosahedron();
    for (int k = 0; k < level; ++k) m = subdivide(m);
    SphereRule r;
    r.nodes = m.verts;
    r.weights.assign(m.verts.size(), 0.0);
    for (const auto& t : m.tris) {
        double a = spherical_triangle_area(m.verts[t[0]], m.verts[t[1]], m.verts[t[2]]) / 3.0;
        r.weights[t[0]] += a;
        r.weights[t[1]] += a;
        r.weights[t[2]] += a;
    }
    cache[level] = r;
    return r;
}

SphereRule sphere_rule(int dim, const Resolution& res) {
    if (dim == 2) return circle_rule(res.circle_nodes);
    if (dim == 3) return icosphere_rule(res.sphere_level);
    throw WrongDimension("sphere_rule: dimension must be 2 or 3");
}

double integrate_abs_dot_sphere(const Vec& a_in, const std::function<double(const Vec&)>& g,
                                int n_theta, int n_phi) {
    Vec a = normalized(a_in);
    auto basis = orthonormal_complement(a);
    double amp = norm(a_in);
    const GaussRule& gr = gauss_legendre(n_theta);
    double total = 0;
    // split at the equator; u = cos(theta) a + sin(theta)(cos(phi) b1 + sin(phi) b2)
    for (int hemi = 0; hemi < 2; ++hemi) {
        double lo = hemi == 0 ? 0.0 : kPi / 2.0;
        double hi = lo + kPi / 2.0;
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (int i = 0; i < n_theta; ++i) {
            double theta = mid + half * gr.nodes[i];
            double ct = std::cos(theta), st = std::sin(theta);
            double ring = 0;
            for (int k = 0; k < n_phi; ++k) {
                double phi = 2.0 * kPi * k / n_phi;
                Vec u = ct * a + st * (std::cos(phi) * basis[0] + std::sin(phi) * basis[1]);
                ring += g(u);
            }
            ring *= 2.0 * kPi / n_phi;
            total += half * gr.weights[i] * std::abs(ct) * st * ring;
        }
    }
    return amp * total;
}

double integrate_abs_dot_circle(const Vec& a_in, const std::function<double(double)>& g,
                                int nodes_per_piece) {
    Vec a = normalized(a_in);
    double amp = norm(a_in);
    double t0 = std::atan2(a[1], a[0]);
    // |<a, e(t)>| vanishes at t0 +- pi/2
    std::vector<double> brk = {t0 + kPi / 2.0, t0 - kPi / 2.0};
    auto f = [&](double t) {
        return std::abs(a[0] * std::cos(t) + a[1] * std::sin(t)) * g(t);
    };
    return amp * integrate_circle_split(f, brk, nodes_per_piece);
}

SurfaceRule surface_quadrature(const SmoothBody& B, const Resolution& res) {
    SphereRule sr = sphere_rule(B.dim, res);
    SurfaceRule out;
    out.normals = sr.nodes;
    out.points.reserve(sr.nodes.size());
    out.weights.reserve(sr.nodes.size());
    for (size_t k = 0; k < sr.nodes.size(); ++k) {
        out.points.push_back(B.support_grad(sr.nodes[k]));
        out.weights.push_back(sr.weights[k] * B.gauss_jacobian(sr.nodes[k]));
    }
    return out;
}

}  // namespace santalo
