#include "santalo/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "santalo/rng.hpp"

namespace santalo {

namespace {

double points_scale(const std::vector<Vec>& pts) {
    double s = 0;
    for (const auto& p : pts) s = std::max(s, norm(p));
    return std::max(s, 1e-30);
}

std::vector<Vec> dedupe(std::vector<Vec> pts, double tol) {
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        for (int i = 0; i < a.n; ++i) {
            if (a[i] < b[i]) return true;
            if (a[i] > b[i]) return false;
        }
        return false;
    });
    std::vector<Vec> out;
    for (const auto& p : pts) {
        bool dup = false;
        for (const auto& q : out)
            if (dist(p, q) <= tol) { dup = true; break; }
        if (!dup) out.push_back(p);
    }
    return out;
}

// edges of a CCW 2D vertex loop
void rebuild_edges_2d(Polytope& P) {
    P.facets.clear();
    int m = static_cast<int>(P.vertices.size());
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        Vec d = P.vertices[j] - P.vertices[i];
        Facet f;
        f.normal = normalized(Vec(d[1], -d[0]));
        f.offset = dot(f.normal, P.vertices[i]);
        f.area = norm(d);
        f.vertex_ids = {i, j};
        P.facets.push_back(f);
    }
}

Polytope hull_1d(const std::vector<Vec>& pts) {
    double lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) {
        lo = std::min(lo, p[0]);
        hi = std::max(hi, p[0]);
    }
    Polytope P;
    P.dim = 1;
    Vec a(1), b(1);
    a[0] = lo;
    b[0] = hi;
    P.vertices = {a, b};
    Facet flo, fhi;
    flo.normal = Vec::axis(1, 0, -1.0);
    flo.offset = -lo;
    flo.area = 1.0;
    flo.vertex_ids = {0};
    fhi.normal = Vec::axis(1, 0, 1.0);
    fhi.offset = hi;
    fhi.area = 1.0;
    fhi.vertex_ids = {1};
    P.facets = {flo, fhi};
    if (hi - lo <= kGeomTol * points_scale(pts)) throw DegenerateBody();
    return P;
}

Polytope hull_2d(std::vector<Vec> pts) {
    double sc = points_scale(pts);
    pts = dedupe(std::move(pts), kGeomTol * sc);
    if (pts.size() < 3) throw DegenerateBody("2D hull needs 3 non-collinear points");
    // monotone chain, strict turns only (collinear points pruned)
    const double eps = kGeomTol * sc * sc;
    auto build = [&](std::vector<Vec>& chain, const Vec& p) {
        while (chain.size() >= 2 &&
               cross2(chain.back() - chain[chain.size() - 2], p - chain.back()) <= eps)
            chain.pop_back();
        chain.push_back(p);
    };
    std::vector<Vec> lower, upper;
    for (const auto& p : pts) build(lower, p);
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) build(upper, *it);
    lower.pop_back();
    upper.pop_back();
    Polytope P;
    P.dim = 2;
    P.vertices = lower;
    P.vertices.insert(P.vertices.end(), upper.begin(), upper.end());
    if (P.vertices.size() < 3) throw DegenerateBody("2D hull is flat");
    rebuild_edges_2d(P);
    return P;
}

struct Tri {
    int a, b, c;
    Vec n;       // outward unit normal
    double off;
    bool alive = true;
};

Tri make_tri(const std::vector<Vec>& pts, int a, int b, int c, const Vec& inside) {
    Tri t{a, b, c, Vec(3), 0.0, true};
    Vec n = cross(pts[b] - pts[a], pts[c] - pts[a]);
    double r = norm(n);
    if (r > 0) n = n / r;
    if (dot(n, inside - pts[a]) > 0) {  // flip so the interior point is below
        std::swap(t.b, t.c);
        n = -n;
    }
    t.n = n;
    t.off = dot(n, pts[t.a]);
    return t;
}

// incremental 3D hull; points are few (desk scale) so the O(m * faces)
// visibility scan is fine
std::vector<Tri> hull_3d_triangles(const std::vector<Vec>& pts) {
    const int m = static_cast<int>(pts.size());
    const double sc = points_scale(pts);
    const double eps = kGeomTol * sc;

    // seed tetrahedron: spread-out extremes
    int i0 = 0, i1 = -1;
    for (int i = 1; i < m; ++i)
        if (pts[i][0] < pts[i0][0]) i0 = i;
    double best = -1;
    for (int i = 0; i < m; ++i) {
        double d = dist(pts[i], pts[i0]);
        if (d > best) { best = d; i1 = i; }
    }
    if (best <= eps) throw DegenerateBody("3D hull: points coincide");
    int i2 = -1;
    best = -1;
    for (int i = 0; i < m; ++i) {
        double d = norm(cross(pts[i1] - pts[i0], pts[i] - pts[i0]));
        if (d > best) { best = d; i2 = i; }
    }
    if (best <= eps * sc) throw DegenerateBody("3D hull: points are collinear");
    Vec n0 = cross(pts[i1] - pts[i0], pts[i2] - pts[i0]);
    int i3 = -1;
    best = -1;
    for (int i = 0; i < m; ++i) {
        double d = std::abs(dot(n0, pts[i] - pts[i0]));
        if (d > best) { best = d; i3 = i; }
    }
    if (best <= eps * sc * sc) throw DegenerateBody("3D hull: points are coplanar");

    Vec inside = 0.25 * (pts[i0] + pts[i1] + pts[i2] + pts[i3]);
    std::vector<Tri> faces;
    faces.push_back(make_tri(pts, i0, i1, i2, inside));
    faces.push_back(make_tri(pts, i0, i1, i3, inside));
    faces.push_back(make_tri(pts, i0, i2, i3, inside));
    faces.push_back(make_tri(pts, i1, i2, i3, inside));

    std::set<int> seed{i0, i1, i2, i3};
    for (int p = 0; p < m; ++p) {
        if (seed.count(p)) continue;
        std::vector<int> visible;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            if (!faces[f].alive) continue;
            if (dot(faces[f].n, pts[p]) - faces[f].off > eps) visible.push_back(f);
        }
        if (visible.empty()) continue;
        // horizon: directed edges of visible faces whose twin face is hidden
        std::set<std::pair<int, int>> visible_edges;
        for (int f : visible) {
            const Tri& t = faces[f];
            visible_edges.insert({t.a, t.b});
            visible_edges.insert({t.b, t.c});
            visible_edges.insert({t.c, t.a});
        }
        std::vector<std::pair<int, int>> horizon;
        for (const auto& e : visible_edges)
            if (!visible_edges.count({e.second, e.first})) horizon.push_back(e);
        for (int f : visible) faces[f].alive = false;
        for (const auto& e : horizon)
            faces.push_back(make_tri(pts, e.first, e.second, p, inside));
    }
    std::vector<Tri> out;
    for (const auto& t : faces)
        if (t.alive) out.push_back(t);
    return out;
}

// chain boundary edges (each appears once, consistently directed) into a loop
std::vector<int> chain_cycle(const std::vector<std::pair<int, int>>& edges) {
    std::map<int, int> next;
    for (const auto& e : edges) next[e.first] = e.second;
    std::vector<int> cycle;
    int start = edges.front().first, v = start;
    do {
        cycle.push_back(v);
        auto it = next.find(v);
        if (it == next.end()) throw GeometryError("facet boundary is not a closed loop");
        v = it->second;
    } while (v != start && cycle.size() <= edges.size());
    if (v != start) throw GeometryError("facet boundary is not a closed loop");
    return cycle;
}

void prune_collinear(std::vector<int>& cycle, const std::vector<Vec>& pts, double sc) {
    bool changed = true;
    while (changed && cycle.size() > 3) {
        changed = false;
        for (size_t i = 0; i < cycle.size(); ++i) {
            const Vec& a = pts[cycle[(i + cycle.size() - 1) % cycle.size()]];
            const Vec& b = pts[cycle[i]];
            const Vec& c = pts[cycle[(i + 1) % cycle.size()]];
            if (norm(cross(b - a, c - b)) <= 1e-7 * sc * std::max(norm(b - a), norm(c - b))) {
                cycle.erase(cycle.begin() + i);
                changed = true;
                break;
            }
        }
    }
}

double polygon_area_3d(const std::vector<int>& cycle, const std::vector<Vec>& pts) {
    Vec mean(3);
    for (int id : cycle) mean += pts[id];
    mean = mean / static_cast<double>(cycle.size());
    Vec s(3);
    for (size_t i = 0; i < cycle.size(); ++i) {
        const Vec& a = pts[cycle[i]];
        const Vec& b = pts[cycle[(i + 1) % cycle.size()]];
        s += cross(a - mean, b - mean);
    }
    return 0.5 * norm(s);
}

Polytope hull_3d(std::vector<Vec> pts) {
    double sc = points_scale(pts);
    pts = dedupe(std::move(pts), kGeomTol * sc);
    if (pts.size() < 4) throw DegenerateBody("3D hull needs 4 non-coplanar points");
    std::vector<Tri> tris = hull_3d_triangles(pts);

    // merge coplanar neighbours into true facets (union-find)
    int nf = static_cast<int>(tris.size());
    std::vector<int> parent(nf);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<std::pair<int, int>, int> edge_owner;
    auto visit_edge = [&](int f, int u, int v) {
        auto key = std::minmax(u, v);
        auto it = edge_owner.find(key);
        if (it == edge_owner.end()) {
            edge_owner[key] = f;
            return;
        }
        int g = it->second;
        if (dot(tris[f].n, tris[g].n) > 1.0 - 1e-9 &&
            std::abs(tris[f].off - tris[g].off) < 1e-7 * sc)
            parent[find(f)] = find(g);
    };
    for (int f = 0; f < nf; ++f) {
        visit_edge(f, tris[f].a, tris[f].b);
        visit_edge(f, tris[f].b, tris[f].c);
        visit_edge(f, tris[f].c, tris[f].a);
    }
    std::map<int, std::vector<int>> groups;
    for (int f = 0; f < nf; ++f) groups[find(f)].push_back(f);

    Polytope P;
    P.dim = 3;
    std::vector<std::vector<int>> cycles;
    for (const auto& [root, members] : groups) {
        // boundary = directed edges appearing without their reverse
        std::set<std::pair<int, int>> dir;
        for (int f : members) {
            const Tri& t = tris[f];
            for (auto [u, v] : {std::pair{t.a, t.b}, std::pair{t.b, t.c}, std::pair{t.c, t.a}}) {
                if (dir.count({v, u})) dir.erase({v, u});
                else dir.insert({u, v});
            }
        }
        std::vector<std::pair<int, int>> boundary(dir.begin(), dir.end());
        std::vector<int> cycle = chain_cycle(boundary);
        prune_collinear(cycle, pts, sc);
        cycles.push_back(cycle);
    }

    // keep only facet-cycle corners as vertices
    std::map<int, int> remap;
    for (const auto& cy : cycles)
        for (int id : cy)
            if (!remap.count(id)) {
                remap[id] = static_cast<int>(P.vertices.size());
                P.vertices.push_back(pts[id]);
            }
    auto group_it = groups.begin();
    for (auto& cy : cycles) {
        Facet f;
        const Tri& rep = tris[group_it->second.front()];
        ++group_it;
        f.vertex_ids.reserve(cy.size());
        for (int id : cy) f.vertex_ids.push_back(remap[id]);
        // Newell normal from the merged cycle
        Vec mean(3);
        for (int id : f.vertex_ids) mean += P.vertices[id];
        mean = mean / static_cast<double>(f.vertex_ids.size());
        Vec nrm(3);
        for (size_t i = 0; i < f.vertex_ids.size(); ++i) {
            const Vec& a = P.vertices[f.vertex_ids[i]];
            const Vec& b = P.vertices[f.vertex_ids[(i + 1) % f.vertex_ids.size()]];
            nrm += cross(a - mean, b - mean);
        }
        f.area = 0.5 * norm(nrm);
        f.normal = normalized(nrm);
        if (dot(f.normal, rep.n) < 0) f.normal = -f.normal;  // keep outward
        double off = 0;
        for (int id : f.vertex_ids) off += dot(f.normal, P.vertices[id]);
        f.offset = off / static_cast<double>(f.vertex_ids.size());
        P.facets.push_back(f);
    }
    return P;
}

Polytope hull_4d(std::vector<Vec> pts) {
    double sc = points_scale(pts);
    pts = dedupe(std::move(pts), kGeomTol * sc);
    // prune non-extreme points with the LP test; no facets in dimension 4
    Polytope P;
    P.dim = 4;
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<Vec> others;
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!point_in_hull_lp(others, pts[i], kGeomTol * sc)) P.vertices.push_back(pts[i]);
    }
    if (P.vertices.size() < 5) throw DegenerateBody("4D hull has empty interior");
    return P;
}

}  // namespace

double Polytope::support(const Vec& u) const {
    if (norm(u) == 0.0) throw ZeroDirection();
    double s = -1e300;
    for (const auto& v : vertices) s = std::max(s, dot(u, v));
    return s;
}

bool Polytope::contains(const Vec& x, double slack) const {
    if (dim == 4 && facets.empty()) return point_in_hull_lp(vertices, x, std::max(slack, kGeomTol * scale()));
    for (const auto& f : facets)
        if (dot(f.normal, x) > f.offset + slack) return false;
    return true;
}

double Polytope::interior_margin(const Vec& x) const {
    double m = 1e300;
    for (const auto& f : facets) m = std::min(m, f.offset - dot(f.normal, x));
    return m;
}

Vec Polytope::vertex_barycenter() const {
    Vec b(dim);
    for (const auto& v : vertices) b += v;
    return b / static_cast<double>(vertices.size());
}

double Polytope::diameter() const {
    double d = 0;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            d = std::max(d, dist(vertices[i], vertices[j]));
    return d;
}

double Polytope::scale() const { return points_scale(vertices); }

Polytope Polytope::translated(const Vec& t) const {
    Polytope Q = *this;
    for (auto& v : Q.vertices) v += t;
    for (auto& f : Q.facets) f.offset += dot(f.normal, t);
    return Q;
}

Polytope Polytope::linear_image(const Mat& M) const {
    Polytope Q;
    Q.dim = dim;
    Q.vertices.reserve(vertices.size());
    for (const auto& v : vertices) Q.vertices.push_back(M * v);
    double dM = det(M);
    if (dim == 2) {
        Q.vertices = std::vector<Vec>(Q.vertices.begin(), Q.vertices.end());
        if (dM < 0) std::reverse(Q.vertices.begin(), Q.vertices.end());
        rebuild_edges_2d(Q);
        return Q;
    }
    Mat Mit = inverse(M).transposed();
    for (const auto& f : facets) {
        Facet g;
        Vec w = Mit * f.normal;
        double r = norm(w);
        g.normal = w / r;
        g.offset = f.offset / r;
        g.vertex_ids = f.vertex_ids;
        if (dM < 0) std::reverse(g.vertex_ids.begin(), g.vertex_ids.end());
        if (dim == 3) {
            std::vector<int> cy = g.vertex_ids;
            g.area = polygon_area_3d(cy, Q.vertices);
        } else {
            g.area = 1.0;
        }
        Q.facets.push_back(g);
    }
    return Q;
}

Polytope convex_hull(const std::vector<Vec>& points) {
    if (points.empty()) throw DegenerateBody("no points");
    switch (points.front().dim()) {
        case 1: return hull_1d(points);
        case 2: return hull_2d(points);
        case 3: return hull_3d(points);
        case 4: return hull_4d(points);
        default: throw WrongDimension("convex_hull: dimension must be 1..4");
    }
}

Polytope polar(const Polytope& P) {
    const double sc = P.scale();
    for (const auto& f : P.facets)
        if (f.offset <= kGeomTol * sc) throw OriginNotInterior();
    if (P.facets.empty()) throw WrongDimension("polar: H-representation required");

    Polytope Q;
    Q.dim = P.dim;
    if (P.dim == 1) {
        double lo = P.vertices[0][0], hi = P.vertices[1][0];
        if (lo > hi) std::swap(lo, hi);
        if (!(lo < 0 && hi > 0)) throw OriginNotInterior();
        std::vector<Vec> pts = {Vec::axis(1, 0, 1.0 / lo), Vec::axis(1, 0, 1.0 / hi)};
        return hull_1d(pts);
    }

    // one polar vertex per facet
    for (const auto& f : P.facets) Q.vertices.push_back(f.normal / f.offset);

    if (P.dim == 2) {
        // edge normals advance CCW with the vertex loop, so Q.vertices is CCW
        rebuild_edges_2d(Q);
        return Q;
    }

    // dim 3: one polar facet per vertex of P, with vertices = incident facets
    std::vector<std::vector<int>> incident(P.vertices.size());
    for (size_t j = 0; j < P.facets.size(); ++j)
        for (int id : P.facets[j].vertex_ids) incident[id].push_back(static_cast<int>(j));
    for (size_t i = 0; i < P.vertices.size(); ++i) {
        const Vec& v = P.vertices[i];
        double r = norm(v);
        Facet g;
        g.normal = v / r;
        g.offset = 1.0 / r;
        // cyclic order: sort around the barycenter of the dual face (always
        // interior for a convex polygon, unlike the axis foot point)
        auto basis = orthonormal_complement(g.normal);
        double m1 = 0, m2 = 0;
        for (int j : incident[i]) {
            m1 += dot(Q.vertices[j], basis[0]);
            m2 += dot(Q.vertices[j], basis[1]);
        }
        m1 /= static_cast<double>(incident[i].size());
        m2 /= static_cast<double>(incident[i].size());
        std::vector<std::pair<double, int>> ang;
        for (int j : incident[i]) {
            const Vec& w = Q.vertices[j];
            ang.push_back({std::atan2(dot(w, basis[1]) - m2, dot(w, basis[0]) - m1), j});
        }
        std::sort(ang.begin(), ang.end());
        for (const auto& [a, j] : ang) g.vertex_ids.push_back(j);
        // outward orientation (Newell normal against the facet normal)
        Vec mean(3);
        for (int id : g.vertex_ids) mean += Q.vertices[id];
        mean = mean / static_cast<double>(g.vertex_ids.size());
        Vec nw(3);
        for (size_t t = 0; t < g.vertex_ids.size(); ++t) {
            const Vec& a = Q.vertices[g.vertex_ids[t]];
            const Vec& b = Q.vertices[g.vertex_ids[(t + 1) % g.vertex_ids.size()]];
            nw += cross(a - mean, b - mean);
        }
        if (dot(nw, g.normal) < 0) std::reverse(g.vertex_ids.begin(), g.vertex_ids.end());
        g.area = polygon_area_3d(g.vertex_ids, Q.vertices);
        Q.facets.push_back(g);
    }
    return Q;
}

double volume(const Polytope& P) {
    if (P.dim == 1) return P.vertices[1][0] - P.vertices[0][0];
    if (P.dim == 2) {
        double a = 0;
        int m = static_cast<int>(P.vertices.size());
        for (int i = 0; i < m; ++i) a += cross2(P.vertices[i], P.vertices[(i + 1) % m]);
        if (a <= 0) throw DegenerateBody();
        return 0.5 * a;
    }
    if (P.dim == 3) {
        double v = 0;
        for (const auto& f : P.facets) {
            const auto& c = f.vertex_ids;
            for (size_t t = 1; t + 1 < c.size(); ++t) {
                Vec cols[3] = {P.vertices[c[0]], P.vertices[c[t]], P.vertices[c[t + 1]]};
                v += det_cols(cols, 3);
            }
        }
        if (v <= 0) throw DegenerateBody();
        return v / 6.0;
    }
    throw WrongDimension("volume: exact path is dimension 1..3; use volume_monte_carlo");
}

Vec centroid_integral(const Polytope& P) {
    Vec m(P.dim);
    if (P.dim == 1) {
        double lo = P.vertices[0][0], hi = P.vertices[1][0];
        m[0] = 0.5 * (hi * hi - lo * lo);
        return m;
    }
    if (P.dim == 2) {
        int k = static_cast<int>(P.vertices.size());
        for (int i = 0; i < k; ++i) {
            const Vec& a = P.vertices[i];
            const Vec& b = P.vertices[(i + 1) % k];
            double sa = 0.5 * cross2(a, b);
            m += (sa / 3.0) * (a + b);
        }
        return m;
    }
    if (P.dim == 3) {
        for (const auto& f : P.facets) {
            const auto& c = f.vertex_ids;
            for (size_t t = 1; t + 1 < c.size(); ++t) {
                const Vec &a = P.vertices[c[0]], &b = P.vertices[c[t]], &d = P.vertices[c[t + 1]];
                Vec cols[3] = {a, b, d};
                double sv = det_cols(cols, 3) / 6.0;
                m += (sv / 4.0) * (a + b + d);
            }
        }
        return m;
    }
    throw WrongDimension("centroid_integral: exact path is dimension 1..3");
}

MonteCarloEstimate volume_monte_carlo(const Polytope& P, std::uint64_t seed, int samples) {
    const int n = P.dim;
    Vec lo = P.vertices[0], hi = P.vertices[0];
    for (const auto& v : P.vertices)
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    double box = 1;
    for (int i = 0; i < n; ++i) box *= hi[i] - lo[i];
    RandomSource rng(seed);
    long hitn = 0;
    for (int s = 0; s < samples; ++s) {
        Vec x(n);
        for (int i = 0; i < n; ++i) x[i] = rng.uniform(lo[i], hi[i]);
        if (P.contains(x)) ++hitn;
    }
    double p = static_cast<double>(hitn) / samples;
    return {p * box, box * std::sqrt(p * (1 - p) / samples)};
}

MomentMonteCarlo moment_monte_carlo(const Polytope& P, std::uint64_t seed, int samples) {
    const int n = P.dim;
    Vec lo = P.vertices[0], hi = P.vertices[0];
    for (const auto& v : P.vertices)
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    double box = 1;
    for (int i = 0; i < n; ++i) box *= hi[i] - lo[i];
    RandomSource rng(seed);
    Vec sum(n), sum2(n);
    for (int s = 0; s < samples; ++s) {
        Vec x(n);
        for (int i = 0; i < n; ++i) x[i] = rng.uniform(lo[i], hi[i]);
        if (P.contains(x))
            for (int i = 0; i < n; ++i) {
                sum[i] += x[i];
                sum2[i] += x[i] * x[i];
            }
    }
    MomentMonteCarlo out{Vec(n), Vec(n)};
    for (int i = 0; i < n; ++i) {
        double mean = sum[i] / samples;
        double var = sum2[i] / samples - mean * mean;
        out.value[i] = box * mean;
        out.std_error[i] = box * std::sqrt(std::max(var, 0.0) / samples);
    }
    return out;
}

Polytope project_onto_hyperplane(const Polytope& P, const LinearHyperplane& H) {
    if (P.dim != H.dim()) throw DimensionMismatch();
    auto basis = hyperplane_basis(H);
    std::vector<Vec> proj;
    proj.reserve(P.vertices.size());
    for (const auto& v : P.vertices) {
        Vec q(P.dim - 1);
        for (size_t k = 0; k < basis.size(); ++k) q[static_cast<int>(k)] = dot(v, basis[k]);
        proj.push_back(q);
    }
    return convex_hull(proj);
}

double shadow_volume(const Polytope& P, const LinearHyperplane& H) {
    if (P.dim == 2) {
        Vec e = hyperplane_basis(H)[0];
        return P.support(e) + P.support(-e);
    }
    if (P.dim == 3) {
        double s = 0;
        for (const auto& f : P.facets) s += f.area * std::abs(dot(f.normal, H.normal));
        return 0.5 * s;
    }
    throw WrongDimension("shadow_volume: dimension must be 2 or 3");
}

Polytope make_box(const Vec& lo, const Vec& hi) {
    int n = lo.dim();
    std::vector<Vec> pts;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = (mask >> i & 1) ? hi[i] : lo[i];
        pts.push_back(v);
    }
    return convex_hull(pts);
}

Polytope make_cube(int dim, double halfwidth) {
    Vec lo(dim), hi(dim);
    for (int i = 0; i < dim; ++i) {
        lo[i] = -halfwidth;
        hi[i] = halfwidth;
    }
    return make_box(lo, hi);
}

Polytope make_cross_polytope(int dim, double radius) {
    std::vector<Vec> pts;
    for (int i = 0; i < dim; ++i) {
        pts.push_back(Vec::axis(dim, i, radius));
        pts.push_back(Vec::axis(dim, i, -radius));
    }
    return convex_hull(pts);
}

Polytope make_simplex_2d() {
    return convex_hull({Vec(0.0, 0.0), Vec(1.0, 0.0), Vec(0.0, 1.0)});
}

Polytope make_regular_polygon(int sides, double radius) {
    std::vector<Vec> pts;
    for (int k = 0; k < sides; ++k) {
        double t = 2.0 * kPi * k / sides;
        pts.push_back(Vec(radius * std::cos(t), radius * std::sin(t)));
    }
    return convex_hull(pts);
}

bool point_in_hull_lp(const std::vector<Vec>& points, const Vec& x, double tol) {
    // feasibility of: sum lambda_i v_i = x, sum lambda_i = 1, lambda >= 0
    // phase-1 simplex with Bland's rule on the artificial objective
    const int n = x.dim();
    const int rows = n + 1;
    const int m = static_cast<int>(points.size());
    const int cols = m + rows;  // lambdas + artificials
    std::vector<std::vector<double>> T(rows + 1, std::vector<double>(cols + 1, 0.0));
    for (int r = 0; r < rows; ++r) {
        double rhs = (r < n) ? x[r] : 1.0;
        double sgn = (rhs < 0) ? -1.0 : 1.0;
        for (int j = 0; j < m; ++j) T[r][j] = sgn * ((r < n) ? points[j][r] : 1.0);
        T[r][m + r] = 1.0;
        T[r][cols] = sgn * rhs;
    }
    std::vector<int> basis(rows);
    for (int r = 0; r < rows; ++r) basis[r] = m + r;
    // objective row: minimize sum of artificials
    for (int j = 0; j <= cols; ++j) {
        double s = 0;
        for (int r = 0; r < rows; ++r) s += T[r][j];
        T[rows][j] = (j >= m && j < cols) ? 0.0 : s;
    }
    for (int iter = 0; iter < 10000; ++iter) {
        int pivot_col = -1;
        for (int j = 0; j < cols; ++j)
            if (T[rows][j] > 1e-12) { pivot_col = j; break; }  // Bland
        if (pivot_col < 0) break;
        int pivot_row = -1;
        double best_ratio = 0;
        for (int r = 0; r < rows; ++r) {
            if (T[r][pivot_col] <= 1e-12) continue;
            double ratio = T[r][cols] / T[r][pivot_col];
            if (pivot_row < 0 || ratio < best_ratio - 1e-15 ||
                (std::abs(ratio - best_ratio) <= 1e-15 && basis[r] < basis[pivot_row])) {
                pivot_row = r;
                best_ratio = ratio;
            }
        }
        if (pivot_row < 0) break;  // unbounded cannot happen here
        double piv = T[pivot_row][pivot_col];
        for (int j = 0; j <= cols; ++j) T[pivot_row][j] /= piv;
        for (int r = 0; r <= rows; ++r) {
            if (r == pivot_row) continue;
            double f = T[r][pivot_col];
            if (f == 0.0) continue;
            for (int j = 0; j <= cols; ++j) T[r][j] -= f * T[pivot_row][j];
        }
        basis[pivot_row] = pivot_col;
    }
    return T[rows][cols] <= tol;
}

void validate(const Polytope& P) {
    const double sc = P.scale();
    const double tol = 100 * kGeomTol * std::max(sc, 1.0);
    if (P.vertices.empty()) throw GeometryError("polytope has no vertices");
    if (P.dim == 4) return;  // V-representation only
    if (P.facets.empty()) throw GeometryError("polytope has no facets");
    for (const auto& f : P.facets) {
        if (std::abs(norm(f.normal) - 1.0) > 1e-9) throw GeometryError("facet normal not unit");
        if (!(f.area > 0)) throw GeometryError("facet area not positive");
        int on = 0;
        for (const auto& v : P.vertices) {
            double d = dot(f.normal, v) - f.offset;
            if (d > tol) throw GeometryError("vertex outside facet halfspace");
            if (std::abs(d) <= tol) ++on;
        }
        if (on < P.dim) throw GeometryError("facet carries fewer than dim vertices");
    }
    // extreme points: every vertex must sit on at least dim facets
    for (const auto& v : P.vertices) {
        int on = 0;
        for (const auto& f : P.facets)
            if (std::abs(dot(f.normal, v) - f.offset) <= tol) ++on;
        if (on < P.dim) throw GeometryError("non-extreme vertex present");
    }
}

}  // namespace santalo
