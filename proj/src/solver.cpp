#include "santalo/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace santalo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double margin_tolerance(const ConvexBody& K) { return kGeomTol * std::max(1.0, body_scale(K)); }

double inradius_estimate(const ConvexBody& K) {
    Vec c = is_polytope(K) ? as_polytope(K).vertex_barycenter() : Vec::zero(dim_of(K));
    return interior_margin(K, c);
}

double body_diameter(const ConvexBody& K) {
    if (is_polytope(K)) return as_polytope(K).diameter();
    return 2.0 * body_scale(K);
}

Vec start_point(const ConvexBody& K) {
    return is_polytope(K) ? as_polytope(K).vertex_barycenter() : Vec::zero(dim_of(K));
}

// largest step from x along d staying inside K
double ray_clip(const ConvexBody& K, const Vec& x, const Vec& d) {
    if (is_polytope(K)) {
        double t = kInf;
        for (const auto& f : as_polytope(K).facets) {
            double dn = dot(f.normal, d);
            if (dn > 1e-15) t = std::min(t, (f.offset - dot(f.normal, x)) / dn);
        }
        return t;
    }
    double lo = 0, hi = body_scale(K) / std::max(norm(d), 1e-300);
    while (interior_margin(K, x + hi * d) > 0) hi *= 2.0;
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        (interior_margin(K, x + mid * d) > 0 ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace

double objective(const Vec& x, const ConvexBody& K, const ConvexBody& B, const Resolution& res) {
    const int n = dim_of(K);
    if (n != dim_of(B)) throw DimensionMismatch();
    if (interior_margin(K, x) <= margin_tolerance(K)) throw PointNotInterior();
    const double eps = unit_ball_volume(n - 1);

    if (is_polytope(K)) return ht_area(B, as_polytope(K).translated(-x), res);
    // smooth K: slice integrals take the offset directly
    if (is_polytope(B)) {
        SurfaceAreaMeasure mu = surface_area_measure(B, res);
        double s = 0;
        for (const auto& a : mu.atoms) s += a.weight * slice_polar_volume(K, a.direction, x, res);
        return s / eps;
    }
    SurfaceRule rule = surface_quadrature(as_smooth(B), res);
    double s = 0;
    for (size_t k = 0; k < rule.normals.size(); ++k)
        s += rule.weights[k] * slice_polar_volume(K, LinearHyperplane(rule.normals[k]), x, res);
    return s / eps;
}

double classical_objective(const Vec& x, const ConvexBody& K, const Resolution& res) {
    const int n = dim_of(K);
    if (interior_margin(K, x) <= margin_tolerance(K)) throw PointNotInterior();
    if (is_polytope(K)) return volume(polar(as_polytope(K).translated(-x)));
    const SmoothBody& S = as_smooth(K);
    SphereRule rule = sphere_rule(n, res);
    double s = 0;
    for (size_t k = 0; k < rule.nodes.size(); ++k)
        s += rule.weights[k] * std::pow(S.support(rule.nodes[k]) - dot(x, rule.nodes[k]), -n);
    return s / n;
}

Vec classical_gradient(const Vec& x, const ConvexBody& K, const Resolution& res) {
    const int n = dim_of(K);
    if (interior_margin(K, x) <= margin_tolerance(K)) throw PointNotInterior();
    if (is_polytope(K))
        return (n + 1.0) * centroid_integral(polar(as_polytope(K).translated(-x)));
    // (n+1) c((K-x)^polar) through the radial map of the polar body
    const SmoothBody& S = as_smooth(K);
    SphereRule rule = sphere_rule(n, res);
    Vec g(n);
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
        const Vec& u = rule.nodes[k];
        g += rule.weights[k] * std::pow(S.support(u) - dot(x, u), -(n + 1)) * u;
    }
    return g;
}

Vec gradient(const Vec& x, const ConvexBody& K, const ConvexBody& B, const Resolution& res) {
    const int n = dim_of(K);
    if (!is_polytope(B) && is_polytope(K)) {
        Polytope Kt = as_polytope(K).translated(-x);
        Vec c = dual_centroid(Kt, as_smooth(B), res);
        return ((n + 1.0) / unit_ball_volume(n - 1)) * c;
    }
    double h = 1e-5 * std::max(inradius_estimate(K), 1e-6);
    Vec g(n);
    for (int i = 0; i < n; ++i) {
        Vec e = Vec::axis(n, i, h);
        g[i] = (objective(x + e, K, B, res) - objective(x - e, K, B, res)) /
               (2.0 * h);
    }
    return g;
}

namespace {

using Functional = std::function<double(const Vec&)>;

struct InnerMinimizer {
    const ConvexBody& K;
    Functional f;  // +inf outside the interior
    std::function<Vec(const Vec&)> grad;  // empty for the Nelder-Mead path
};

void flat_probe(const InnerMinimizer& prob, const SolverOptions& opts, SolveResult& r) {
    const int n = dim_of(prob.K);
    double diam = body_diameter(prob.K);
    double f0 = prob.f(r.point);
    double ftol = opts.flat_value_tol * std::max(1.0, std::abs(f0));
    double need = opts.flat_length_fraction * diam;

    std::vector<Vec> dirs;
    if (n == 2) {
        for (int k = 0; k < 16; ++k)
            dirs.push_back(Vec(std::cos(kPi * k / 16.0), std::sin(kPi * k / 16.0)));
    } else {
        SphereRule base = icosphere_rule(0);
        for (const auto& u : base.nodes) dirs.push_back(u);
        for (int i = 0; i < n; ++i) dirs.push_back(Vec::axis(n, i));
    }

    auto extent = [&](const Vec& d) {
        double cap = 0.95 * ray_clip(prob.K, r.point, d);
        if (!(cap > 0)) return 0.0;
        double hi = std::min(cap, 1e-4 * diam);
        if (std::abs(prob.f(r.point + hi * d) - f0) > ftol) return 0.0;
        while (hi < cap) {
            double next = std::min(cap, 2.0 * hi);
            if (std::abs(prob.f(r.point + next * d) - f0) > ftol) break;
            hi = next;
            if (next >= cap) break;
        }
        double bad = std::min(cap, 2.0 * hi);
        if (bad <= hi) return hi;
        for (int it = 0; it < 60; ++it) {
            double mid = 0.5 * (hi + bad);
            (std::abs(prob.f(r.point + mid * d) - f0) <= ftol ? hi : bad) = mid;
        }
        return hi;
    };

    double best_len = 0;
    Vec best_a, best_b;
    for (const auto& d : dirs) {
        double sp = extent(d), sm = extent(-d);
        if (sp + sm > best_len) {
            best_len = sp + sm;
            best_a = r.point - sm * d;
            best_b = r.point + sp * d;
        }
    }
    if (best_len >= need) {
        r.status = SolveStatus::FlatRegion;
        r.flat_segment = {best_a, best_b};
        r.point = 0.5 * (best_a + best_b);  // deterministic tie-break
        r.trace.push_back({best_a, prob.f(best_a)});
        r.trace.push_back({best_b, prob.f(best_b)});
    }
}

SolveResult nelder_mead(const InnerMinimizer& prob, const SolverOptions& opts,
                        const Vec* start = nullptr);

SolveResult descend(const InnerMinimizer& prob, const SolverOptions& opts) {
    SolveResult r;
    r.point = start_point(prob.K);
    double f0 = prob.f(r.point);
    double alpha_prev = 0.1 * body_diameter(prob.K);
    for (int it = 0; it < opts.max_iterations; ++it) {
        r.iterations = it + 1;
        Vec g = prob.grad(r.point);
        r.gradient_norm = norm(g);
        if (opts.keep_trace) r.trace.push_back({r.point, f0});
        if (r.gradient_norm <= opts.tol) {
            r.status = SolveStatus::Converged;
            break;
        }
        Vec d = -1.0 * g;
        double tmax = ray_clip(prob.K, r.point, d);
        double alpha = std::min(2.0 * alpha_prev, 0.9 * tmax);
        bool moved = false;
        for (int bt = 0; bt < 60; ++bt) {
            double ft = prob.f(r.point + alpha * d);
            if (ft < f0 - 1e-4 * alpha * r.gradient_norm * r.gradient_norm) {
                r.point += alpha * d;
                f0 = ft;
                alpha_prev = alpha;
                moved = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!moved) {
            // stalled: the gradient formula cannot certify below its own
            // quadrature error; hand over to the simplex fallback
            if (r.gradient_norm > opts.tol) {
                SolveResult nm = nelder_mead(prob, opts, &r.point);
                nm.iterations += r.iterations;
                return nm;
            }
            r.status = SolveStatus::Converged;
            break;
        }
    }
    if (r.status == SolveStatus::MaxIter && r.gradient_norm <= opts.tol)
        r.status = SolveStatus::Converged;
    r.value = prob.f(r.point);
    flat_probe(prob, opts, r);
    if (r.status == SolveStatus::FlatRegion) r.value = prob.f(r.point);
    return r;
}

SolveResult nelder_mead(const InnerMinimizer& prob, const SolverOptions& opts,
                        const Vec* start) {
    const int n = dim_of(prob.K);
    SolveResult r;
    Vec best = start ? *start : start_point(prob.K);
    double fbest = prob.f(best);
    double diam = std::max(body_diameter(prob.K), 1e-12);
    int evals = 0;
    double size = 0.25 * inradius_estimate(prob.K);
    double final_diam = size;

    for (int stage = 0; stage < 8 && size > 0.05 * opts.tol; ++stage, size *= 0.05) {
        double step = std::min(size, 0.49 * std::max(interior_margin(prob.K, best), 1e-14));
        std::vector<Vec> S(n + 1, best);
        for (int i = 0; i < n; ++i) {
            S[i + 1] = best + Vec::axis(n, i, step);
            if (interior_margin(prob.K, S[i + 1]) <= 0) S[i + 1] = best - Vec::axis(n, i, step);
        }
        std::vector<double> F;
        for (const auto& p : S) F.push_back(prob.f(p));
        evals += n + 1;
        for (int it = 0; it < opts.max_iterations * 4; ++it) {
            // order
            std::vector<int> idx(n + 1);
            for (int i = 0; i <= n; ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end(), [&](int a, int b) { return F[a] < F[b]; });
            std::vector<Vec> S2;
            std::vector<double> F2;
            for (int i = 0; i <= n; ++i) {
                S2.push_back(S[idx[i]]);
                F2.push_back(F[idx[i]]);
            }
            S = S2;
            F = F2;
            double d = 0;
            for (int i = 1; i <= n; ++i) d = std::max(d, dist(S[0], S[i]));
            final_diam = d;
            if (d <= std::max(opts.tol, 1e-14 * diam)) break;

            Vec c(n);
            for (int i = 0; i < n; ++i) c += S[i];
            c = c / static_cast<double>(n);
            Vec xr = c + (c - S[n]);
            double fr = prob.f(xr);
            ++evals;
            if (fr < F[0]) {
                Vec xe = c + 2.0 * (c - S[n]);
                double fe = prob.f(xe);
                ++evals;
                if (fe < fr) { S[n] = xe; F[n] = fe; }
                else { S[n] = xr; F[n] = fr; }
            } else if (fr < F[n - 1]) {
                S[n] = xr;
                F[n] = fr;
            } else {
                Vec xc = (fr < F[n]) ? c + 0.5 * (xr - c) : c + 0.5 * (S[n] - c);
                double fc = prob.f(xc);
                ++evals;
                if (fc < std::min(fr, F[n])) {
                    S[n] = xc;
                    F[n] = fc;
                } else {
                    for (int i = 1; i <= n; ++i) {
                        S[i] = S[0] + 0.5 * (S[i] - S[0]);
                        F[i] = prob.f(S[i]);
                        ++evals;
                    }
                }
            }
        }
        int bi = 0;
        for (int i = 1; i <= n; ++i)
            if (F[i] < F[bi]) bi = i;
        if (F[bi] < fbest || stage == 0) {
            fbest = F[bi];
            best = S[bi];
        }
    }
    r.point = best;
    r.iterations = evals;
    r.gradient_norm = final_diam;  // simplex-diameter criterion
    r.status = final_diam <= std::max(opts.tol, 1e-12 * diam) ? SolveStatus::Converged
                                                              : SolveStatus::MaxIter;
    r.value = prob.f(best);
    flat_probe(prob, opts, r);
    if (r.status == SolveStatus::FlatRegion) r.value = prob.f(r.point);
    return r;
}

InnerMinimizer ht_problem(const ConvexBody& K, const ConvexBody& B, const Resolution& res) {
    InnerMinimizer prob{K, {}, {}};
    double mtol = margin_tolerance(K);
    prob.f = [&K, &B, res, mtol](const Vec& x) {
        if (interior_margin(K, x) <= mtol) return kInf;
        return objective(x, K, B, res);
    };
    if (!is_polytope(B))
        prob.grad = [&K, &B, res](const Vec& x) { return gradient(x, K, B, res); };
    return prob;
}

}  // namespace

SolveResult santalo_point(const ConvexBody& K, const ConvexBody& B, const SolverOptions& opts,
                          const Resolution& res) {
    InnerMinimizer prob = ht_problem(K, B, res);
    if (prob.grad) return descend(prob, opts);
    return nelder_mead(prob, opts);
}

SolveResult classical_santalo_point(const ConvexBody& K, const SolverOptions& opts,
                                    const Resolution& res) {
    InnerMinimizer prob{K, {}, {}};
    double mtol = margin_tolerance(K);
    prob.f = [&K, res, mtol](const Vec& x) {
        if (interior_margin(K, x) <= mtol) return kInf;
        return classical_objective(x, K, res);
    };
    prob.grad = [&K, res](const Vec& x) { return classical_gradient(x, K, res); };
    return descend(prob, opts);
}

double strcvx_defect(const LinearHyperplane& H, const Vec& x1, const Vec& x2, const ConvexBody& K,
                     const Resolution& res) {
    double f1 = slice_polar_volume(K, H, x1, res);
    double f2 = slice_polar_volume(K, H, x2, res);
    double fm = slice_polar_volume(K, H, 0.5 * (x1 + x2), res);
    return f1 + f2 - 2.0 * fm;
}

NonUniqueExample nonunique_example(double eps0) {
    NonUniqueExample ex;
    ex.K = make_cube(2, 1.0);
    // facet directions: the x-axis and the line of slope 1/2, both with
    // |slope| <= 1 - eps0, hence zero midpoint defect for the pair below
    // normals (0,1) and (1,-2)/sqrt(5), offsets 1
    std::vector<Vec> pts;
    for (double s1 : {-1.0, 1.0})
        for (double s2 : {-1.0, 1.0}) {
            // intersection of <n1,y> = s1, <n2,y> = s2
            double y2 = s1;
            double y1 = (s2 * std::sqrt(5.0) + 2.0 * y2);
            pts.push_back(Vec(y1, y2));
        }
    ex.B = convex_hull(pts);
    ex.segment_a = Vec(0.0, -eps0);
    ex.segment_b = Vec(0.0, eps0);
    return ex;
}

std::vector<PropernessSample> properness_probe(const ConvexBody& K, const ConvexBody* B,
                                               const Vec& ray_direction, const Resolution& res) {
    SolverOptions opts;
    opts.tol = 1e-7;
    SolveResult s = B ? santalo_point(K, *B, opts, res) : classical_santalo_point(K, opts, res);
    Vec d = normalized(ray_direction);
    double tmax = ray_clip(K, s.point, d);
    auto value_at = [&](const Vec& x) {
        return B ? objective(x, K, *B, res) : classical_objective(x, K, res);
    };
    std::vector<PropernessSample> out;
    out.push_back({tmax, s.value});
    for (double bd : {1e-1, 1e-2, 1e-3}) {
        Vec x = s.point + (tmax - bd) * d;
        out.push_back({bd, value_at(x)});
    }
    return out;
}

}  // namespace santalo
