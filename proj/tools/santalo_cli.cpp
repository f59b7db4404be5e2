// Command-line harness: body specs in, machine-readable JSON reports out.
//
// Exit codes: 0 ok, 2 input error, 3 solver did not converge, 4 property
// check failed.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <algorithm>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "santalo/body.hpp"
#include "santalo/experiments.hpp"
#include "santalo/report.hpp"
#include "santalo/solver.hpp"

namespace {

using namespace santalo;
using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 1729;

struct CommonOpts {
    std::string k_spec, b_spec, out_path, csv_path;
    std::uint64_t seed = kDefaultSeed;
    int resolution = 0;
    int count = 1;
    bool timing = false;
    std::vector<std::string> tol_overrides;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_k, bool needs_b) {
    if (needs_k) cmd->add_option("--k", o.k_spec, "body K (JSON file or inline spec)")->required();
    if (needs_b)
        cmd->add_option("--b", o.b_spec,
                        "norm body B (JSON file, inline spec, or euclid-classical)")
            ->required();
    cmd->add_option("--resolution", o.resolution,
                    "quadrature resolution: <=10 icosphere level (3D), larger values set the "
                    "number of 2D boundary normals");
    cmd->add_option("--seed", o.seed, "seed for randomized suites");
    cmd->add_option("--count", o.count, "multiplier for randomized instance counts");
    cmd->add_option("--tol", o.tol_overrides, "tolerance override name=value (repeatable)");
    cmd->add_option("--out", o.out_path, "write the JSON report to this path");
    cmd->add_option("--csv", o.csv_path, "write plot samples as CSV (nonunique-demo)");
    cmd->add_flag("--timing", o.timing, "include runtime_ms in the report (non-reproducible)");
}

Resolution resolution_from(const CommonOpts& o) {
    Resolution r;
    if (o.resolution > 0) {
        if (o.resolution <= 10) {
            r.sphere_level = o.resolution;
            r.circle_nodes = 512 << std::max(0, o.resolution - 4);
        } else {
            r.circle_nodes = o.resolution;
            double lvl = std::log(std::max(1.0, (o.resolution - 2.0) / 10.0)) / std::log(4.0);
            r.sphere_level = std::min(8, std::max(2, static_cast<int>(std::lround(lvl))));
        }
    }
    return r;
}

std::map<std::string, double> tol_map(const CommonOpts& o) {
    std::map<std::string, double> m;
    for (const auto& s : o.tol_overrides) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw SpecError("bad --tol override (want name=value): " + s);
        m[s.substr(0, eq)] = std::stod(s.substr(eq + 1));
    }
    return m;
}

ordered_json vec_json(const Vec& v) {
    ordered_json a = ordered_json::array();
    for (int i = 0; i < v.dim(); ++i) a.push_back(v[i]);
    return a;
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "Converged";
        case SolveStatus::MaxIter: return "MaxIter";
        case SolveStatus::FlatRegion: return "FlatRegion";
    }
    return "?";
}

int emit(Report& rep, const CommonOpts& o, long ms, int fail_code) {
    std::string text = to_json(rep, o.timing ? ms : -1);
    std::cout << text;
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) throw SpecError("cannot write report to " + o.out_path);
        f << text;
    }
    return rep.pass() ? 0 : fail_code;
}

int cmd_santalo(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    ConvexBody K = load_body_spec(o.k_spec);
    Resolution res = resolution_from(o);
    auto tols = tol_map(o);
    SolverOptions opts;
    opts.tol = tols.count("solver") ? tols["solver"] : 1e-6;

    SolveResult r;
    bool classical = (o.b_spec == "euclid-classical");
    if (classical) {
        r = classical_santalo_point(K, opts, res);
    } else {
        ConvexBody B = load_body_spec(o.b_spec);
        r = santalo_point(K, B, opts, res);
    }

    Report rep;
    rep.command = "santalo";
    rep.seed = o.seed;
    ordered_json extra;
    extra["point"] = vec_json(r.point);
    extra["value"] = r.value;
    extra["gradient_norm"] = r.gradient_norm;
    extra["iterations"] = r.iterations;
    extra["status"] = status_name(r.status);
    if (r.flat_segment) {
        extra["flat_segment"] = ordered_json::array(
            {vec_json(r.flat_segment->first), vec_json(r.flat_segment->second)});
    }
    extra["k"] = ordered_json::parse(body_spec_json(K));
    extra["b"] = classical ? ordered_json("euclid-classical")
                           : ordered_json::parse(body_spec_json(load_body_spec(o.b_spec)));
    rep.extra_json = extra.dump();
    rep.checks.push_back(
        {"solver converged", r.status == SolveStatus::MaxIter ? 0.0 : 1.0, 1.0, 0.0, "abs",
         r.status != SolveStatus::MaxIter});
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return emit(rep, o, ms, 3);
}

int cmd_first_variation(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    ConvexBody K = load_body_spec(o.k_spec);
    ConvexBody B = load_body_spec(o.b_spec);
    if (!is_polytope(K) || is_polytope(B))
        throw SpecError("first-variation-check wants a polytope K and a smooth B");
    Resolution res = resolution_from(o);
    auto tols = tol_map(o);
    double pass_tol = tols.count("pass") ? tols["pass"] : 1e-2;

    const Polytope& Kp = as_polytope(K);
    const int n = Kp.dim;
    double factor = (n + 1.0) / unit_ball_volume(n - 1);
    Vec C = dual_centroid(K, as_smooth(B), res);
    double area_scale = ht_area_dual(K, B, res);

    Report rep;
    rep.command = "first-variation-check";
    rep.seed = o.seed;
    for (int axis = 0; axis < n; ++axis)
        for (double sign : {1.0, -1.0}) {
            Vec v = Vec::axis(n, axis, sign);
            double fd = ht_area_translation_derivative(Kp, B, v, res);
            double an = factor * dot(C, v);
            std::string nm = "d/dt area along " + std::string(sign > 0 ? "+" : "-") + "e" +
                             std::to_string(axis + 1);
            // both sides vanish for symmetric bodies; floor the denominator
            // at a small multiple of the area scale
            double denom = std::max({std::abs(fd), std::abs(an), 1e-9 * area_scale});
            rep.checks.push_back(
                {nm, an, fd, pass_tol, "rel", std::abs(an - fd) / denom <= pass_tol});
        }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return emit(rep, o, ms, 4);
}

int cmd_checks(const CommonOpts& o, const std::string& only) {
    auto t0 = std::chrono::steady_clock::now();
    Resolution res = resolution_from(o);
    static const std::vector<std::string> known = {
        "anchors",      "duality",      "crofton-2d", "isoperimetric",
        "convexity",    "equivariance", "properness", "equiaffine"};
    if (!only.empty() && std::find(known.begin(), known.end(), only) == known.end())
        throw SpecError("unknown suite: " + only);
    Report rep;
    rep.command = "checks";
    rep.seed = o.seed;
    auto want = [&](const char* name) { return only.empty() || only == name; };
    auto append = [&rep](std::vector<CheckRecord> v) {
        rep.checks.insert(rep.checks.end(), v.begin(), v.end());
    };
    if (want("anchors")) append(suite_analytic_anchors(res));
    if (want("duality")) append(suite_duality(o.seed, o.count, res));
    if (want("crofton-2d")) append(suite_crofton_2d(o.seed + 1, o.count, res));
    if (want("isoperimetric")) append(suite_isoperimetric(o.seed + 2, o.count, res));
    if (want("convexity")) append(suite_convexity(o.seed + 3, o.count, res));
    if (want("equivariance")) append(suite_equivariance(o.seed + 4, o.count, res));
    if (want("properness")) append(suite_properness(res));
    if (want("equiaffine")) append(suite_equiaffine(o.seed + 5, res));
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return emit(rep, o, ms, 4);
}

int cmd_nonunique(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    Resolution res = resolution_from(o);
    NonUniqueExample ex = nonunique_example();
    ConvexBody K = ex.K, B = ex.B;

    Report rep;
    rep.command = "nonunique-demo";
    rep.seed = o.seed;
    rep.checks = suite_nonuniqueness(res);

    ordered_json extra;
    extra["k"] = ordered_json::parse(body_spec_json(K));
    extra["b"] = ordered_json::parse(body_spec_json(B));
    extra["segment"] = ordered_json::array({vec_json(ex.segment_a), vec_json(ex.segment_b)});
    ordered_json samples = ordered_json::array();
    std::ostringstream csv;
    csv.precision(17);
    csv << "t,value\n";
    for (int s = 0; s <= 10; ++s) {
        double t = s / 10.0;
        Vec x = ex.segment_a + t * (ex.segment_b - ex.segment_a);
        double v = objective(x, K, B, res);
        samples.push_back(ordered_json::array({t, v}));
        csv << t << "," << v << "\n";
    }
    extra["samples"] = samples;
    rep.extra_json = extra.dump();
    if (!o.csv_path.empty()) {
        std::ofstream f(o.csv_path, std::ios::binary);
        if (!f) throw SpecError("cannot write CSV to " + o.csv_path);
        f << csv.str();
    }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return emit(rep, o, ms, 4);
}

int cmd_ht_area(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    ConvexBody K = load_body_spec(o.k_spec);
    ConvexBody B = load_body_spec(o.b_spec);
    Resolution res = resolution_from(o);
    auto tols = tol_map(o);
    double gap_tol;
    if (is_polytope(K) && is_polytope(B)) gap_tol = 1e-9;
    else if (is_polytope(K)) gap_tol = 1e-5;
    else gap_tol = 1e-3;
    if (tols.count("duality")) gap_tol = tols["duality"];

    DualAreaPair p = ht_area_dual_pair(K, B, res);
    Report rep;
    rep.command = "ht-area";
    rep.seed = o.seed;
    rep.checks.push_back(check_rel("duality: polar side equals primal side", p.polar, p.primal,
                                   gap_tol));
    ordered_json extra;
    extra["area_primal"] = p.primal;           // A_K(boundary of B)
    extra["area_polar_route"] = p.polar;       // A_{B*}(boundary of K*)
    extra["ht_volume"] = ht_volume(B, K, res); // vol_K(B)
    rep.extra_json = extra.dump();
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return emit(rep, o, ms, 4);
}

int cmd_isoperimetric(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    ConvexBody K = load_body_spec(o.k_spec);
    ConvexBody B = load_body_spec(o.b_spec);
    Resolution res = resolution_from(o);
    auto tols = tol_map(o);
    double slack = tols.count("slack") ? tols["slack"] : 1e-9;
    IsoperimetricResult r = isoperimetric_ratio(K, B, res);
    Report rep;
    rep.command = "isoperimetric-check";
    rep.seed = o.seed;
    rep.checks.push_back(check_ge("isoperimetric ratio >= bound", r.ratio, r.bound, slack));
    ordered_json extra;
    extra["ratio"] = r.ratio;
    extra["bound"] = r.bound;
    rep.extra_json = extra.dump();
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return emit(rep, o, ms, 4);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Holmes-Thompson boundary areas and Santalo points for convex bodies"};
    app.require_subcommand(1);

    CommonOpts o_sant, o_fv, o_checks, o_nonuni, o_area, o_isop;
    std::string only_suite;

    CLI::App* c1 = app.add_subcommand("santalo", "minimize the boundary-area functional over int K");
    add_common(c1, o_sant, true, true);
    CLI::App* c2 = app.add_subcommand("first-variation-check",
                                      "dual-centroid derivative formula vs finite differences");
    add_common(c2, o_fv, true, true);
    CLI::App* c3 = app.add_subcommand("checks", "randomized property suites");
    add_common(c3, o_checks, false, false);
    c3->add_option("--suite", only_suite,
                   "run one suite: anchors|duality|crofton-2d|isoperimetric|convexity|"
                   "equivariance|properness|equiaffine");
    CLI::App* c4 = app.add_subcommand("nonunique-demo",
                                      "planar instance with a segment of minimizers");
    add_common(c4, o_nonuni, false, false);
    CLI::App* c5 = app.add_subcommand("ht-area", "Holmes-Thompson area of dK in the B norm");
    add_common(c5, o_area, true, true);
    CLI::App* c6 = app.add_subcommand("isoperimetric-check", "ratio against the sharp lower bound");
    add_common(c6, o_isop, true, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c1->parsed()) return cmd_santalo(o_sant);
        if (c2->parsed()) return cmd_first_variation(o_fv);
        if (c3->parsed()) return cmd_checks(o_checks, only_suite);
        if (c4->parsed()) return cmd_nonunique(o_nonuni);
        if (c5->parsed()) return cmd_ht_area(o_area);
        if (c6->parsed()) return cmd_isoperimetric(o_isop);
    } catch (const SpecError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const GeometryError& e) {
        std::cerr << "geometry error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
