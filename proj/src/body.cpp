#include "santalo/body.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace santalo {

using nlohmann::json;

double support(const ConvexBody& K, const Vec& u) {
    if (norm(u) == 0.0) throw ZeroDirection();
    if (is_polytope(K)) return as_polytope(K).support(u);
    return as_smooth(K).support(u);
}

double body_scale(const ConvexBody& K) {
    return std::visit([](const auto& b) { return b.scale(); }, K);
}

ConvexBody translated(const ConvexBody& K, const Vec& t) {
    if (is_polytope(K)) return as_polytope(K).translated(t);
    if (norm(t) > 0) throw SpecError("smooth bodies do not support translation");
    return K;
}

namespace {

Vec parse_vec(const json& j, int expect_dim = -1) {
    if (!j.is_array() || j.size() < 1 || j.size() > 4) throw SpecError("bad vector in body spec");
    Vec v(static_cast<int>(j.size()));
    for (int i = 0; i < v.n; ++i) v[i] = j[i].get<double>();
    if (expect_dim > 0 && v.n != expect_dim) throw SpecError("inconsistent dimensions in body spec");
    return v;
}

Mat parse_mat(const json& j) {
    if (!j.is_array() || j.empty()) throw SpecError("bad matrix in body spec");
    int n = static_cast<int>(j.size());
    Mat M(n);
    for (int i = 0; i < n; ++i) {
        Vec row = parse_vec(j[i], n);
        for (int k = 0; k < n; ++k) M(i, k) = row[k];
    }
    return M;
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (int i = 0; i < v.n; ++i) a.push_back(v[i]);
    return a;
}

json mat_json(const Mat& M) {
    json a = json::array();
    for (int i = 0; i < M.n; ++i) a.push_back(vec_json(M.row(i)));
    return a;
}

}  // namespace

ConvexBody parse_body_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw SpecError(std::string("body spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type")) throw SpecError("body spec needs a \"type\" field");
    std::string type = j["type"].get<std::string>();
    if (type == "polytope") {
        if (!j.contains("vertices")) throw SpecError("polytope spec needs \"vertices\"");
        std::vector<Vec> pts;
        int d = -1;
        for (const auto& row : j["vertices"]) {
            pts.push_back(parse_vec(row, d));
            d = pts.back().n;
        }
        Polytope P = convex_hull(pts);
        validate(P);
        return P;
    }
    if (type == "ellipsoid") {
        if (!j.contains("Q")) throw SpecError("ellipsoid spec needs \"Q\"");
        return make_ellipsoid(parse_mat(j["Q"]));
    }
    if (type == "ball") {
        double r = j.value("radius", 1.0);
        int d = j.value("dim", 2);
        return make_ball(d, r);
    }
    if (type == "perturbed_ball") {
        double e = j.value("eps", 0.0);
        if (!j.contains("harmonic")) throw SpecError("perturbed_ball spec needs \"harmonic\"");
        const json& h = j["harmonic"];
        Mat S = parse_mat(h.at("quadratic"));
        double c = h.value("quartic", 0.0);
        return make_perturbed_ball(S.n, e, S, c);
    }
    throw SpecError("unknown body type: " + type);
}

ConvexBody load_body_spec(const std::string& arg) {
    std::string text = arg;
    if (arg.find('{') == std::string::npos) {
        std::ifstream in(arg);
        if (!in) throw SpecError("cannot open body spec file: " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return parse_body_spec(text);
}

std::string body_spec_json(const ConvexBody& K) {
    json j;
    if (is_polytope(K)) {
        j["type"] = "polytope";
        json verts = json::array();
        for (const auto& v : as_polytope(K).vertices) verts.push_back(vec_json(v));
        j["vertices"] = verts;
    } else {
        const SmoothBody& B = as_smooth(K);
        if (B.kind == SmoothBody::Kind::Ellipsoid) {
            j["type"] = "ellipsoid";
            j["Q"] = mat_json(B.Q);
        } else {
            j["type"] = "perturbed_ball";
            j["eps"] = B.eps;
            j["harmonic"] = {{"quadratic", mat_json(B.S)}, {"quartic", B.quartic}};
        }
    }
    return j.dump();
}

}  // namespace santalo
