#include "santalo/report.hpp"

#include <cmath>

#include <json.hpp>

namespace santalo {

using ordered_json = nlohmann::ordered_json;

CheckRecord check_abs(const std::string& name, double computed, double expected, double tol) {
    return {name, computed, expected, tol, "abs", std::abs(computed - expected) <= tol};
}

CheckRecord check_rel(const std::string& name, double computed, double expected, double tol) {
    double denom = std::max(std::abs(expected), 1e-300);
    return {name, computed, expected, tol, "rel", std::abs(computed - expected) / denom <= tol};
}

CheckRecord check_ge(const std::string& name, double computed, double bound, double slack) {
    return {name, computed, bound, slack, "ge", computed >= bound - slack};
}

CheckRecord check_le(const std::string& name, double computed, double bound, double slack) {
    return {name, computed, bound, slack, "le", computed <= bound + slack};
}

std::string to_json(const Report& r, long timing_ms) {
    ordered_json j;
    j["command"] = r.command;
    j["library_version"] = kLibraryVersion;
    j["seed"] = r.seed;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["computed"] = c.computed;
        cj["expected"] = c.expected;
        cj["tolerance"] = c.tolerance;
        cj["cmp"] = c.cmp;
        cj["pass"] = c.pass;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["pass"] = r.pass();
    if (!r.extra_json.empty()) j["result"] = ordered_json::parse(r.extra_json);
    if (timing_ms >= 0) j["runtime_ms"] = timing_ms;
    return j.dump(2) + "\n";
}

}  // namespace santalo
