#pragma once

#include <string>
#include <vector>

namespace santalo {

inline constexpr const char* kLibraryVersion = "1.0.0";

// One recorded comparison. cmp is "abs" (|computed-expected| <= tol),
// "rel" (relative error <= tol), "ge" (computed >= expected - tol) or
// "le" (computed <= expected + tol).
struct CheckRecord {
    std::string name;
    double computed = 0;
    double expected = 0;
    double tolerance = 0;
    std::string cmp = "abs";
    bool pass = false;
};

CheckRecord check_abs(const std::string& name, double computed, double expected, double tol);
CheckRecord check_rel(const std::string& name, double computed, double expected, double tol);
CheckRecord check_ge(const std::string& name, double computed, double bound, double slack);
CheckRecord check_le(const std::string& name, double computed, double bound, double slack);

struct Report {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;
    std::string extra_json;  // command-specific payload, already serialized
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Deterministic serialization: identical inputs give identical bytes.
// runtime_ms is attached only when timing_ms >= 0 so that default reports
// stay byte-reproducible.
std::string to_json(const Report& r, long timing_ms = -1);

}  // namespace santalo
