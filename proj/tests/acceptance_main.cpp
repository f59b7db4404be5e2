// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Criteria (tolerances pinned in the suites and assertions below):
//   1  analytic anchors            2  duality of the boundary areas
//   3  planar symplectic check     4  classical derivative + triangle point
//   5  first variation formula     6  equiaffine structure
//   7  convexity probes            8  non-uniqueness demo
//   9  isoperimetric inequality   10  affine-invariant point
//  11  properness blow-up

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "santalo/experiments.hpp"

using namespace santalo;

namespace {

int failures = 0;

void criterion(int id, const std::string& label, const std::vector<CheckRecord>& recs,
               long budget_ms, long actual_ms) {
    bool ok = true;
    const CheckRecord* worst = nullptr;
    for (const auto& r : recs)
        if (!r.pass) {
            ok = false;
            worst = &r;
            break;
        }
    bool in_budget = actual_ms <= budget_ms;
    if (!ok || !in_budget) ++failures;
    std::printf("[%s] criterion %2d: %s (%zu checks, %ld ms / budget %ld ms)\n",
                (ok && in_budget) ? "PASS" : "FAIL", id, label.c_str(), recs.size(), actual_ms,
                budget_ms);
    if (worst)
        std::printf("       first failing check: %s (computed=%.6e expected=%.6e tol=%.1e %s)\n",
                    worst->name.c_str(), worst->computed, worst->expected, worst->tolerance,
                    worst->cmp.c_str());
    if (!in_budget) std::printf("       runtime budget exceeded\n");
}

template <typename F>
std::pair<std::vector<CheckRecord>, long> timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckRecord> recs = f();
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    return {recs, ms};
}

}  // namespace

int main() {
    Resolution res;
    const std::uint64_t seed = 20250809;

    {
        auto [recs, ms] = timed([&] { return suite_analytic_anchors(res); });
        criterion(1, "analytic anchors: 2pi / 8 / pi", recs, 1000, ms);
    }
    {
        auto [recs, ms] = timed([&] { return suite_duality(seed, 1, res); });
        criterion(2, "duality A_{B*}(dK*) = A_K(dB), 50+20 polytope pairs and mixed pairs", recs,
                  30000, ms);
    }
    {
        auto [recs, ms] = timed([&] { return suite_crofton_2d(seed + 1, 1, res); });
        criterion(3, "planar double-integral cross-check, 20 pairs", recs, 30000, ms);
    }
    {
        auto [recs, ms] = timed([&] { return suite_classical_variation(seed + 2, 2, res); });
        criterion(4, "classical polar-volume derivative and triangle Santalo point", recs, 60000,
                  ms);
    }
    {
        auto [recs, ms] = timed([&] { return suite_first_variation(seed + 3, res); });
        criterion(5, "first variation: dual-centroid formula vs finite differences", recs, 300000,
                  ms);
    }
    {
        auto [recs, ms] = timed([&] { return suite_equiaffine(seed + 4, res); });
        criterion(6, "equiaffine normal conditions and L identities", recs, 60000, ms);
    }
    {
        auto [recs, ms] = timed([&] { return suite_convexity(seed + 5, 1, res); });
        criterion(7, "convexity: midpoint defects, strictness, self-norm non-flatness", recs,
                  60000, ms);
    }
    {
        auto [recs, ms] = timed([&] { return suite_nonuniqueness(res); });
        criterion(8, "non-uniqueness demo: flat segment with zero-defect certificates", recs, 5000,
                  ms);
    }
    {
        auto [recs, ms] = timed([&] { return suite_isoperimetric(seed + 6, 1, res); });
        criterion(9, "isoperimetric inequality on 50 random pairs, n = 2 and 3", recs, 60000, ms);
    }
    {
        auto [recs, ms] = timed([&] { return suite_equivariance(seed + 7, 5, res); });
        criterion(10, "affine-invariant point: equivariance and continuity", recs, 300000, ms);
    }
    {
        auto [recs, ms] = timed([&] { return suite_properness(res); });
        criterion(11, "properness: blow-up along boundary rays", recs, 10000, ms);
    }

    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 11 acceptance criteria passed\n");
    return 0;
}
