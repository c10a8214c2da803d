// Acceptance run: one line per criterion. Criteria 1-10 come from the first full run,
// timed per suite; criterion 11 repeats the run and compares the serialized reports.

#include "dunkl/suites.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

using namespace dunkl;

namespace {

struct Criterion {
    int id;
    const char* title;
    std::vector<std::string> suites;
    double seconds;  ///< runtime limit
};

const std::vector<Criterion> kCriteria = {
    {1, "normalization closure", {"normalization"}, 1.0},
    {2, "Plancherel isometry defect", {"plancherel"}, 10.0},
    {3, "Gaussian self-reciprocity", {"self-reciprocity"}, 30.0},
    {4, "multiplier identity on a 10^4-point lattice", {"kernel-identity"}, 1.0},
    {5, "Young and translation bounds", {"translation-young"}, 60.0},
    {6, "Bessel gap ratio bounds and small-s limit", {"bessel-gap"}, 5.0},
    {7, "transform estimates in dimension one", {"transform-estimates"}, 120.0},
    {8, "L1 integrability demo", {"l1-integrability"}, 30.0},
    {9, "radial d=2 estimates", {"radial-estimates"}, 120.0},
    {10, "Besov-Dunkl decomposition suite", {"besov"}, 120.0},
};

constexpr double kFullRunSeconds = 300.0;

struct Timed {
    Report report;
    std::map<std::string, double> seconds;
    double total = 0.0;
};

Timed run_all(const VerifyConfig& cfg)
{
    Timed out;
    out.report.config = cfg.to_json();
    auto const start = std::chrono::steady_clock::now();
    for (const auto& name : suite_names()) {
        auto const t0 = std::chrono::steady_clock::now();
        out.report.suites.push_back(run_suite(name, cfg));
        out.seconds[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    out.total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

void print_failures(const SuiteReport& s)
{
    if (!s.error.empty()) std::printf("      error: %s\n", s.error.c_str());
    for (const auto& r : s.records) {
        if (r.status != Status::fail && r.status != Status::under_resolved) continue;
        std::printf("      %s %s %s lhs=%.6g rhs=%.6g\n", to_string(r.status), r.name.c_str(), r.inputs.dump().c_str(),
                    r.lhs, r.rhs);
    }
}

}  // namespace

int main()
{
    VerifyConfig const cfg;
    cfg.validate();
    Timed const first = run_all(cfg);

    int failed = 0;
    for (const auto& c : kCriteria) {
        bool ok = true;
        double secs = 0.0;
        std::size_t records = 0;
        for (const auto& name : c.suites) {
            for (const auto& s : first.report.suites)
                if (s.name == name) {
                    ok = ok && s.passed();
                    records += s.records.size();
                }
            secs += first.seconds.at(name);
        }
        bool const fast = secs < c.seconds;
        bool const pass = ok && fast;
        failed += !pass;
        std::printf("criterion %2d: %s  %s (%zu records, %.2f s, limit %.0f s)%s\n", c.id, pass ? "PASS" : "FAIL",
                    c.title, records, secs, c.seconds, fast ? "" : " runtime exceeded");
        if (!ok)
            for (const auto& s : first.report.suites)
                for (const auto& name : c.suites)
                    if (s.name == name) print_failures(s);
        std::fflush(stdout);
    }

    Timed const second = run_all(cfg);
    bool const identical = first.report.dump() == second.report.dump();
    bool const fast = first.total < kFullRunSeconds && second.total < kFullRunSeconds;
    bool const pass = identical && fast;
    failed += !pass;
    std::printf("criterion 11: %s  deterministic full run (byte-identical: %s, %.1f s and %.1f s, limit %.0f s)\n",
                pass ? "PASS" : "FAIL", identical ? "yes" : "no", first.total, second.total, kFullRunSeconds);
    std::printf("%d of %zu criteria failed\n", failed, kCriteria.size() + 1);
    return failed == 0 ? 0 : 1;
}
