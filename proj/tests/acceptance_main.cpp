// Acceptance suite: runs every verification suite at the full grid and
// enforces the per-criterion runtime budgets. One line per criterion.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "idp/verify.hpp"

#ifndef IDP_SOURCE_DIR
#define IDP_SOURCE_DIR "."
#endif

namespace {

struct Criterion {
    int number;
    const char* suite;
    const char* label;
    double budget_seconds;
};

const Criterion kCriteria[] = {
    {1, "relations", "algebra relations in U and on L(mu)", 10.0},
    {2, "golden-examples", "printed examples reproduced byte-for-byte", 5.0},
    {3, "expansion-equality", "recursive == closed-t == EhF == FhE", 120.0},
    {4, "ipolys", "polynomial propositions, integrality, positivity", 10.0},
    {5, "integrality", "A-form membership of the divided powers", 120.0},
    {6, "module-oracle", "closed module action equals generic action", 60.0},
    {7, "lattice", "iCB lattice thresholds and negative witness", 60.0},
    {8, "sigma", "anti-involution exchanges the two orderings", 60.0},
    {9, "genk", "arbitrary-kappa second divided powers", 30.0},
    {10, "degree", "top q-degree of p^(n) at even kappa", 1.0},
};

} // namespace

int main(int argc, char** argv) {
    idp::GridOptions opt;
    opt.golden_dir = std::string(IDP_SOURCE_DIR) + "/tests/golden";
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--golden-dir") == 0 && i + 1 < argc)
            opt.golden_dir = argv[++i];
        else if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc)
            opt.jobs = std::atoi(argv[++i]);
    }

    int failures = 0;
    for (const Criterion& c : kCriteria) {
        const auto reports = idp::run_suites(c.suite, opt);
        bool pass = true;
        int cases = 0, failed = 0;
        double seconds = 0.0;
        std::string first_fail;
        for (const auto& r : reports) {
            cases += static_cast<int>(r.cases.size());
            failed += r.failures();
            seconds += r.wall_seconds;
            for (const auto& cr : r.cases)
                if (!cr.pass && first_fail.empty())
                    first_fail = cr.name + (cr.detail.empty() ? "" : " :: " + cr.detail);
            pass = pass && r.all_pass();
        }
        const bool in_budget = seconds < c.budget_seconds;
        const bool ok = pass && in_budget;
        if (!ok) ++failures;
        std::printf("[%s] criterion %2d: %s — %d/%d checks, %.2f s (budget %.0f s)\n",
                    ok ? "PASS" : "FAIL", c.number, c.label, cases - failed, cases, seconds,
                    c.budget_seconds);
        if (!pass) std::printf("       first failure: %s\n", first_fail.c_str());
        if (pass && !in_budget) std::printf("       over runtime budget\n");
        std::fflush(stdout);
    }
    if (failures) std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
    else std::printf("ACCEPTANCE: all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
