// One PASS/FAIL line per acceptance criterion; exit status 1 when any fails.
#include <cstdio>

#include "operadkit/verify.hpp"

int main() {
    int failed = 0;
    operadkit::run_acceptance([&](const operadkit::CheckResult& r) {
        std::printf("%s  %d. %s  (%.2f s", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
        if (r.budget_seconds > 0) std::printf(", budget %.0f s", r.budget_seconds);
        std::printf(")\n");
        for (const auto& d : r.details) std::printf("        %s\n", d.c_str());
        std::fflush(stdout);
        failed += !r.pass;
    });
    std::printf("%s\n", failed ? "acceptance: FAILED" : "acceptance: all criteria pass");
    return failed ? 1 : 0;
}
