// Acceptance suite: runs every built-in criterion and prints one pass/fail
// line per criterion. Exits nonzero when any criterion fails.

#include <cstdio>

#include "bistellar/verify.hpp"

int main() {
    auto results = bistellar::verify::run_all();
    for (const auto& r : results) {
        std::printf("%s %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str());
        if (!r.passed) std::printf("     %s\n", r.detail.c_str());
    }
    bool ok = bistellar::verify::all_passed(results);
    std::printf("%s: %zu criteria\n", ok ? "ALL PASSED" : "FAILURES PRESENT",
                results.size());
    return ok ? 0 : 1;
}
