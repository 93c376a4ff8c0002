// Acceptance gate: runs every criterion of the deliverable checklist and
// prints one PASS/FAIL line each. Nonzero exit when anything fails.

#include <cstdio>
#include <string>

#include "pdo/selftest.hpp"

int main() {
    auto results = pdo::run_acceptance();
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] %2d %-52s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL",
                    r.id, r.name.c_str(), r.seconds,
                    r.detail.empty() || r.pass ? "" : " -- ",
                    r.detail.empty() || r.pass ? "" : r.detail.c_str());
        if (!r.pass) all = false;
    }
    std::printf("%s\n", all ? "acceptance: all criteria hold"
                            : "acceptance: FAILURES PRESENT");
    return all ? 0 : 1;
}
