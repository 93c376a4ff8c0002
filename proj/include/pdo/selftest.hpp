#pragma once

// The acceptance suite: one entry per checked claim, shared by the CLI
// `selftest` subcommand and the standalone acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

namespace pdo {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs every criterion (randomized parts driven by the seed) and reports
// pass/fail with a short computed-value summary each.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 12345);

}  // namespace pdo
