#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace galdef {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// The acceptance battery: every numbered criterion, exact tolerances.
/// Deterministic for a fixed seed.
std::vector<CriterionResult> run_acceptance(uint64_t seed);

/// Single criterion by index (1-based).
CriterionResult run_criterion(int index, uint64_t seed);

int acceptance_criteria_count();

} // namespace galdef
