#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace blockspec {

/// One named check: value compared against bound under the stated relation.
struct CheckResult {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    std::string relation = "<=";
    bool pass = false;
};

CheckResult check_le(const std::string& name, double value, double bound);
CheckResult check_ge(const std::string& name, double value, double bound);

/// Every module's Invariants & Properties at the scales the contracts state.
std::vector<CheckResult> run_invariant_checks(std::uint64_t seed);

/// The ten acceptance criteria at their stated tolerances.
std::vector<CheckResult> run_acceptance_checks(std::uint64_t seed);

void write_check_report(const std::filesystem::path& path,
                        const std::vector<CheckResult>& checks);

} // namespace blockspec
