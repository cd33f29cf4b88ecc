#pragma once

#include <string>
#include <vector>

namespace spacecurve {

/// One invariant check: passes when residual <= tolerance. Ratio-style checks
/// (convergence order) report max(0, required - achieved) against zero.
struct CheckResult {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

const std::vector<std::string>& suite_names();  // geomcore, natural, zoo, acceptance

/// Run one named suite; throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace spacecurve
