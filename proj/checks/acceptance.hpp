#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trgr::checks {

enum class CheckStatus { Pass, Fail, Diverged };

struct CheckResult {
    int id = 0;
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    std::string details;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    std::vector<std::uint64_t> seeds{1, 2, 3};
    long groebner_budget = 100000;
    int groebner_var_cap = 12;
    int vanish_samples = 200;   // per seed
    int demazure_samples = 500; // per (n, d)
    int probe_curves = 20;
    int smooth_samples = 50;
};

const char* status_name(CheckStatus s);

/// The full acceptance battery; every check is exact (no tolerances).
std::vector<CheckResult> run_acceptance(const AcceptanceOptions& opts = {});

}  // namespace trgr::checks
