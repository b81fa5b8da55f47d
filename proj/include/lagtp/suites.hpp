#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lagtp {

struct SuiteOptions {
    std::uint64_t seed = 42;
    int max_n = 0;  // 0 keeps each check's default size
    int samples = 100;
};

struct CheckResult {
    std::string suite, name;
    bool ok = false;
    std::string detail;
    double ms = 0;
};

struct SuiteReport {
    std::vector<CheckResult> checks;

    bool ok() const;
    // Timing is left out unless asked for, so that reports are reproducible.
    nlohmann::json to_json(bool with_timing) const;
};

// all, univariate, multivariate, riordan, srpaths, quadtp, banded
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// Checks run in suite-definition order; an exception inside a check fails it.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt,
                      const std::function<void(const CheckResult&)>& progress = {});

}  // namespace lagtp
