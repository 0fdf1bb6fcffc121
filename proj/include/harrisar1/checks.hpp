#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "harrisar1/verify.hpp"

namespace harrisar1 {

/// Outcome of one named check: a bundle of reports plus the overall verdict.
/// For ordinary reports the verdict is "every report passed"; negative
/// controls invert their own pass flag internally, so the rule is uniform.
struct CheckResult {
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::vector<VerificationReport> reports;

    nlohmann::ordered_json to_json() const;
};

struct NamedCheck {
    std::string name;
    std::string summary;
    std::function<CheckResult(std::uint64_t seed)> run;
};

/// The full verification suite in execution order.  Statistical checks draw
/// from substreams of the given seed; residual checks ignore it.
const std::vector<NamedCheck>& check_registry();

/// nullptr when no check carries that name.
const NamedCheck* find_check(const std::string& name);

/// Runs one named check; throws std::invalid_argument for unknown names.
CheckResult run_check(const std::string& name, std::uint64_t seed);

} // namespace harrisar1
