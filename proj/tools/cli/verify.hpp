#pragma once

#include <functional>
#include <string>
#include <vector>

#include <utcochar/closedform.hpp>

#include "render.hpp"

namespace utcochar::cli
{

struct CheckResult {
    std::string name;
    std::string description;
    std::vector<ClosedFormReport> reports;
    double seconds = 0.0;

    bool passed() const;
    std::size_t failures() const;
};

struct VerificationReport {
    int k = 0;
    std::size_t d = 0;
    int degree_bound = 0;
    std::vector<CheckResult> checks;

    std::size_t passed_count() const;
    // "PASS m/n" or "FAIL m/n".
    std::string summary() const;
};

// Check names in run order.
const std::vector<std::string> &all_check_names();

// Checks that apply to k (closed multiplicity forms need k ≤ 3, colength
// forms k ≤ 4, recurrence and monotonicity k ≥ 2).
std::vector<std::string> applicable_checks(int k);

// Runs the requested checks (all applicable ones when `checks` is empty).
// Throws std::invalid_argument for an unknown or inapplicable name. `progress`
// receives one line per finished check, including its timing.
VerificationReport run_verification(int k, std::size_t d, int degree_bound, const std::vector<std::string> &checks,
                                    const std::function<void(const std::string &)> &progress = {});

// Text rendering has no timings so identical runs give identical bytes.
std::string render_verification(const VerificationReport &report, Format format);

} // namespace utcochar::cli
