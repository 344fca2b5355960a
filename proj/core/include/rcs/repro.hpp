#pragma once

// The reproduction harness: every acceptance criterion as a named
// check with its time budget pinned. The CLI `reproduce` subcommand and
// the acceptance test binary both run through this registry.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rcs {

struct CheckOutcome {
    bool pass = false;
    std::string expected;
    std::string computed;
};

struct CheckResult {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
    double elapsed_ms = 0;
    double budget_seconds = 0;
};

struct ReproReport {
    std::vector<CheckResult> checks;
    bool all_pass = false;
};

struct Check {
    std::string name;
    double budget_seconds;
    std::function<CheckOutcome(std::uint64_t seed)> fn;
};

const std::vector<Check>& check_registry();

// Runs the registered checks (all, or the ones whose name contains
// `only`); failures are collected, never fatal.
ReproReport run_reproduce(const std::string& only = "", std::uint64_t seed = 1);

std::string report_to_json(const ReproReport& r, bool include_timing = true);
ReproReport report_from_json(const std::string& text);

}  // namespace rcs
