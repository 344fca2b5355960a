#include "rcs/repro.hpp"

#include <chrono>

namespace rcs {

namespace repro_detail {
std::vector<Check> build_registry();  // defined in repro_checks.cpp
}

const std::vector<Check>& check_registry() {
    static const std::vector<Check> reg = repro_detail::build_registry();
    return reg;
}

ReproReport run_reproduce(const std::string& only, std::uint64_t seed) {
    ReproReport rep;
    rep.all_pass = true;
    for (const Check& c : check_registry()) {
        if (!only.empty() && c.name.find(only) == std::string::npos) continue;
        CheckResult res;
        res.name = c.name;
        res.budget_seconds = c.budget_seconds;
        auto start = std::chrono::steady_clock::now();
        try {
            CheckOutcome out = c.fn(seed);
            res.pass = out.pass;
            res.expected = out.expected;
            res.computed = out.computed;
        } catch (const std::exception& e) {
            res.pass = false;
            res.computed = std::string("exception: ") + e.what();
        }
        auto stop = std::chrono::steady_clock::now();
        res.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (res.pass && res.elapsed_ms > c.budget_seconds * 1000) {
            res.pass = false;
            res.computed += " [exceeded " + std::to_string(c.budget_seconds) + " s budget]";
        }
        rep.all_pass = rep.all_pass && res.pass;
        rep.checks.push_back(std::move(res));
    }
    if (rep.checks.empty()) rep.all_pass = false;
    return rep;
}

}  // namespace rcs
