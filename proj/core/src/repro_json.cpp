#include <json.hpp>

#include "rcs/repro.hpp"

namespace rcs {

std::string report_to_json(const ReproReport& r, bool include_timing) {
    nlohmann::json j;
    j["all_pass"] = r.all_pass;
    j["checks"] = nlohmann::json::array();
    for (const CheckResult& c : r.checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["expected"] = c.expected;
        e["computed"] = c.computed;
        e["pass"] = c.pass;
        e["budget_seconds"] = c.budget_seconds;
        if (include_timing) e["elapsed_ms"] = c.elapsed_ms;
        j["checks"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

ReproReport report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ReproReport r;
    r.all_pass = j.at("all_pass").get<bool>();
    for (const auto& e : j.at("checks")) {
        CheckResult c;
        c.name = e.at("name").get<std::string>();
        c.expected = e.at("expected").get<std::string>();
        c.computed = e.at("computed").get<std::string>();
        c.pass = e.at("pass").get<bool>();
        c.budget_seconds = e.at("budget_seconds").get<double>();
        if (e.contains("elapsed_ms")) c.elapsed_ms = e.at("elapsed_ms").get<double>();
        r.checks.push_back(std::move(c));
    }
    return r;
}

}  // namespace rcs
