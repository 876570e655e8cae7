#include "fano/report.hpp"

#include <algorithm>
#include <json.hpp>

namespace fano {

using nlohmann::json;

namespace {

const char* status_str(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

} // namespace

std::string RunConfig::to_json() const {
    json j;
    j["seed"] = seed;
    j["primes"] = primes;
    j["ext_bound"] = ext_bound;
    j["sunit_bound"] = sunit_bound;
    // jobs and the output path do not affect any computed value, so they stay
    // out of the serialized config and the report bytes
    return j.dump();
}

CheckEntry CheckEntry::pass(std::string id, std::string expected, std::string computed,
                            std::string detail) {
    return {std::move(id), CheckStatus::Pass, std::move(expected), std::move(computed),
            std::move(detail)};
}

CheckEntry CheckEntry::fail(std::string id, std::string expected, std::string computed,
                            std::string detail) {
    if (detail.empty()) detail = "computed value disagrees with the expected one";
    return {std::move(id), CheckStatus::Fail, std::move(expected), std::move(computed),
            std::move(detail)};
}

CheckEntry CheckEntry::inconclusive(std::string id, std::string expected, std::string detail) {
    if (detail.empty()) detail = "could not be decided within the configured bounds";
    return {std::move(id), CheckStatus::Inconclusive, std::move(expected), "", std::move(detail)};
}

void ReportBundle::add(CheckEntry e) { entries.push_back(std::move(e)); }

void ReportBundle::sort_by_id() {
    std::sort(entries.begin(), entries.end(),
              [](const CheckEntry& a, const CheckEntry& b) { return a.id < b.id; });
}

int ReportBundle::exit_code() const {
    bool inconclusive = false;
    for (const auto& e : entries) {
        if (e.status == CheckStatus::Fail) return 1;
        if (e.status == CheckStatus::Inconclusive) inconclusive = true;
    }
    return inconclusive ? 2 : 0;
}

std::string ReportBundle::to_json_lines() const {
    std::string out;
    for (const auto& e : entries) {
        json j;
        j["check"] = e.id;
        j["status"] = status_str(e.status);
        j["expected"] = e.expected;
        j["computed"] = e.computed;
        j["detail"] = e.detail;
        j["seed"] = config.seed;
        out += j.dump();
        out += '\n';
    }
    out += summary_line();
    out += '\n';
    return out;
}

std::string ReportBundle::summary_line() const {
    json j;
    int pass = 0, fail = 0, inc = 0;
    for (const auto& e : entries) {
        if (e.status == CheckStatus::Pass) ++pass;
        if (e.status == CheckStatus::Fail) ++fail;
        if (e.status == CheckStatus::Inconclusive) ++inc;
    }
    j["summary"] = {{"pass", pass}, {"fail", fail}, {"inconclusive", inc}};
    j["config"] = json::parse(config.to_json());
    return j.dump();
}

CheckEntry entry_from_flag(const std::string& id, bool pass, const std::string& detail) {
    if (pass) return CheckEntry::pass(id, "pass", "pass", detail);
    return CheckEntry::fail(id, "pass", "fail", detail);
}

} // namespace fano
