#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace fano {

struct RunConfig {
    std::uint64_t seed = 1;
    std::vector<unsigned long> primes = {2, 3, 5, 7};
    unsigned ext_bound = 2;
    long sunit_bound = 5;
    int jobs = 1;
    std::string out; // JSON-lines file; empty writes nowhere

    std::string to_json() const;
};

enum class CheckStatus { Pass, Fail, Inconclusive };

struct CheckEntry {
    std::string id;
    CheckStatus status = CheckStatus::Inconclusive;
    std::string expected;
    std::string computed;
    std::string detail; // witness or reason; required unless Pass

    static CheckEntry pass(std::string id, std::string expected, std::string computed,
                           std::string detail = "");
    static CheckEntry fail(std::string id, std::string expected, std::string computed,
                           std::string detail);
    static CheckEntry inconclusive(std::string id, std::string expected, std::string detail);
};

struct ReportBundle {
    RunConfig config;
    std::vector<CheckEntry> entries;

    void add(CheckEntry e);
    void sort_by_id(); // deterministic output order
    // 0 all pass, 1 any fail, 2 no fail but some inconclusive
    int exit_code() const;
    // one JSON object per check, then a summary object; no volatile fields,
    // so the bytes are identical across runs with one config
    std::string to_json_lines() const;
    std::string summary_line() const;
};

// convenience bridge for boolean library check results
CheckEntry entry_from_flag(const std::string& id, bool pass, const std::string& detail);

} // namespace fano
