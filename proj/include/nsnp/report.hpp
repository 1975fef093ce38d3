#pragma once

// Structured pass/fail/lint reporting. A suite passes iff it has zero
// fail entries; lint marks a paper-internal inconsistency, with ground
// truth taken from brute force.

#include <string>
#include <vector>

#include <json.hpp>

namespace nsnp {

enum class CheckStatus { Pass, Fail, Lint };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Lint: return "lint";
    }
    return "?";
}

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string expected;
    std::string actual;
    std::string note;
};

struct VerificationReport {
    std::string suite;
    std::string data_checksum;  // set for suites that consume bundled data
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string expected = "",
             std::string actual = "", std::string note = "") {
        checks.push_back({std::move(name),
                          ok ? CheckStatus::Pass : CheckStatus::Fail,
                          std::move(expected), std::move(actual),
                          std::move(note)});
    }

    void lint(std::string name, std::string expected, std::string actual,
              std::string note = "") {
        checks.push_back({std::move(name), CheckStatus::Lint,
                          std::move(expected), std::move(actual),
                          std::move(note)});
    }

    std::size_t count(CheckStatus s) const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (c.status == s) ++n;
        return n;
    }

    bool passed() const { return count(CheckStatus::Fail) == 0; }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["suite"] = suite;
        if (!data_checksum.empty()) j["data_checksum"] = data_checksum;
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json jc;
            jc["name"] = c.name;
            jc["status"] = to_string(c.status);
            if (!c.expected.empty()) jc["expected"] = c.expected;
            if (!c.actual.empty()) jc["actual"] = c.actual;
            if (!c.note.empty()) jc["note"] = c.note;
            j["checks"].push_back(jc);
        }
        j["summary"] = {{"pass", count(CheckStatus::Pass)},
                        {"fail", count(CheckStatus::Fail)},
                        {"lint", count(CheckStatus::Lint)}};
        return j;
    }

    std::string text() const {
        std::string out = "suite " + suite + "\n";
        for (const auto& c : checks) {
            out += "  [";
            out += to_string(c.status);
            out += "] " + c.name;
            if (c.status != CheckStatus::Pass) {
                if (!c.expected.empty())
                    out += " (expected " + c.expected + ", got " + c.actual + ")";
                if (!c.note.empty()) out += " -- " + c.note;
            }
            out += "\n";
        }
        out += "  summary: " + std::to_string(count(CheckStatus::Pass)) + " pass, " +
               std::to_string(count(CheckStatus::Fail)) + " fail, " +
               std::to_string(count(CheckStatus::Lint)) + " lint\n";
        return out;
    }
};

}  // namespace nsnp
