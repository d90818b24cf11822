#pragma once

#include <string>
#include <vector>

namespace fusionkit {

/// One verification item: a stable id, pass/fail, human detail, and a short
/// tag naming the rule family the check belongs to.
struct Check {
    std::string id;
    bool pass = false;
    std::string detail;
    std::string tag;
};

struct VerificationReport {
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string id, bool pass, std::string detail = "", std::string tag = "") {
        checks.push_back({std::move(id), pass, std::move(detail), std::move(tag)});
    }
    void merge(const VerificationReport& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.pass) out.push_back(c.id + (c.detail.empty() ? "" : ": " + c.detail));
        return out;
    }
};

using ValidationReport = VerificationReport;

/// Aligned text table; Unicode box drawing by default, plain ASCII rules
/// with `ascii`. All cells are preformatted strings.
std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows, bool ascii);

/// One line per check ("PASS <id>" / "FAIL <id>: <detail>") plus a summary.
std::string render_report(const VerificationReport& rep, bool ascii);

/// Machine form: {"checks": [{id, pass, detail, tag}...], "pass": bool}.
std::string report_to_json(const VerificationReport& rep);

}  // namespace fusionkit
