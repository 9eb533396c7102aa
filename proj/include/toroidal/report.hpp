#ifndef TOROIDAL_REPORT_HPP
#define TOROIDAL_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace toroidal {

/// One verification instance. `residual` is empty on success and carries
/// the offending polynomial(s) otherwise.
struct CheckResult {
    std::string id;
    std::map<std::string, std::string> params;
    bool pass = false;
    std::string residual;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void merge(const SuiteReport& o) {
        for (const auto& c : o.checks) checks.push_back(c);
    }
};

enum class ReportFormat { json, csv, text };

/// Deterministic rendering: identical reports produce byte-identical
/// output in every format.
std::string render(const std::vector<SuiteReport>& reports, ReportFormat format);

ReportFormat parse_format(const std::string& name);

} // namespace toroidal

#endif
