#include "toroidal/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace toroidal {

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "text") return ReportFormat::text;
    throw std::domain_error("unknown report format: " + name);
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

} // namespace

std::string render(const std::vector<SuiteReport>& reports, ReportFormat format) {
    switch (format) {
        case ReportFormat::json: {
            nlohmann::ordered_json out = nlohmann::ordered_json::array();
            for (const auto& r : reports) {
                nlohmann::ordered_json jr;
                jr["suite"] = r.suite;
                jr["pass"] = r.all_pass();
                auto checks = nlohmann::ordered_json::array();
                for (const auto& c : r.checks) {
                    nlohmann::ordered_json jc;
                    jc["id"] = c.id;
                    nlohmann::ordered_json params;
                    for (const auto& [k, v] : c.params) params[k] = v;
                    jc["params"] = params;
                    jc["status"] = c.pass ? "pass" : "fail";
                    if (!c.residual.empty()) jc["residual"] = c.residual;
                    checks.push_back(jc);
                }
                jr["checks"] = checks;
                out.push_back(jr);
            }
            return out.dump(2) + "\n";
        }
        case ReportFormat::csv: {
            std::ostringstream os;
            os << "suite,check,params,status,residual\n";
            for (const auto& r : reports)
                for (const auto& c : r.checks) {
                    std::string params;
                    for (const auto& [k, v] : c.params) {
                        if (!params.empty()) params += "; ";
                        params += k + "=" + v;
                    }
                    os << csv_escape(r.suite) << "," << csv_escape(c.id) << ","
                       << csv_escape(params) << "," << (c.pass ? "pass" : "fail") << ","
                       << csv_escape(c.residual) << "\n";
                }
            return os.str();
        }
        case ReportFormat::text: {
            std::ostringstream os;
            for (const auto& r : reports) {
                os << "suite " << r.suite << ": " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
                for (const auto& c : r.checks) {
                    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id;
                    if (!c.params.empty()) {
                        os << " (";
                        bool first = true;
                        for (const auto& [k, v] : c.params) {
                            if (!first) os << ", ";
                            first = false;
                            os << k << "=" << v;
                        }
                        os << ")";
                    }
                    if (!c.residual.empty()) os << " residual: " << c.residual;
                    os << "\n";
                }
            }
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace toroidal
