#include "supertrace/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace stlab {

VerificationReport make_report(std::string suite, std::string case_id, double expected, double actual,
                               double tolerance, TolerancePolicy policy, double runtime_ms,
                               std::uint64_t seed) {
    VerificationReport r;
    r.suite = std::move(suite);
    r.case_id = std::move(case_id);
    r.expected = expected;
    r.actual = actual;
    r.abs_err = std::abs(actual - expected);
    r.rel_err = expected != 0.0 ? r.abs_err / std::abs(expected) : r.abs_err;
    r.tolerance = tolerance;
    r.pass = (policy == TolerancePolicy::absolute ? r.abs_err : r.rel_err) <= tolerance;
    r.runtime_ms = runtime_ms;
    r.seed = seed;
    return r;
}

void sort_reports(std::vector<VerificationReport>& reports) {
    std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        return a.suite != b.suite ? a.suite < b.suite : a.case_id < b.case_id;
    });
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

using nlohmann::json;

json to_json(const VerificationReport& r) {
    return json{{"suite", r.suite},       {"case", r.case_id},     {"expected", r.expected},
                {"actual", r.actual},     {"abs_err", r.abs_err},  {"rel_err", r.rel_err},
                {"tolerance", r.tolerance}, {"pass", r.pass},      {"runtime_ms", r.runtime_ms},
                {"seed", r.seed}};
}

}  // namespace

void emit_report(const std::vector<VerificationReport>& reports, ReportFormat format,
                 std::ostream& out) {
    switch (format) {
        case ReportFormat::json: {
            json doc;
            doc["schema"] = "supertrace-lab/report/v1";
            std::size_t passed = 0;
            json cases = json::array();
            for (const auto& r : reports) {
                cases.push_back(to_json(r));
                if (r.pass) ++passed;
            }
            doc["reports"] = std::move(cases);
            doc["passed"] = passed;
            doc["total"] = reports.size();
            out << doc.dump(2) << "\n";
            return;
        }
        case ReportFormat::csv: {
            out << "suite,case,expected,actual,abs_err,rel_err,tolerance,pass,runtime_ms,seed\n";
            for (const auto& r : reports)
                out << r.suite << ',' << r.case_id << ',' << fmt_double(r.expected) << ','
                    << fmt_double(r.actual) << ',' << fmt_double(r.abs_err) << ','
                    << fmt_double(r.rel_err) << ',' << fmt_double(r.tolerance) << ','
                    << (r.pass ? "true" : "false") << ',' << fmt_double(r.runtime_ms) << ','
                    << r.seed << "\n";
            return;
        }
        case ReportFormat::text: {
            std::size_t passed = 0;
            for (const auto& r : reports) {
                out << (r.pass ? "pass" : "FAIL") << "  " << r.suite << "/" << r.case_id
                    << "  expected=" << fmt_double(r.expected) << "  actual=" << fmt_double(r.actual)
                    << "  |err|=" << fmt_double(r.abs_err) << "  tol=" << fmt_double(r.tolerance)
                    << "\n";
                if (r.pass) ++passed;
            }
            out << passed << " passed / " << reports.size() << " total\n";
            return;
        }
    }
}

std::string report_to_string(const std::vector<VerificationReport>& reports, ReportFormat format) {
    std::ostringstream ss;
    emit_report(reports, format, ss);
    return ss.str();
}

std::vector<VerificationReport> parse_reports_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    std::vector<VerificationReport> out;
    for (const auto& c : doc.at("reports")) {
        VerificationReport r;
        r.suite = c.at("suite").get<std::string>();
        r.case_id = c.at("case").get<std::string>();
        r.expected = c.at("expected").get<double>();
        r.actual = c.at("actual").get<double>();
        r.abs_err = c.at("abs_err").get<double>();
        r.rel_err = c.at("rel_err").get<double>();
        r.tolerance = c.at("tolerance").get<double>();
        r.pass = c.at("pass").get<bool>();
        r.runtime_ms = c.at("runtime_ms").get<double>();
        r.seed = c.at("seed").get<std::uint64_t>();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace stlab
