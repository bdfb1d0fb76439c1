#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace stlab {

enum class TolerancePolicy { absolute, relative };

struct VerificationReport {
    std::string suite;
    std::string case_id;
    double expected = 0.0;
    double actual = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double runtime_ms = 0.0;
    std::uint64_t seed = 0;
};

VerificationReport make_report(std::string suite, std::string case_id, double expected, double actual,
                               double tolerance, TolerancePolicy policy, double runtime_ms,
                               std::uint64_t seed);

// canonical order: by suite then case id, independent of execution order
void sort_reports(std::vector<VerificationReport>& reports);

enum class ReportFormat { json, csv, text };

// Serialize reports. Output is byte-stable for identical inputs; doubles are
// printed with round-trip precision. The CSV header is fixed:
//   suite,case,expected,actual,abs_err,rel_err,tolerance,pass,runtime_ms,seed
void emit_report(const std::vector<VerificationReport>& reports, ReportFormat format, std::ostream& out);

std::string report_to_string(const std::vector<VerificationReport>& reports, ReportFormat format);

// inverse of the JSON emitter (used by the round-trip test)
std::vector<VerificationReport> parse_reports_json(const std::string& text);

}  // namespace stlab
