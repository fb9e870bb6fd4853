#pragma once

#include <map>
#include <string>
#include <vector>

namespace ldcode {

struct Violation {
    /// Graph that reproduces the failure when checked alone.
    std::string graph6;
    std::string details;

    bool operator==(const Violation&) const = default;
    auto operator<=>(const Violation&) const = default;
};

struct VerificationReport {
    std::string suite;
    std::string universe;
    long checked = 0;
    std::vector<Violation> violations;
    double elapsed_seconds = 0.0;
    /// Suite-specific tallies, e.g. how many graphs met a theorem's hypothesis.
    std::map<std::string, long> counters;

    [[nodiscard]] bool passed() const { return violations.empty(); }
    bool operator==(const VerificationReport&) const = default;
};

inline constexpr int kReportSchema = 1;

/// {"schema": 1, "reports": [...]}
std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> reports_from_json(const std::string& text);

/// One row per violation, or one row with empty graph6/details for a clean suite.
/// Columns: suite,universe,checked,passed,elapsed_seconds,graph6,details
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

} // namespace ldcode
