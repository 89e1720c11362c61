// Verification suites and their reports.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "emel/eisenstein.hpp"

namespace emel {

struct EngineConfig {
    int digits = 40;
    double eps = 0; // 0: 10^-(digits+5)
    long n_max = 200000;
    std::string grid = "small"; // small | full
    bool inject_fault = false;  // flips a sign in the symmetry suite (harness self-test)

    TruncationBudget budget() const { return TruncationBudget{eps, n_max}; }
};

struct CaseResult {
    std::string id;
    nlohmann::json parameters;
    std::string lhs;
    std::string rhs;
    double abs_err = 0;
    double tol = 0;
    bool pass = false;
    std::string notes;

    bool operator==(const CaseResult&) const = default;
};

struct SkippedCase {
    std::string id;
    nlohmann::json parameters;
    std::string reason;

    bool operator==(const SkippedCase&) const = default;
};

struct ReportSummary {
    long total = 0;
    long passed = 0;
    long failed = 0;
    long skipped_singular = 0;

    bool operator==(const ReportSummary&) const = default;
};

struct EngineInfo {
    int digits = 40;
    double eps = 0;
    long n_max = 0;
    std::string grid;
    std::string version;
    bool inject_fault = false;

    bool operator==(const EngineInfo&) const = default;
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseResult> cases;     // sorted by id
    std::vector<SkippedCase> skipped;  // sorted by id
    std::vector<std::string> notes;    // suite-level findings
    EngineInfo engine;

    ReportSummary summary() const;
    bool operator==(const VerificationReport&) const = default;
};

const std::vector<std::string>& suite_names();

// Sets the working precision from config and runs the named suite.
// Throws std::invalid_argument for an unknown suite or grid.
VerificationReport run_suite(const std::string& name, const EngineConfig& config);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);
std::string to_csv(const VerificationReport& r);
// format: json | csv; path "-" writes to stdout
void emit(const VerificationReport& r, const std::string& format, const std::string& path);

const char* engine_version();

} // namespace emel
