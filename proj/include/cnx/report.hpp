#pragma once

// Structured check reports shared by the command-line front end and the
// acceptance battery: a Report is one command's worth of named checks, each
// carrying expected/actual values, an optional numeric residual, and a
// provenance tag saying where the expectation comes from.
//
// Status rule: a report passes when every non-informational check passes;
// informational checks (fixture diffs against suspected source typos,
// exploratory results) never affect the verdict. Serialization round-trips
// byte-identically: serialize -> parse -> serialize reproduces the exact
// bytes, so reports can be archived and diffed.

#include "json.hpp"

#include <string>
#include <vector>

namespace cnx {

using Json = nlohmann::json;

// Provenance vocabulary.
inline constexpr const char* kProvReferenceTable = "reference-table";  // transcribed source tables
inline constexpr const char* kProvClosedForm = "closed-form";          // analytic expressions
inline constexpr const char* kProvFrozenOracle = "frozen-oracle";      // committed oracle data
inline constexpr const char* kProvProperty = "property";               // randomized/property checks
inline constexpr const char* kProvInformational = "informational";     // reported, never gating

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool numeric = false;  // when set, residual is meaningful and serialized
    double residual = 0.0;
    std::string provenance;
    bool passed = false;

    bool informational() const { return provenance == kProvInformational; }
};

// Exact comparison of two rendered values.
Check exact_check(const std::string& name, const std::string& expected, const std::string& actual,
                  const std::string& provenance);

// |expected - actual| against an absolute tolerance.
Check numeric_check(const std::string& name, double expected, double actual, double tolerance,
                    const std::string& provenance);

// A precomputed residual against an absolute tolerance (for relative or
// aggregated residuals the caller already reduced).
Check residual_check(const std::string& name, double residual, double tolerance,
                     const std::string& provenance);

Check bool_check(const std::string& name, bool expected, bool actual,
                 const std::string& provenance);

// Informational note; the passed flag is recorded honestly but ignored by
// the status rule.
Check info_check(const std::string& name, const std::string& expected, const std::string& actual);

struct Report {
    std::string command;
    std::vector<Check> checks;
    long long wall_time_ms = 0;

    // "pass", "fail", or "informational" (only informational checks present).
    std::string status() const;
    bool passed() const;  // status() != "fail"

    // Deterministic order for merged reports: stable sort by check name.
    void sort_checks();
};

// 15-significant-digit rendering used for all human-readable numbers.
std::string format_double(double v);

Json report_to_json(const Report& r);
Report report_from_json(const Json& j);
Json reports_to_json(const std::vector<Report>& reports);
std::vector<Report> reports_from_json(const Json& j);

// Two-space-indented JSON text (the byte-identical round-trip form).
std::string render_json(const Report& r);
std::string render_json(const std::vector<Report>& reports);

// Human-readable block: a header line per report, one line per check.
std::string render_text(const Report& r);

}  // namespace cnx
