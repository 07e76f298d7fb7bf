#include "cnx/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cnx {

Check exact_check(const std::string& name, const std::string& expected, const std::string& actual,
                  const std::string& provenance) {
    Check c;
    c.name = name;
    c.expected = expected;
    c.actual = actual;
    c.provenance = provenance;
    c.passed = expected == actual;
    return c;
}

Check numeric_check(const std::string& name, double expected, double actual, double tolerance,
                    const std::string& provenance) {
    Check c;
    c.name = name;
    c.expected = format_double(expected);
    c.actual = format_double(actual);
    c.numeric = true;
    c.residual = std::abs(expected - actual);
    c.provenance = provenance;
    c.passed = c.residual <= tolerance;
    return c;
}

Check residual_check(const std::string& name, double residual, double tolerance,
                     const std::string& provenance) {
    Check c;
    c.name = name;
    c.expected = "<=" + format_double(tolerance);
    c.actual = format_double(residual);
    c.numeric = true;
    c.residual = residual;
    c.provenance = provenance;
    c.passed = residual <= tolerance;
    return c;
}

Check bool_check(const std::string& name, bool expected, bool actual,
                 const std::string& provenance) {
    return exact_check(name, expected ? "true" : "false", actual ? "true" : "false", provenance);
}

Check info_check(const std::string& name, const std::string& expected, const std::string& actual) {
    return exact_check(name, expected, actual, kProvInformational);
}

std::string Report::status() const {
    bool any_gating = false;
    for (const Check& c : checks) {
        if (c.informational()) continue;
        any_gating = true;
        if (!c.passed) return "fail";
    }
    if (!any_gating && !checks.empty()) return "informational";
    return "pass";
}

bool Report::passed() const { return status() != "fail"; }

void Report::sort_checks() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const Check& a, const Check& b) { return a.name < b.name; });
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

Json report_to_json(const Report& r) {
    Json checks = Json::array();
    for (const Check& c : r.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        if (c.numeric) jc["residual"] = c.residual;
        jc["provenance"] = c.provenance;
        jc["passed"] = c.passed;
        checks.push_back(std::move(jc));
    }
    Json j;
    j["command"] = r.command;
    j["status"] = r.status();
    j["checks"] = std::move(checks);
    j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

Report report_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("report_from_json: expected an object");
    Report r;
    r.command = j.at("command").get<std::string>();
    r.wall_time_ms = j.at("wall_time_ms").get<long long>();
    for (const Json& jc : j.at("checks")) {
        Check c;
        c.name = jc.at("name").get<std::string>();
        c.expected = jc.at("expected").get<std::string>();
        c.actual = jc.at("actual").get<std::string>();
        c.provenance = jc.at("provenance").get<std::string>();
        c.passed = jc.at("passed").get<bool>();
        if (jc.contains("residual")) {
            c.numeric = true;
            c.residual = jc.at("residual").get<double>();
        }
        r.checks.push_back(std::move(c));
    }
    return r;
}

Json reports_to_json(const std::vector<Report>& reports) {
    Json out = Json::array();
    for (const Report& r : reports) out.push_back(report_to_json(r));
    return out;
}

std::vector<Report> reports_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("reports_from_json: expected an array");
    std::vector<Report> out;
    for (const Json& jr : j) out.push_back(report_from_json(jr));
    return out;
}

std::string render_json(const Report& r) { return report_to_json(r).dump(2); }

std::string render_json(const std::vector<Report>& reports) {
    return reports_to_json(reports).dump(2);
}

std::string render_text(const Report& r) {
    std::string out = "[" + r.status() + "] " + r.command + " (" +
                      std::to_string(r.wall_time_ms) + " ms)\n";
    for (const Check& c : r.checks) {
        const char* mark = c.informational() ? "info" : (c.passed ? "ok  " : "FAIL");
        out += "  ";
        out += mark;
        out += " " + c.name + ": expected " + c.expected + ", actual " + c.actual;
        if (c.numeric) out += ", residual " + format_double(c.residual);
        out += " [" + c.provenance + "]\n";
    }
    return out;
}

}  // namespace cnx
