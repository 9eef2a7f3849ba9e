#include "odvp/report.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace odvp {

namespace {

using nlohmann::json;

json to_json(const ConditionReport& c) {
    return {{"condition", condition_name(c.id)}, {"lhs", c.lhs},
            {"rhs", c.rhs},                      {"margin", c.margin},
            {"holds", c.holds},                  {"annotation", c.annotation},
            {"warnings", c.warnings}};
}

json to_json(const RootResult& r) {
    return {{"critical_radius", r.critical_radius},
            {"residual", r.residual},
            {"bracket", {r.bracket_lo, r.bracket_hi}},
            {"iterations", r.iterations},
            {"pointwise_check", r.pointwise_check},
            {"multiplicity_note", r.multiplicity_note},
            {"forced", r.forced},
            {"notes", r.notes}};
}

json to_json(const IdentityCheck& c) {
    return {{"check", identity_name(c.id)}, {"lhs", c.lhs},   {"rhs", c.rhs},
            {"residual", c.residual},       {"pass", c.pass}, {"notes", c.notes}};
}

}  // namespace

std::string format_double(double value, int significant_digits) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                   std::chars_format::general, significant_digits);
    return ec == std::errc() ? std::string(buffer, ptr) : std::string("nan");
}

std::string report_to_text(const RunReport& report, bool include_timing) {
    std::ostringstream out;
    out << "== odvp " << report.command << " ==\n";
    for (const auto& [label, value] : report.values)
        out << label << " = " << format_double(value, 6) << "\n";
    for (const auto& c : report.conditions) {
        out << "condition " << condition_name(c.id) << ": lhs=" << format_double(c.lhs, 9)
            << " rhs=" << format_double(c.rhs, 9)
            << " margin=" << format_double(c.margin, 9)
            << " holds=" << (c.holds ? "yes" : "no") << "\n";
        if (!c.annotation.empty()) out << "  note: " << c.annotation << "\n";
        for (const auto& w : c.warnings) out << "  warning: " << w << "\n";
    }
    for (const auto& r : report.roots) {
        out << "critical radius R* = " << format_double(r.critical_radius, 9)
            << "  residual=" << format_double(r.residual, 3)
            << "  bracket=[" << format_double(r.bracket_lo, 9) << ", "
            << format_double(r.bracket_hi, 9) << "]"
            << "  iterations=" << r.iterations
            << "  pointwise=" << format_double(r.pointwise_check, 3)
            << "  sign_changes=" << r.multiplicity_note
            << (r.forced ? "  (forced)" : "") << "\n";
        for (const auto& n : r.notes) out << "  note: " << n << "\n";
    }
    for (const auto& c : report.identities) {
        out << "check " << identity_name(c.id) << ": lhs=" << format_double(c.lhs, 9)
            << " rhs=" << format_double(c.rhs, 9)
            << " residual=" << format_double(c.residual, 3) << " "
            << (c.pass ? "PASS" : "FAIL") << "\n";
        if (!c.notes.empty()) out << "  note: " << c.notes << "\n";
    }
    for (const auto& w : report.warnings) out << "warning: " << w << "\n";
    if (include_timing)
        out << "elapsed: " << format_double(report.elapsed_seconds, 3) << " s\n";
    return out.str();
}

std::string report_to_json(const RunReport& report, bool include_timing) {
    json root;
    root["schema"] = "odvp-report/1";
    root["command"] = report.command;
    if (!report.spec_echo.empty()) root["spec"] = json::parse(report.spec_echo);
    json values = json::array();
    for (const auto& [label, value] : report.values)
        values.push_back({{"label", label}, {"value", value}});
    root["values"] = values;
    json conditions = json::array();
    for (const auto& c : report.conditions) conditions.push_back(to_json(c));
    root["conditions"] = conditions;
    json roots = json::array();
    for (const auto& r : report.roots) roots.push_back(to_json(r));
    root["roots"] = roots;
    json identities = json::array();
    for (const auto& c : report.identities) identities.push_back(to_json(c));
    root["identities"] = identities;
    root["warnings"] = report.warnings;
    if (include_timing) root["elapsed_seconds"] = report.elapsed_seconds;
    return root.dump(2) + "\n";
}

std::string scan_to_csv(const ScanResult& scan) {
    std::string out = "rho,value,derivative\n";
    for (const auto& row : scan.rows) {
        out += format_double(row.rho) + "," + format_double(row.value) + "," +
               format_double(row.derivative) + "\n";
    }
    return out;
}

std::string sweep_to_csv(const SweepResult& sweep) {
    std::string out = "knob,critical_radius,margin\n";
    for (const auto& row : sweep.rows) {
        out += format_double(row.knob) + ",";
        if (row.critical_radius) out += format_double(*row.critical_radius);
        out += "," + format_double(row.margin) + "\n";
    }
    return out;
}

}  // namespace odvp
