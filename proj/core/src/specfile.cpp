#include "odvp/specfile.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace odvp {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw SpecParseError("field '" + field + "': " + what);
}

double require_number(const json& node, const std::string& field) {
    if (!node.contains(field)) fail(field, "missing");
    if (!node[field].is_number()) fail(field, "expected a number");
    return node[field].get<double>();
}

RadialProfile parse_profile(const json& node, const std::string& field,
                            bool default_extend) {
    if (!node.is_object()) fail(field, "expected an object with 'segments'");
    if (!node.contains("segments") || !node["segments"].is_array() ||
        node["segments"].empty())
        fail(field + ".segments", "expected a non-empty array");
    std::vector<ProfileSegment> segments;
    int index = 0;
    for (const auto& seg : node["segments"]) {
        const std::string where = field + ".segments[" + std::to_string(index++) + "]";
        if (!seg.is_object()) fail(where, "expected an object");
        ProfileSegment out;
        out.lo = require_number(seg, "lo");
        out.hi = require_number(seg, "hi");
        // propagate the field path into range errors
        if (!seg.contains("coeffs") || !seg["coeffs"].is_array() || seg["coeffs"].empty())
            fail(where + ".coeffs", "expected a non-empty array of numbers");
        for (const auto& c : seg["coeffs"]) {
            if (!c.is_number()) fail(where + ".coeffs", "expected numbers");
            out.coeffs.push_back(c.get<double>());
        }
        segments.push_back(std::move(out));
    }
    const bool extend = node.value("extend_last", default_extend);
    try {
        return RadialProfile(std::move(segments), extend);
    } catch (const InvalidSpec& e) {
        fail(field, e.what());
    }
}

std::string line_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return std::to_string(line);
}

json profile_to_json(const RadialProfile& p) {
    json segments = json::array();
    for (const auto& seg : p.segments())
        segments.push_back({{"lo", seg.lo}, {"hi", seg.hi}, {"coeffs", seg.coeffs}});
    return {{"segments", segments}, {"extend_last", p.extend_last()}};
}

}  // namespace

SpecFile parse_spec_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecParseError("line " + line_of(text, e.byte) + ": " + e.what());
    }
    if (!root.is_object()) throw SpecParseError("top level: expected an object");

    const double dim_raw = require_number(root, "dimension");
    const int dimension = static_cast<int>(dim_raw);
    if (dimension != dim_raw) fail("dimension", "expected an integer");
    const double core_radius = require_number(root, "core_radius");
    const double rho_max = require_number(root, "rho_max");

    if (!root.contains("f")) fail("f", "missing");
    if (!root.contains("g")) fail("g", "missing");
    RadialProfile f = parse_profile(root["f"], "f", /*default_extend=*/false);
    RadialProfile g = parse_profile(root["g"], "g", /*default_extend=*/true);

    Tolerances tol;
    if (root.contains("tolerances")) {
        const auto& t = root["tolerances"];
        if (!t.is_object()) fail("tolerances", "expected an object");
        tol.quad_tol = t.value("quad_tol", tol.quad_tol);
        tol.root_tol = t.value("root_tol", tol.root_tol);
        tol.identity_tol = t.value("identity_tol", tol.identity_tol);
    }
    if (const char* env = std::getenv("ODVP_DEFAULT_TOL")) {
        char* end = nullptr;
        const double value = std::strtod(env, &end);
        if (end == env || !(value > 0.0))
            throw SpecParseError("ODVP_DEFAULT_TOL: expected a positive number");
        tol.identity_tol = value;
    }

    try {
        ProblemSpec spec(dimension, core_radius, rho_max, std::move(f), std::move(g), tol);
        json echo = {{"dimension", spec.dimension()},
                     {"core_radius", spec.core_radius()},
                     {"rho_max", spec.rho_max()},
                     {"f", profile_to_json(spec.f())},
                     {"g", profile_to_json(spec.g())},
                     {"tolerances",
                      {{"quad_tol", spec.tolerances().quad_tol},
                       {"root_tol", spec.tolerances().root_tol},
                       {"identity_tol", spec.tolerances().identity_tol}}}};
        return {std::move(spec), echo.dump()};
    } catch (const Error& e) {
        throw SpecParseError(std::string("invalid problem: ") + e.what());
    }
}

SpecFile parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("cannot open spec file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec_text(buffer.str());
}

}  // namespace odvp
