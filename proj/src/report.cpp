#include "varlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "varlab/errors.hpp"

namespace varlab {

void RunReport::finalize() {
    pass = true;
    for (const auto& ar : identities) pass = pass && ar.report.pass;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string to_json(const RunReport& report) {
    std::string out = "{\n";
    out += "  \"version\": \"" + json_escape(report.version) + "\",\n";
    out += "  \"scenario\": \"" + json_escape(report.scenario) + "\",\n";
    out += "  \"params\": {";
    bool first = true;
    for (const auto& [k, v] : report.params) {
        if (!first) out += ", ";
        out += "\"" + json_escape(k) + "\": " + format_double(v);
        first = false;
    }
    out += "},\n";
    out += "  \"identities\": [\n";
    for (size_t i = 0; i < report.identities.size(); ++i) {
        const IdentityReport& r = report.identities[i].report;
        out += "    {\"name\": \"" + json_escape(r.identity) + "\", ";
        out += "\"lhs\": " + format_double(r.lhs) + ", ";
        out += "\"rhs\": " + format_double(r.rhs) + ", ";
        out += "\"abs_err\": " + format_double(r.abs_err) + ", ";
        out += "\"rel_err\": " + format_double(r.rel_err) + ", ";
        out += "\"tol\": " + format_double(r.tol) + ", ";
        out += std::string("\"pass\": ") + (r.pass ? "true" : "false") + ", ";
        out += "\"paper_anchor\": \"" + json_escape(report.identities[i].anchor) + "\"}";
        out += (i + 1 < report.identities.size()) ? ",\n" : "\n";
    }
    out += "  ],\n";
    out += "  \"runtime_ms\": " + std::to_string(report.runtime_ms) + ",\n";
    out += std::string("  \"pass\": ") + (report.pass ? "true" : "false") + "\n";
    out += "}\n";
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("write_file: cannot open " + path);
    f << content;
}

}  // namespace varlab
