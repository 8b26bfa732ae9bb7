#pragma once

// Run reports and their wire format. The JSON schema is fixed:
// {"version","scenario","params","identities":[{"name","lhs","rhs",
//  "abs_err","rel_err","tol","pass","paper_anchor"}],"runtime_ms","pass"}
// with floats at 17 significant digits for round-trip exactness.

#include <map>
#include <string>
#include <vector>

#include "varlab/identity.hpp"

namespace varlab {

inline constexpr const char* kToolVersion = "1.0.0";

struct AnchoredReport {
    IdentityReport report;
    std::string anchor;
};

struct RunReport {
    std::string version = kToolVersion;
    std::string scenario;
    std::map<std::string, double> params;
    std::vector<AnchoredReport> identities;
    long long runtime_ms = 0;
    bool pass = false;

    void finalize();  // recomputes overall pass
};

std::string format_double(double v);
std::string to_json(const RunReport& report);
void write_file(const std::string& path, const std::string& content);

}  // namespace varlab
