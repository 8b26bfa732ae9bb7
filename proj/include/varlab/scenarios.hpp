#pragma once

// Scenario registry: every verifier operation is exercised by at least one
// named scenario; the CLI runs them by name with parameter overrides.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "varlab/report.hpp"

namespace varlab {

struct ScenarioConfig {
    std::string scenario;
    std::map<std::string, double> params;  // resolved: defaults <- file <- flags
    std::string tsv_dir;                   // empty: no profile exports
    bool stable_output = false;

    double get(const std::string& key) const;
};

struct Scenario {
    std::string name;
    std::string description;
    std::string anchor;                 // identity family this scenario certifies
    std::vector<std::string> covers;    // verifier operations exercised
    std::map<std::string, double> defaults;
    std::function<std::vector<AnchoredReport>(const ScenarioConfig&)> run;
};

const std::vector<Scenario>& scenario_catalog();
const Scenario& find_scenario(const std::string& name);  // ConfigError + name list if unknown

// Executes a scenario with merged parameters and assembles the run report.
RunReport run_scenario(const ScenarioConfig& cfg);

// All verifier-operation names that the registry must cover.
const std::vector<std::string>& verifier_operations();

}  // namespace varlab
