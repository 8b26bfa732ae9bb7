// varlab: constructs extremal configurations and verifies energy/conservation
// identities against stated tolerances, reporting residuals per scenario.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

#include "varlab/scenarios.hpp"

namespace {

using varlab::AnchoredReport;
using varlab::RunReport;
using varlab::ScenarioConfig;

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitSolverError = 3;

std::map<std::string, double> parse_sets(const std::vector<std::string>& sets) {
    std::map<std::string, double> out;
    for (const auto& kv : sets) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw varlab::ConfigError("--set expects key=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    return out;
}

std::map<std::string, double> load_config(const std::string& path) {
    std::map<std::string, double> out;
    if (path.empty()) return out;
    std::ifstream f(path);
    if (!f) throw varlab::ConfigError("cannot open config file " + path);
    nlohmann::json j;
    f >> j;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_number())
            throw varlab::ConfigError("config key '" + it.key() + "' is not numeric");
        out[it.key()] = it.value().get<double>();
    }
    return out;
}

void print_summary(const RunReport& report) {
    std::printf("scenario %s: %s\n", report.scenario.c_str(), report.pass ? "PASS" : "FAIL");
    for (const AnchoredReport& ar : report.identities) {
        const auto& r = ar.report;
        std::printf("  [%s] %-32s lhs=%- .12g rhs=%- .12g rel=%.3g tol=%.3g\n",
                    r.pass ? "ok" : "FAIL", r.identity.c_str(), r.lhs, r.rhs, r.rel_err, r.tol);
        if (!r.notes.empty()) std::printf("        %s\n", r.notes.c_str());
    }
}

int cmd_run(const std::string& scenario, const std::vector<std::string>& sets,
            const std::string& out_path, const std::string& tsv_dir,
            const std::string& config_path, bool stable_output) {
    ScenarioConfig cfg;
    cfg.scenario = scenario;
    cfg.params = load_config(config_path);
    for (const auto& [k, v] : parse_sets(sets)) cfg.params[k] = v;  // flags win
    cfg.tsv_dir = tsv_dir;
    cfg.stable_output = stable_output;

    RunReport report;
    bool solver_failed = false;
    std::string failure;
    try {
        report = run_scenario(cfg);
    } catch (const varlab::ConfigError&) {
        throw;  // configuration problems are exit code 2
    } catch (const std::exception& e) {
        solver_failed = true;
        failure = e.what();
        report.scenario = scenario;
        report.params = cfg.params;
        report.runtime_ms = 0;
        report.pass = false;
        varlab::IdentityReport rep;
        rep.identity = "scenario-error";
        rep.scenario = scenario;
        rep.notes = failure;
        rep.pass = false;
        report.identities.push_back({rep, "solver failure"});
    }

    if (!out_path.empty()) varlab::write_file(out_path, varlab::to_json(report));
    print_summary(report);
    if (solver_failed) {
        std::fprintf(stderr, "solver error: %s\n", failure.c_str());
        return kExitSolverError;
    }
    return report.pass ? kExitPass : kExitIdentityFailure;
}

int cmd_list() {
    std::printf("%-24s %-12s %s\n", "scenario", "", "description / verifies");
    for (const auto& s : varlab::scenario_catalog()) {
        std::printf("%-24s %s\n", s.name.c_str(), s.description.c_str());
        std::printf("%-24s verifies: %s\n", "", s.anchor.c_str());
    }
    return kExitPass;
}

int cmd_sweep(const std::string& scenario, const std::string& param,
              const std::string& values_csv, const std::string& out_path,
              const std::string& config_path, bool stable_output) {
    std::vector<double> values;
    std::string token;
    for (char c : values_csv + ",") {
        if (c == ',') {
            if (!token.empty()) values.push_back(std::stod(token));
            token.clear();
        } else {
            token += c;
        }
    }

    const varlab::Scenario& scn = varlab::find_scenario(scenario);
    if (!scn.defaults.count(param))
        throw varlab::ConfigError("sweep parameter '" + param + "' is not owned by scenario " +
                                  scn.name);

    std::string csv = "value,lhs,rhs,rel_err,pass\n";
    bool all_pass = true;
    for (double v : values) {
        ScenarioConfig cfg;
        cfg.scenario = scenario;
        cfg.params = load_config(config_path);
        cfg.params[param] = v;
        cfg.stable_output = stable_output;
        RunReport report = run_scenario(cfg);
        all_pass = all_pass && report.pass;
        const auto& first = report.identities.front().report;
        csv += varlab::format_double(v) + "," + varlab::format_double(first.lhs) + "," +
               varlab::format_double(first.rhs) + "," + varlab::format_double(first.rel_err) +
               "," + (report.pass ? "true" : "false") + "\n";
        std::printf("sweep %s=%s: %s\n", param.c_str(), varlab::format_double(v).c_str(),
                    report.pass ? "PASS" : "FAIL");
    }
    if (!out_path.empty())
        varlab::write_file(out_path, csv);
    else
        std::fputs(csv.c_str(), stdout);
    return all_pass ? kExitPass : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"variational identity verification runner"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "list registered scenarios");

    std::string scenario, out_path, tsv_dir, config_path;
    std::vector<std::string> sets;
    bool stable_output = false;
    auto* run_cmd = app.add_subcommand("run", "run one scenario and report residuals");
    run_cmd->add_option("scenario", scenario, "scenario name")->required();
    run_cmd->add_option("--set", sets, "parameter override key=value (repeatable)");
    run_cmd->add_option("--out", out_path, "write the JSON report here");
    run_cmd->add_option("--tsv", tsv_dir, "directory for profile/snapshot exports");
    run_cmd->add_option("--config", config_path, "JSON file with parameter overrides");
    run_cmd->add_flag("--stable-output", stable_output,
                      "zero the runtime field for byte-identical reports");

    std::string sweep_param, sweep_values;
    auto* sweep_cmd = app.add_subcommand("sweep", "run a scenario across parameter values");
    sweep_cmd->add_option("scenario", scenario, "scenario name")->required();
    sweep_cmd->add_option("--param", sweep_param, "parameter to sweep")->required();
    sweep_cmd->add_option("--values", sweep_values, "comma-separated values")->required();
    sweep_cmd->add_option("--out", out_path, "write the CSV here");
    sweep_cmd->add_option("--config", config_path, "JSON file with parameter overrides");
    sweep_cmd->add_flag("--stable-output", stable_output, "zero the runtime field");

    try {
        app.parse(argc, argv);
        if (list_cmd->parsed()) return cmd_list();
        if (run_cmd->parsed())
            return cmd_run(scenario, sets, out_path, tsv_dir, config_path, stable_output);
        if (sweep_cmd->parsed())
            return cmd_sweep(scenario, sweep_param, sweep_values, out_path, config_path,
                             stable_output);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitConfigError : kExitPass;
    } catch (const varlab::ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "solver error: %s\n", e.what());
        return kExitSolverError;
    }
    return kExitConfigError;
}
