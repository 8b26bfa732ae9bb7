#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "varlab/scenarios.hpp"

using namespace varlab;

namespace {

#ifndef VARLAB_CLI_PATH
#define VARLAB_CLI_PATH "varlab"
#endif

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(VARLAB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("registry: every verifier operation has a scenario") {
    const auto& catalog = scenario_catalog();
    CHECK(catalog.size() >= 18);
    for (const std::string& op : verifier_operations()) {
        bool covered = false;
        for (const auto& s : catalog)
            for (const auto& c : s.covers)
                if (c == op) covered = true;
        INFO("operation ", op);
        CHECK(covered);
    }
    for (const auto& s : catalog) CHECK(!s.anchor.empty());
}

TEST_CASE("registry: alias and unknown-name handling") {
    CHECK(find_scenario("gct-example1").name == "example1-gct");
    try {
        find_scenario("foo");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        std::string msg = e.what();
        CHECK(msg.find("example1-gct") != std::string::npos);  // lists valid names
        CHECK(msg.find("shock-build") != std::string::npos);
    }
}

TEST_CASE("run_scenario: defaults merge under overrides") {
    ScenarioConfig cfg;
    cfg.scenario = "example1-gct";
    cfg.params["a"] = 2.0;
    cfg.stable_output = true;
    RunReport rep = run_scenario(cfg);
    CHECK(rep.pass);
    CHECK(rep.params.at("a") == 2.0);
    CHECK(rep.params.at("n") == 3.0);  // default survives
    CHECK(rep.runtime_ms == 0);
}

TEST_CASE("json: schema keys, 17-digit floats, round-trip") {
    ScenarioConfig cfg;
    cfg.scenario = "shock-build";
    cfg.stable_output = true;
    RunReport rep = run_scenario(cfg);
    std::string js = to_json(rep);

    nlohmann::json parsed = nlohmann::json::parse(js);
    CHECK(parsed.contains("version"));
    CHECK(parsed.contains("scenario"));
    CHECK(parsed.contains("params"));
    CHECK(parsed.contains("identities"));
    CHECK(parsed.contains("runtime_ms"));
    CHECK(parsed.contains("pass"));
    REQUIRE(parsed["identities"].size() == rep.identities.size());
    const auto& first = parsed["identities"][0];
    for (const char* key :
         {"name", "lhs", "rhs", "abs_err", "rel_err", "tol", "pass", "paper_anchor"})
        CHECK(first.contains(key));

    // Round-trip exactness of the serialized floats.
    for (size_t i = 0; i < rep.identities.size(); ++i) {
        double lhs = parsed["identities"][i]["lhs"].get<double>();
        CHECK(lhs == rep.identities[i].report.lhs);
    }
    CHECK(parsed["pass"].get<bool>() == rep.pass);
}

TEST_CASE("cli: exit codes for pass, identity failure, config error") {
    CHECK(run_cli("list") == 0);
    CHECK(run_cli("run example1-gct") == 0);
    CHECK(run_cli("run example1-gct --set tol=1e-30") == 1);  // unreachable tolerance
    CHECK(run_cli("run foo") == 2);                           // unknown scenario
    CHECK(run_cli("run pohozaev --set q=10") == 2);           // supercritical exponent
    CHECK(run_cli("sweep example1-gct --param zz --values 1,2") == 2);
}

TEST_CASE("cli: solver failures exit 3 and still write a failing report") {
    // The increment domain reaches past the integrated profile.
    std::string out = "/tmp/varlab_solverfail.json";
    std::remove(out.c_str());
    CHECK(run_cli("run energy-increment --set R=100 --out " + out) == 3);
    nlohmann::json parsed = nlohmann::json::parse(slurp(out));
    CHECK(parsed["pass"].get<bool>() == false);
    CHECK(parsed["identities"][0]["name"].get<std::string>() == "scenario-error");
}

TEST_CASE("cli: byte-identical reports under --stable-output") {
    std::string out1 = "/tmp/varlab_rep1.json", out2 = "/tmp/varlab_rep2.json";
    REQUIRE(run_cli("run shock-build --stable-output --out " + out1) == 0);
    REQUIRE(run_cli("run shock-build --stable-output --out " + out2) == 0);
    std::string a = slurp(out1), b = slurp(out2);
    CHECK(!a.empty());
    CHECK(a == b);
}

TEST_CASE("cli: config file merges under --set") {
    std::string cfg_path = "/tmp/varlab_cfg.json";
    {
        std::ofstream f(cfg_path);
        f << "{\"a\": 2.0, \"R\": 0.5}\n";
    }
    std::string out = "/tmp/varlab_rep3.json";
    REQUIRE(run_cli("run example1-gct --config " + cfg_path + " --set a=1 --stable-output --out " +
                    out) == 0);
    nlohmann::json parsed = nlohmann::json::parse(slurp(out));
    CHECK(parsed["params"]["a"].get<double>() == 1.0);   // flag wins
    CHECK(parsed["params"]["R"].get<double>() == 0.5);   // file survives
}

TEST_CASE("cli: sweep scaling laws and the empty-value edge") {
    std::string out = "/tmp/varlab_sweep.csv";
    REQUIRE(run_cli("sweep void-linear --param p --values 0.5,1,2 --out " + out) == 0);
    std::ifstream f(out);
    std::string header;
    std::getline(f, header);
    CHECK(header == "value,lhs,rhs,rel_err,pass");
    double lhs[3];
    for (int i = 0; i < 3; ++i) {
        std::string line;
        REQUIRE(std::getline(f, line));
        std::sscanf(line.c_str(), "%*[^,],%lf", &lhs[i]);
    }
    CHECK(lhs[1] / lhs[0] == doctest::Approx(4.0).epsilon(1e-8));
    CHECK(lhs[2] / lhs[0] == doctest::Approx(16.0).epsilon(1e-8));

    // Energy of the prestressed ball scales as a^2.
    REQUIRE(run_cli("sweep gct-example1 --param a --values 1,2 --out " + out) == 0);
    std::ifstream g(out);
    std::getline(g, header);
    double e[2];
    for (int i = 0; i < 2; ++i) {
        std::string line;
        REQUIRE(std::getline(g, line));
        std::sscanf(line.c_str(), "%*[^,],%lf", &e[i]);
    }
    CHECK(e[1] / e[0] == doctest::Approx(4.0).epsilon(1e-8));

    REQUIRE(run_cli("sweep void-linear --param p --values '' --out " + out) == 0);
    CHECK(slurp(out) == "value,lhs,rhs,rel_err,pass\n");
}

TEST_CASE("cli: tsv exports are written when requested") {
    REQUIRE(run_cli("run example1-gct --tsv /tmp") == 0);
    std::string tsv = slurp("/tmp/example1_profile.tsv");
    CHECK(tsv.rfind("r\teta\teta_prime\tW\tP_rr\tPstar_rr\n", 0) == 0);
    REQUIRE(run_cli("run shock-build --tsv /tmp") == 0);
    CHECK(slurp("/tmp/shock_snapshot.tsv").rfind("x\tv\tF\te\n", 0) == 0);
    REQUIRE(run_cli("run void-suite --tsv /tmp") == 0);
    CHECK(slurp("/tmp/void_sweep.csv").rfind("n,lambda,mu,p,dE_linear,dE_gct,G,residuals\n", 0) ==
          0);
}
