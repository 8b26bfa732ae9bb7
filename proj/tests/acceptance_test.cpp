// Acceptance suite: one test case per acceptance criterion, each printing a
// single PASS/FAIL line. Every tolerance is pinned in code here.

#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>

#include "varlab/scenarios.hpp"
#include "varlab/shock.hpp"
#include "varlab/tensor_ops.hpp"
#include "varlab/voidrelease.hpp"

using namespace varlab;

namespace {

constexpr double kPi = 3.14159265358979323846;

const auto g_start = std::chrono::steady_clock::now();

double elapsed_s() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - g_start).count();
}

RunReport run(const std::string& scenario,
              std::map<std::string, double> params = {}) {
    ScenarioConfig cfg;
    cfg.scenario = scenario;
    cfg.params = std::move(params);
    cfg.stable_output = true;
    return run_scenario(cfg);
}

bool within(const IdentityReport& r, double tol) {
    return r.abs_err <= tol || r.rel_err <= tol;
}

const IdentityReport& find(const RunReport& rep, const std::string& identity, int skip = 0) {
    for (const auto& ar : rep.identities) {
        if (ar.report.identity == identity) {
            if (skip == 0) return ar.report;
            --skip;
        }
    }
    throw std::runtime_error("report " + identity + " not found in " + rep.scenario);
}

void verdict(int criterion, bool pass, const std::string& label) {
    std::printf("criterion %2d: %s - %s\n", criterion, pass ? "PASS" : "FAIL", label.c_str());
    CHECK(pass);
}

}  // namespace

TEST_CASE("criterion 1: prestressed-ball energy via boundary work") {
    struct Case {
        double n, a, R;
    } cases[] = {{2, 1, 1}, {3, 1, 1}, {3, 2, 0.5}};
    bool ok = true;
    for (auto c : cases) {
        auto t0 = std::chrono::steady_clock::now();
        RunReport rep = run("example1-gct", {{"n", c.n}, {"a", c.a}, {"R", c.R}});
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        double closed = c.a * c.a * (c.n - 1) / (2.0 * c.n * c.n) *
                        (c.n == 2 ? kPi : 4.0 * kPi / 3.0) * std::pow(c.R, c.n);
        const IdentityReport& gct = find(rep, "clapeyron-scale-free");
        ok = ok && rep.pass && gct.rel_err <= 1e-8;
        ok = ok && std::abs(gct.lhs - closed) <= 1e-8 * closed;
        ok = ok && dt < 1.0;
    }
    verdict(1, ok, "energy reproduced at rel err <= 1e-8, runtime < 1 s per case");
}

TEST_CASE("criterion 2: boundary configurational traction value") {
    bool ok = true;
    for (double n : {2.0, 3.0}) {
        RunReport rep = run("example1-traction", {{"n", n}});
        const IdentityReport& r = find(rep, "configurational-traction");
        ok = ok && r.pass && r.lhs <= 1e-10;
    }
    verdict(2, ok, "P* n = (n-1)/(2n^2) x_hat within 1e-10 at every boundary node");
}

TEST_CASE("criterion 3: classical and p-homogeneous forms with cross-relation") {
    bool ok = true;
    RunReport phom = run("phom-hydrostatic");
    ok = ok && phom.pass;
    ok = ok && within(find(phom, "clapeyron-p-displacement"), 1e-9);
    ok = ok && within(find(phom, "clapeyron-p-configurational"), 1e-9);
    ok = ok && within(find(phom, "energy-closed-form"), 1e-9);

    RunReport lf = run("linear-forms-hydrostatic");
    ok = ok && lf.pass && within(find(lf, "clapeyron-classical"), 1e-9);
    ok = ok && within(find(lf, "energy-closed-form"), 1e-9);

    RunReport pp = run("ppst-pi");
    ok = ok && pp.pass;
    ok = ok && within(find(pp, "work-cross-relation"), 1e-9);
    ok = ok && find(pp, "scaling-conservation-law").lhs <= 1e-6;
    verdict(3, ok, "hydrostatic closed form at 1e-9, cross-relation 1e-9, divergence <= 1e-6");
}

TEST_CASE("criterion 4: linear variants on the harmonic-gradient family") {
    RunReport rep = run("linear-forms-harmonic");
    bool ok = rep.pass;
    ok = ok && within(find(rep, "clapeyron-linear-gct"), 1e-8);
    ok = ok && within(find(rep, "boundary-rotation-relation"), 1e-8);
    ok = ok && find(rep, "rotation-divergence-form").lhs <= 1e-6;
    verdict(4, ok, "scale-free and rotation forms at 1e-8, divergence residual <= 1e-6");
}

TEST_CASE("criterion 5: semilinear identities and uniqueness verdicts") {
    RunReport rep = run("pohozaev");
    bool ok = rep.pass;
    ok = ok && within(find(rep, "pohozaev-virial"), 1e-6);
    ok = ok && within(find(rep, "pohozaev-boundary"), 1e-6);
    // Verdicts for k in {4, 6} must match the inequality arithmetic exactly.
    PohozaevVerdict k4 = pohozaev_criterion(3, 2.0, 4.0);
    PohozaevVerdict k6 = pohozaev_criterion(3, 2.0, 6.0);
    ok = ok && k4.result == PohozaevVerdict::Result::Fails;
    ok = ok && k6.result == PohozaevVerdict::Result::Critical;
    verdict(5, ok, "both identities at 1e-6; verdicts match 1/n + 1/k <= 1/p exactly");
}

TEST_CASE("criterion 6: invariant integrals") {
    bool ok = true;
    RunReport smooth = run("jlm-smooth");
    ok = ok && smooth.pass;
    ok = ok && find(smooth, "invariant-j").lhs <= 1e-10;
    ok = ok && find(smooth, "invariant-m").abs_err <= 1e-10;

    RunReport screw = run("screw-dislocation");
    ok = ok && screw.pass;
    ok = ok && within(find(screw, "invariant-m"), 1e-9);       // vs closed form
    ok = ok && within(find(screw, "invariant-m", 1), 1e-9);    // path independence

    RunReport crack = run("crack-antiplane");
    ok = ok && crack.pass;
    ok = ok && within(find(crack, "invariant-j", 1), 1e-9);    // two contours agree
    verdict(6, ok, "closures at 1e-10, path independence and oracle values at 1e-9");
}

TEST_CASE("criterion 7: shock suite") {
    bool ok = true;
    RunReport build = run("shock-build");
    ok = ok && build.pass;
    ok = ok && find(build, "rankine-hugoniot").abs_err <= 1e-12;
    ok = ok && find(build, "hadamard-kinematics").abs_err <= 1e-12;
    ok = ok && std::abs(find(build, "driving-traction").lhs - 0.25) <= 1e-14;
    ok = ok && find(build, "lax-dissipation-sweep").lhs <= 0.0 + 1e-15;

    RunReport bal = run("shock-energy-balance");
    ok = ok && bal.pass && find(bal, "energy-balance").abs_err <= 1e-10;
    RunReport clap = run("shock-clapeyron");
    ok = ok && clap.pass;
    for (int i = 0; i < 3; ++i) ok = ok && find(clap, "clapeyron-dynamic", i).abs_err <= 1e-10;
    verdict(7, ok, "RH/Hadamard 1e-12, p* = 1/4, sign sweep, balances at 1e-10");
}

TEST_CASE("criterion 8: void suite") {
    bool ok = true;
    RunReport lin = run("void-linear");
    ok = ok && lin.pass;
    ok = ok && std::abs(find(lin, "void-linear").rhs - (-0.9 * kPi)) <= 1e-12;

    RunReport gct = run("void-gct");
    ok = ok && gct.pass && within(find(gct, "void-agreement"), 1e-8);
    RunReport gct2 = run("void-gct", {{"n", 2}});
    ok = ok && gct2.pass && within(find(gct2, "void-agreement"), 1e-8);

    for (double n : {2.0, 3.0}) {
        VoidScenario scn = make_void_scenario(int(n), 1.0, 1.0, 1.0);
        GriffithResult g = griffith_discrepancy(scn);
        double expect = (n == 2 ? kPi : 4.0 * kPi / 3.0) / scn.kappa;
        ok = ok && std::abs(g.G_hydrostatic - expect) <= 1e-12;
        ok = ok && std::abs(g.G_truncated[2] - g.G_closed) <= 1e-4 * std::abs(g.G_closed);
    }

    RunReport rd = run("rice-drucker");
    ok = ok && rd.pass;
    ok = ok && within(find(rd, "void-work-form"), 1e-8);
    ok = ok && within(find(rd, "void-creation-identity"), 1e-8);
    verdict(8, ok, "release forms agree (-0.9 pi benchmark), G closed forms, RD at 1e-8");
}

TEST_CASE("criterion 9: radial phase-boundary probe") {
    bool ok = true;
    for (double n : {2.0, 3.0}) {
        RunReport rep = run("radial-phase-boundary", {{"n", n}});
        ok = ok && rep.pass;
        const IdentityReport& alpha = find(rep, "far-field-exponent");
        ok = ok && std::abs(alpha.lhs - (n - 1)) <= 0.05;
        ok = ok && std::abs(find(rep, "interface-driving-traction").lhs) <= 1e-8;
    }
    RunReport qw = run("qw-probe");
    ok = ok && qw.pass;
    for (int i = 0; i < 3; ++i)
        ok = ok && within(find(qw, "relaxed-energy-radial-probe", i), 1e-5);
    verdict(9, ok, "alpha within 0.05 of n-1, probe matches ball averages at 1e-5, p* <= 1e-8");
}

TEST_CASE("criterion 10: metastability increment") {
    RunReport rep = run("energy-increment");
    bool ok = rep.pass;
    ok = ok && within(find(rep, "increment-direct"), 1e-6);
    ok = ok && within(find(rep, "increment-excess-balance"), 1e-6);
    verdict(10, ok, "direct increment and excess balance at 1e-6 on shared boundary data");
}

TEST_CASE("criterion 11: property suites and runtime") {
    bool ok = true;
    RunReport par = run("parametric-pstar");
    ok = ok && par.pass;
    ok = ok && find(par, "parametric-eshelby").lhs <= 1e-12;
    ok = ok && find(par, "extended-q-homogeneity").lhs <= 1e-12;

    RunReport noe = run("noether-property");
    ok = ok && noe.pass;

    RunReport graph = run("graph-orthogonality");
    ok = ok && graph.pass && find(graph, "graph-orthogonality").lhs <= 1e-12;

    RunReport polar = run("polar-vanishing");
    ok = ok && polar.pass;
    ok = ok && find(polar, "polarization-vanishing").lhs <= 1e-10;

    double t = elapsed_s();
    ok = ok && t < 120.0;
    char label[128];
    std::snprintf(label, sizeof label,
                  "parametric/Qhom 1e-12, Noether trend, orthogonality, polarization; %.1f s",
                  t);
    verdict(11, ok, label);
}
