#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "csv_io.hpp"
#include "sweep.hpp"
#include "verify.hpp"

using namespace osg;

namespace {

PhysicalParams defaults() { return PhysicalParams{}; }

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("with_schedule sets the sequential windows") {
    const PhysicalParams p = with_schedule(defaults(), 2.5e-6);
    CHECK(p.t1 == 2.5e-6);
    CHECK(p.t2 == 5.0e-6);
    CHECK(p.t3 == doctest::Approx(7.5e-6).epsilon(1e-15));
}

TEST_CASE("jc sweep starts at the product-state boundary") {
    const SweepGrid grid{0.0, 1.0, 5};
    const auto rows = run_sweep(defaults(), Model::JC, InitialState::GG1, grid);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].m_value == doctest::Approx(1.0));
    CHECK(rows[0].separable == 1);
    CHECK(rows[0].bell_violated == 0);
    CHECK(rows[0].damping1 == 1.0);
}

TEST_CASE("both models agree exactly at T = 0") {
    const SweepGrid grid{0.0, 0.5, 3};
    const auto sg = run_sweep(defaults(), Model::SG, InitialState::GG1, grid);
    const auto jc = run_sweep(defaults(), Model::JC, InitialState::GG1, grid);
    CHECK(sg[0].m_value == jc[0].m_value);
    CHECK(sg[0].nu1 == jc[0].nu1);
    CHECK(sg[0].ppt_min == jc[0].ppt_min);
}

TEST_CASE("sg damping columns decrease strictly while above the floor") {
    const SweepGrid grid{0.0, 1.0, 21};
    const auto rows = run_sweep(defaults(), Model::SG, InitialState::GG1, grid);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i - 1].damping1 > 1e-300) CHECK(rows[i].damping1 < rows[i - 1].damping1);
        if (rows[i - 1].damping2 > 1e-300) CHECK(rows[i].damping2 < rows[i - 1].damping2);
    }
}

TEST_CASE("jc peak of nu1 + nu2 exceeds one somewhere on the grid") {
    const SweepGrid grid{0.0, 1.0, 201};
    const auto rows = run_sweep(defaults(), Model::JC, InitialState::GG1, grid);
    double peak = 0.0;
    for (const auto& r : rows) peak = std::max(peak, r.m_value);
    CHECK(peak > 1.0);
}

TEST_CASE("sweep grids are validated with the offending field named") {
    CHECK_THROWS_WITH_AS(run_sweep(defaults(), Model::SG, InitialState::GG1, {0.0, 1.0, 1}),
                         doctest::Contains("steps"), ContractError);
    CHECK_THROWS_WITH_AS(run_sweep(defaults(), Model::SG, InitialState::GG1, {-0.1, 1.0, 5}),
                         doctest::Contains("t_start"), ContractError);
    CHECK_THROWS_WITH_AS(run_sweep(defaults(), Model::SG, InitialState::GG1, {1.0, 0.5, 5}),
                         doctest::Contains("t_end"), ContractError);
}

TEST_CASE("row verification cross-checks against the oracle") {
    SweepOptions opt;
    opt.verify_rows = true;
    opt.oracle_n = 4096;
    const SweepGrid grid{0.0, 0.4, 3};
    CHECK_NOTHROW(run_sweep(defaults(), Model::SG, InitialState::GG1, grid, opt));

    // an absurd tolerance must fail and carry the row index
    opt.verify_tol = 1e-30;
    CHECK_THROWS_WITH_AS(run_sweep(defaults(), Model::SG, InitialState::GG1, grid, opt),
                         doctest::Contains("row"), VerificationError);
}

TEST_CASE("figure1 panels: boundary values and periodicity") {
    const SweepGrid grid{0.0, 1.0, 201};   // dt = 0.005, half period = 100 steps
    const Figure1 fig = compute_figure1(defaults(), grid);
    REQUIRE(fig.panel_jc.size() == 201);

    CHECK(fig.panel_jc[0].nu1_plus_nu2 == doctest::Approx(1.0));
    CHECK(fig.panel_jc[0].two_nu2 == doctest::Approx(0.0));

    // point-atom panel repeats after half a Rabi period
    for (std::size_t i = 0; i + 100 < fig.panel_jc.size(); ++i) {
        CHECK(std::abs(fig.panel_jc[i].nu1_plus_nu2 - fig.panel_jc[i + 100].nu1_plus_nu2) <=
              1e-9);
        CHECK(std::abs(fig.panel_jc[i].two_nu2 - fig.panel_jc[i + 100].two_nu2) <= 1e-9);
    }

    // translational panel converges to the saturated-damping limit, computed
    // here by pushing an all-zero overlap set through the same assembly
    OverlapSet saturated;
    saturated.cR1 = saturated.cI1 = saturated.cR2 = saturated.cI2 = 0.0;
    saturated.c_plus = saturated.c_minus = 0.0;
    const DegenerateM limit =
        degenerate_m(build_rho_from_overlaps(saturated, InitialState::GG1));
    const Figure1Row& last = fig.panel_sg.back();
    CHECK(last.nu1_plus_nu2 == doctest::Approx(limit.nu1 + limit.nu2).epsilon(1e-9));
    CHECK(last.two_nu2 == doctest::Approx(2.0 * limit.nu2).epsilon(1e-9));
    CHECK(limit.nu1 + limit.nu2 == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("figure1 requires equal effective couplings") {
    PhysicalParams p = defaults();
    p.x2 = 2.0 * p.x1;
    CHECK_THROWS_AS(compute_figure1(p, {0.0, 1.0, 11}), ContractError);
}

TEST_CASE("csv serialization is byte-stable and uses 17 significant digits") {
    const SweepGrid grid{0.0, 0.6, 7};
    const auto rows1 = run_sweep(defaults(), Model::SG, InitialState::GG1, grid);
    const auto rows2 = run_sweep(defaults(), Model::SG, InitialState::GG1, grid);
    const std::string csv1 = sweep_csv(rows1);
    const std::string csv2 = sweep_csv(rows2);
    CHECK(csv1 == csv2);
    CHECK(csv1.find("T_seconds,T_rabi,nu1,nu2,nu3,m_value,ppt_min,damping1,damping2,"
                    "separable,bell_violated\n") == 0);
    CHECK(csv1.find("\r") == std::string::npos);
    CHECK(format_double(1.0) == "1.0000000000000000e+00");

    const std::string path = "sweep_test_tmp.csv";
    write_file(path, csv1);
    CHECK(slurp(path) == csv1);
    std::remove(path.c_str());
}

TEST_CASE("meta sidecar echoes the configuration without timestamps") {
    const std::string meta = meta_text(defaults(), "sg", "gg1", {0.0, 1.0, 11});
    CHECK(meta.find("model=sg") != std::string::npos);
    CHECK(meta.find("steps=11") != std::string::npos);
    CHECK(meta.find("rabi_period_seconds=") != std::string::npos);
    CHECK(meta == meta_text(defaults(), "sg", "gg1", {0.0, 1.0, 11}));
}

TEST_CASE("verification suite passes on the shipped defaults") {
    VerifyOptions opt;
    opt.grid_n = 4096;
    const VerifyReport rep = run_verification(defaults(), opt);
    CHECK(rep.all_passed());
    CHECK(rep.to_text().find("verification passed") != std::string::npos);
}

TEST_CASE("verification suite flags a coarse grid and honors tolerance overrides") {
    VerifyOptions opt;
    opt.grid_n = 256;
    const VerifyReport rep = run_verification(defaults(), opt);
    bool warned = false;
    for (const auto& w : rep.warnings) warned = warned || w.find("coarse") != std::string::npos;
    CHECK(warned);

    opt.tolerance_override = 1e-30;
    const VerifyReport failing = run_verification(defaults(), opt);
    CHECK(!failing.all_passed());
    CHECK(failing.to_text().find("FAIL") != std::string::npos);
}
