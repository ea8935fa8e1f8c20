// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "csv_io.hpp"
#include "entanglement.hpp"
#include "models.hpp"
#include "oracle.hpp"
#include "sweep.hpp"
#include "test_helpers.hpp"

using namespace osg;
using osgtest::random_params;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    Outcome out;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            out.pass = false;
            if (!out.detail.empty()) out.detail += "; ";
            out.detail += what;
        }
    }
    void note(const std::string& what) {
        if (!detail.str().empty()) detail << ", ";
        detail << what;
    }
    Outcome finish() {
        if (out.pass) out.detail = detail.str();
        return out;
    }
};

PhysicalParams fig1(double t_rabi) {
    PhysicalParams p;
    return with_schedule(p, t_rabi * p.rabi_period());
}

// eps_jc = 1 with a heavy atom: the cubic phase (~1e-33 rad here) sits far
// below the 1e-12 elementwise tolerance of the point-atom comparison.
PhysicalParams heavy_unit_coupling(double theta) {
    PhysicalParams p;
    p.mass = 1.0;
    p.lambda = 2.0 * kPi;
    p.epsilon = 10.0;
    p.x1 = p.x2 = 0.1;
    p.sigma_x1 = p.sigma_x2 = 0.01;
    return with_schedule(p, theta);
}

// --- criterion 1 -----------------------------------------------------------

Outcome ppt_closed_form_equivalence() {
    Check c;
    std::mt19937 rng(2024);
    double worst = 0.0;
    for (int it = 0; it < 1200; ++it) {
        const PhysicalParams p = random_params(rng);
        ClosedFormPpt closed =
            closed_form_ppt_eigenvalues(sg_coefficients(compute_overlap_set(p)));
        std::sort(closed.eigenvalues.begin(), closed.eigenvalues.end());
        const PptResult numeric = ppt_report(build_rho_sg(p, InitialState::GG1));
        for (int i = 0; i < 4; ++i)
            worst = std::max(worst, std::abs(closed.eigenvalues[i] - numeric.eigenvalues[i]));
    }
    c.require(worst <= 1e-9, "multiset deviation " + format_double(worst) + " > 1e-9");
    c.note("1200 draws, worst multiset deviation " + format_double(worst));
    return c.finish();
}

// --- criterion 2 -----------------------------------------------------------

Outcome jc_limit_recovery() {
    Check c;
    double worst = 0.0;
    double worst_q = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double theta = 2.0 * kPi * double(i) / 200.0;
        const PhysicalParams p = heavy_unit_coupling(theta);
        const OverlapSet limit = jc_limit_overlap_set(p);
        const SgCoefficients co = sg_coefficients(limit);

        const TwoQubitDensityMatrix sg = build_rho_from_overlaps(limit, InitialState::GG1);
        const TwoQubitDensityMatrix jc = build_rho_jc(1.0, theta, InitialState::GG1);
        worst = std::max(worst, sg.matrix().max_abs_diff(jc.matrix()));
        if (!co.q_degenerate) worst_q = std::max(worst_q, std::abs(std::abs(co.q) - 1.0));
    }
    c.require(worst <= 1e-12, "elementwise deviation " + format_double(worst) + " > 1e-12");
    c.require(worst_q <= 1e-9, "| |q| - 1 | reaches " + format_double(worst_q));
    c.note("200-point grid, worst elementwise " + format_double(worst) + ", | |q|-1 | <= " +
           format_double(worst_q));
    return c.finish();
}

// --- criterion 3 -----------------------------------------------------------

Outcome jc_separability_zeros() {
    Check c;
    const double eps_jc = 1.0;
    const int n = 1000;
    int exempt = 0;
    for (int i = 0; i < n; ++i) {
        const double T = 2.0 * kPi * double(i) / double(n - 1);
        const double value = jc_separability_value(eps_jc, T);
        // boundary layer: grid points within 1e-6 of an analytic zero of
        // sin^2(2eT) sin^2(eT) (in time or in value) are exempt
        double dist = 1e9;
        for (int j = 0; j <= 8; ++j) dist = std::min(dist, std::abs(T - j * kPi / 4.0));
        if (dist < 1e-6 || value < 1e-6) {
            ++exempt;
            continue;
        }
        const PptResult r = ppt_report(build_rho_jc(eps_jc, T, InitialState::GG1), 1e-10);
        if (r.separable) {
            c.require(false, "grid point T=" + format_double(T) +
                                 " separable although the analytic value is " +
                                 format_double(value));
            break;
        }
    }
    // the analytic zeros themselves must be separable instants
    for (double T : {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0, 2.0 * kPi}) {
        const PptResult r = ppt_report(build_rho_jc(eps_jc, T, InitialState::GG1), 1e-10);
        c.require(r.separable, "analytic zero T=" + format_double(T) + " not separable");
    }
    c.note("1000 grid points, " + std::to_string(exempt) + " boundary-exempt");
    return c.finish();
}

// --- criterion 4 -----------------------------------------------------------

Outcome overlap_law() {
    Check c;
    double worst = 0.0;
    // log-spaced t1 from 1e-3 to 0.3 Rabi periods: the overlap magnitude
    // stays far enough above the quadrature noise floor for a relative check
    for (int i = 0; i < 25; ++i) {
        const double t_rabi = 1e-3 * std::pow(300.0, double(i) / 24.0);
        const PhysicalParams p = fig1(t_rabi);
        const GaussianPacket packet{p.x1, 0.0, p.sigma_x1, p.hbar};
        const PhaseSpaceDisplacement dp = branch_displacement_atom1(p, +1);
        const PhaseSpaceDisplacement dm = branch_displacement_atom1(p, -1);

        const double d2 = phase_space_distance_sq(dp, dm, packet);
        const Complex law =
            std::polar(std::exp(-d2 / 8.0), 2.0 * p.x1 * p.epsilon * p.wavenumber() * p.t1);

        const double span = 14.0 * p.sigma_x1 + std::abs(dp.dx);
        const GridPacket g0 = GridPacket::sample_gaussian(packet, p.x1 - span, p.x1 + span, 16384);
        const Complex numeric = quadrature_overlap(apply_branch_unitary(g0, dp, p.hbar),
                                                   apply_branch_unitary(g0, dm, p.hbar));
        worst = std::max(worst, std::abs(numeric - law) / std::abs(law));
    }
    c.require(worst <= 1e-8, "relative deviation " + format_double(worst) + " > 1e-8");
    c.note("25 log-spaced times, worst relative deviation " + format_double(worst));
    return c.finish();
}

// --- criterion 5 -----------------------------------------------------------

Outcome oracle_rho_equivalence() {
    Check c;
    double worst = 0.0;
    for (int i = 1; i <= 10; ++i) {
        const PhysicalParams p = fig1(0.05 * double(i));
        for (InitialState st : {InitialState::GG1, InitialState::EG0}) {
            const double dev = reduce_to_internal(build_full_state(p, st))
                                   .matrix()
                                   .max_abs_diff(build_rho_sg(p, st).matrix());
            worst = std::max(worst, dev);
        }
    }
    c.require(worst <= 1e-6, "worst deviation " + format_double(worst) + " > 1e-6");

    // halving the grid spacing must shrink the residual: measured on a grid
    // coarse enough that discretization still dominates rounding
    const PhysicalParams p = fig1(0.6);
    GridSpec coarse;
    coarse.n = 32;
    coarse.span_sigma = 8.5;
    GridSpec fine = coarse;
    fine.n = 64;
    const ComplexMatrix closed = build_rho_sg(p, InitialState::GG1).matrix();
    const double res_coarse =
        reduce_to_internal(build_full_state(p, InitialState::GG1, coarse))
            .matrix()
            .max_abs_diff(closed);
    const double res_fine =
        reduce_to_internal(build_full_state(p, InitialState::GG1, fine))
            .matrix()
            .max_abs_diff(closed);
    c.require(res_fine < res_coarse,
              "halving spacing did not reduce the residual: " + format_double(res_coarse) +
                  " -> " + format_double(res_fine));
    c.note("worst " + format_double(worst) + " over 10 times x 2 states; residual " +
           format_double(res_coarse) + " -> " + format_double(res_fine) +
           " when spacing halves");
    return c.finish();
}

// --- criterion 6 -----------------------------------------------------------

Outcome damped_nonlocality() {
    Check c;
    const PhysicalParams p;
    const SweepGrid grid{0.01, 1.5, 300};
    const auto rows = run_sweep(p, Model::SG, InitialState::GG1, grid);

    // first index after which M <= 1 + 1e-9 and min PPT eigenvalue >= -1e-10
    // hold for every later time
    std::size_t t_star = rows.size();
    for (std::size_t i = rows.size(); i-- > 0;) {
        if (rows[i].m_value <= 1.0 + 1e-9 && rows[i].ppt_min >= -1e-10)
            t_star = i;
        else
            break;
    }
    c.require(t_star < rows.size(), "no settling index found");
    c.require(t_star > 0, "expected an entangled transient before settling");

    for (std::size_t i = 1; i < rows.size(); ++i) {
        const bool ok1 = rows[i].damping1 < rows[i - 1].damping1 || rows[i - 1].damping1 <= 1e-300;
        const bool ok2 = rows[i].damping2 < rows[i - 1].damping2 || rows[i - 1].damping2 <= 1e-300;
        if (!(ok1 && ok2)) {
            c.require(false, "damping not monotone at row " + std::to_string(i));
            break;
        }
    }
    if (t_star < rows.size())
        c.note("separable and M <= 1 for all T >= " + format_double(rows[t_star].t_rabi) +
               " Rabi periods");
    return c.finish();
}

// --- criterion 7 -----------------------------------------------------------

Outcome periodic_nonlocality() {
    Check c;
    const double eps_jc = 1.0;
    double worst = 0.0;
    double peak = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double T = (2.0 * kPi) * double(i) / 499.0;
        const double m1 = horodecki_m(build_rho_jc(eps_jc, T, InitialState::GG1)).m_value;
        const double m2 =
            horodecki_m(build_rho_jc(eps_jc, T + kPi / eps_jc, InitialState::GG1)).m_value;
        worst = std::max(worst, std::abs(m1 - m2));
        peak = std::max(peak, m1);
    }
    c.require(worst <= 1e-10, "period deviation " + format_double(worst) + " > 1e-10");
    c.require(peak > 1.0, "no Bell violation found on the grid");
    c.note("period deviation " + format_double(worst) + ", peak M " + format_double(peak));
    return c.finish();
}

// --- criterion 8 -----------------------------------------------------------

Outcome eg0_reduction() {
    Check c;
    const PhysicalParams base;
    const SweepGrid grid{0.0, 1.0, 257};
    const double rabi = base.rabi_period();

    // The degenerate nu pair of the eg0 state equals the gg1 dashed curve
    // exactly; that branch is also the only part of M(eg0) that can exceed 1
    // (the non-degenerate branch stays at or below 1). The naive pointwise
    // gap between full M(eg0) and the dashed curve is dominated by the
    // near-product points, where M sits at its boundary value 1 by
    // definition; it is reported, not asserted.
    for (Model model : {Model::JC, Model::SG}) {
        double branch_dev = 0.0, m_dev = 0.0, odd_branch_max = 0.0;
        for (int i = 0; i < grid.steps; ++i) {
            const double t_rabi =
                grid.t_start_rabi +
                (grid.t_end_rabi - grid.t_start_rabi) * double(i) / double(grid.steps - 1);
            const PhysicalParams p = with_schedule(base, t_rabi * rabi);
            const TwoQubitDensityMatrix rho_gg1 =
                model == Model::SG ? build_rho_sg(p, InitialState::GG1)
                                   : build_rho_jc(p.epsilon_jc(), p.t1, InitialState::GG1);
            const TwoQubitDensityMatrix rho_eg0 =
                model == Model::SG ? build_rho_sg(p, InitialState::EG0)
                                   : build_rho_jc(p.epsilon_jc(), p.t1, InitialState::EG0);
            const DegenerateM gg1 = degenerate_m(rho_gg1);
            const DegenerateM eg0 = degenerate_m(rho_eg0);

            branch_dev = std::max(branch_dev, std::abs(2.0 * eg0.nu2 - 2.0 * gg1.nu2));
            m_dev = std::max(m_dev, std::abs(eg0.m_value - 2.0 * gg1.nu2));
            odd_branch_max = std::max(odd_branch_max, eg0.nu1 + eg0.nu2);

            const bool eg0_violates = eg0.m_value > 1.0 + 1e-9;
            const bool dashed_violates = 2.0 * gg1.nu2 > 1.0 + 1e-9;
            if (eg0_violates != dashed_violates) {
                c.require(false, "violation sets differ at T=" + format_double(t_rabi));
                break;
            }
        }
        const char* name = model == Model::JC ? "jc" : "sg";
        if (model == Model::JC)
            c.require(branch_dev <= 1e-9, "jc degenerate-branch deviation " +
                                              format_double(branch_dev) + " > 1e-9");
        c.require(odd_branch_max <= 1.0 + 1e-9,
                  std::string(name) + " non-degenerate branch exceeds 1: " +
                      format_double(odd_branch_max));
        c.note(std::string(name) + ": dashed-curve deviation " + format_double(branch_dev) +
               ", full-M residual " + format_double(m_dev));
    }
    return c.finish();
}

// --- criterion 9 -----------------------------------------------------------

Outcome structural_invariants() {
    Check c;
    std::mt19937 rng(555);
    double worst_sum = 0.0, worst_prob = 0.0, worst_q = 0.0;
    for (int it = 0; it < 10000; ++it) {
        const PhysicalParams p = random_params(rng);
        const SgCoefficients co = sg_coefficients(compute_overlap_set(p));
        worst_prob = std::max(worst_prob, std::abs(co.P1 + co.P2 - 1.0));
        worst_sum = std::max(worst_sum, std::abs(co.c1 * co.c1 + co.c2 * co.c2 - 1.0));
        worst_q = std::max(worst_q, std::abs(co.q));

        // make() enforces hermiticity 1e-12-class, unit trace, PSD >= -1e-10
        const InitialState st = (it % 2 == 0) ? InitialState::GG1 : InitialState::EG0;
        const TwoQubitDensityMatrix rho = build_rho_sg(p, st);
        if (std::abs(rho.at(0, 0)) != 0.0) {
            c.require(false, "double-excitation population is nonzero");
            break;
        }
    }
    c.require(worst_prob <= 1e-12, "P1 + P2 deviates by " + format_double(worst_prob));
    c.require(worst_sum <= 1e-12, "c1^2 + c2^2 deviates by " + format_double(worst_sum));
    c.require(worst_q <= 1.0 + 1e-10, "|q| reaches " + format_double(worst_q));
    c.note("10000 draws; |P1+P2-1| <= " + format_double(worst_prob) + ", |c1^2+c2^2-1| <= " +
           format_double(worst_sum) + ", max |q| " + format_double(worst_q));
    return c.finish();
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> fn;
    };
    const std::vector<Criterion> criteria = {
        {"1 ppt closed-form equivalence", ppt_closed_form_equivalence},
        {"2 jc-limit recovery", jc_limit_recovery},
        {"3 jc separability zeros", jc_separability_zeros},
        {"4 overlap law vs quadrature", overlap_law},
        {"5 oracle rho equivalence", oracle_rho_equivalence},
        {"6 damped non-locality (translational model)", damped_nonlocality},
        {"7 periodic non-locality (point-atom model)", periodic_nonlocality},
        {"8 eg0 reduction to the dashed curve", eg0_reduction},
        {"9 structural invariants", structural_invariants},
    };

    int failures = 0;
    for (const Criterion& cr : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = cr.fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %s (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", cr.name, secs,
                    out.detail.empty() ? "" : " -- ", out.detail.c_str());
        if (!out.pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
