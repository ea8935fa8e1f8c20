#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "csv_io.hpp"
#include "entanglement.hpp"
#include "fft.hpp"
#include "models.hpp"
#include "oracle.hpp"
#include "sweep.hpp"

namespace osg {

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.passed; });
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    for (const std::string& w : warnings) os << "warning: " << w << '\n';
    for (const VerifyCheck& c : checks)
        os << (c.passed ? "PASS" : "FAIL") << "  " << c.name
           << "  max_residual=" << format_double(c.residual)
           << "  tolerance=" << format_double(c.tolerance) << '\n';
    os << (all_passed() ? "verification passed" : "verification FAILED") << '\n';
    return os.str();
}

namespace {

struct Collector {
    VerifyReport report;
    double tol_override;

    void add(const std::string& name, double residual, double default_tol) {
        const double tol = tol_override > 0.0 ? tol_override : default_tol;
        report.checks.push_back({name, residual, tol, residual <= tol});
    }
};

// Quadrature evaluation of one closed-form overlap on a private grid.
double overlap_residual(const PhysicalParams& params, std::size_t n) {
    const PhaseSpaceDisplacement rest{};
    double worst = 0.0;

    struct Case {
        double x0, sigma;
        PhaseSpaceDisplacement a, b;
    };
    const std::array<Case, 4> cases = {
        Case{params.x1, params.sigma_x1, branch_displacement_atom1(params, +1),
             branch_displacement_atom1(params, -1)},
        Case{params.x2, params.sigma_x2, branch_displacement_atom2(params, +1),
             branch_displacement_atom2(params, -1)},
        Case{params.x2, params.sigma_x2, branch_displacement_atom2(params, +1), rest},
        Case{params.x2, params.sigma_x2, branch_displacement_atom2(params, -1), rest},
    };

    for (const Case& c : cases) {
        const GaussianPacket packet{c.x0, 0.0, c.sigma, params.hbar};
        const double lo =
            std::min({c.x0, c.x0 + c.a.dx, c.x0 + c.b.dx}) - 12.0 * c.sigma;
        const double hi =
            std::max({c.x0, c.x0 + c.a.dx, c.x0 + c.b.dx}) + 12.0 * c.sigma;
        const GridPacket g0 = GridPacket::sample_gaussian(packet, lo, hi, n);
        const GridPacket ga = apply_branch_unitary(g0, c.a, params.hbar);
        const GridPacket gb = apply_branch_unitary(g0, c.b, params.hbar);
        const Complex numeric = quadrature_overlap(ga, gb);
        const Complex closed = branch_overlap(c.a, c.b, packet);
        const double scale = std::max(std::abs(closed), 1e-6);
        worst = std::max(worst, std::abs(numeric - closed) / scale);
    }
    return worst;
}

double rho_residual(const PhysicalParams& params, InitialState initial, std::size_t n) {
    GridSpec spec;
    spec.n = n;
    const TwoQubitDensityMatrix numeric = reduce_to_internal(build_full_state(params, initial, spec));
    const TwoQubitDensityMatrix closed = build_rho_sg(params, initial);
    return numeric.matrix().max_abs_diff(closed.matrix());
}

double ppt_residual(const PhysicalParams& base, unsigned seed, int draws) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> t_rabi(0.01, 1.5);
    std::uniform_real_distribution<double> jitter(0.5, 1.5);
    double worst = 0.0;
    for (int it = 0; it < draws; ++it) {
        PhysicalParams p = base;
        p.epsilon = base.epsilon * jitter(rng);
        p.x2 = base.x2 * jitter(rng);
        p.sigma_x2 = base.sigma_x2 * jitter(rng);
        p = with_schedule(p, t_rabi(rng) * p.rabi_period());

        const SgCoefficients co = sg_coefficients(compute_overlap_set(p));
        ClosedFormPpt closed = closed_form_ppt_eigenvalues(co);
        std::sort(closed.eigenvalues.begin(), closed.eigenvalues.end());
        const PptResult numeric = ppt_report(build_rho_sg(p, InitialState::GG1));
        for (std::size_t i = 0; i < 4; ++i)
            worst = std::max(worst,
                             std::abs(closed.eigenvalues[i] - numeric.eigenvalues[i]));
    }
    return worst;
}

} // namespace

VerifyReport run_verification(const PhysicalParams& params, const VerifyOptions& options) {
    Collector col;
    col.tol_override = options.tolerance_override;
    col.report.warnings = params.validate();

    std::size_t n = options.grid_n;
    if (n < 16) n = 16;
    while (!is_power_of_two(n)) ++n;
    if (n < 1024)
        col.report.warnings.push_back(
            "coarse oracle grid (n < 1024): expect degraded convergence of the residuals");

    PhysicalParams p = params;
    if (p.t3 <= p.t1 || p.t1 <= 0.0)
        p = with_schedule(p, 0.3 * p.rabi_period());

    col.add("overlaps: closed form vs quadrature", overlap_residual(p, n), 1e-8);
    col.add("rho(gg1): closed form vs grid trace", rho_residual(p, InitialState::GG1, n), 1e-6);
    col.add("rho(eg0): closed form vs grid trace", rho_residual(p, InitialState::EG0, n), 1e-6);
    col.add("ppt spectrum: closed form vs numeric", ppt_residual(params, 777u, 200), 1e-10);
    return col.report;
}

} // namespace osg
