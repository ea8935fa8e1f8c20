#include "sweep.hpp"

#include <cmath>
#include <sstream>

namespace osg {

PhysicalParams with_schedule(const PhysicalParams& params, double t_seconds) {
    PhysicalParams p = params;
    p.t1 = t_seconds;
    p.t2 = 2.0 * t_seconds;
    p.t3 = 3.0 * t_seconds;
    return p;
}

namespace {

std::vector<double> grid_points(const SweepGrid& grid) {
    if (grid.steps < 2) throw ContractError("sweep grid: steps must be >= 2");
    if (grid.t_start_rabi < 0.0) throw ContractError("sweep grid: t_start must be >= 0");
    if (grid.t_end_rabi <= grid.t_start_rabi)
        throw ContractError("sweep grid: t_end must exceed t_start");
    std::vector<double> t(grid.steps);
    const double dt = (grid.t_end_rabi - grid.t_start_rabi) / double(grid.steps - 1);
    for (int i = 0; i < grid.steps; ++i) t[i] = grid.t_start_rabi + dt * double(i);
    return t;
}

TwoQubitDensityMatrix build_row_rho(const PhysicalParams& scheduled, Model model,
                                    InitialState initial) {
    if (model == Model::SG) return build_rho_sg(scheduled, initial);
    return build_rho_jc(scheduled.epsilon_jc(), scheduled.t1, initial);
}

} // namespace

std::vector<SweepRow> run_sweep(const PhysicalParams& params, Model model,
                                InitialState initial, const SweepGrid& grid,
                                const SweepOptions& options) {
    params.validate();
    const double rabi = params.rabi_period();
    const std::vector<double> t_rabi = grid_points(grid);

    std::vector<SweepRow> rows;
    rows.reserve(t_rabi.size());
    for (std::size_t i = 0; i < t_rabi.size(); ++i) {
        const double t_seconds = t_rabi[i] * rabi;
        const PhysicalParams scheduled = with_schedule(params, t_seconds);

        SweepRow row;
        row.t_seconds = t_seconds;
        row.t_rabi = t_rabi[i];

        const TwoQubitDensityMatrix rho = build_row_rho(scheduled, model, initial);
        const EntanglementReport rep = analyze(rho);
        row.nu1 = rep.nu[0];
        row.nu2 = rep.nu[1];
        row.nu3 = rep.nu[2];
        row.m_value = rep.m_value;
        row.ppt_min = rep.ppt_eigenvalues[0];
        row.separable = rep.separable ? 1 : 0;
        row.bell_violated = rep.bell_violated ? 1 : 0;

        if (model == Model::SG) {
            const OverlapSet o = compute_overlap_set(scheduled);
            row.damping1 = std::hypot(o.cR1, o.cI1);
            row.damping2 = std::hypot(o.cR2, o.cI2);
        } else {
            row.damping1 = 1.0;
            row.damping2 = 1.0;
        }

        if (options.verify_rows && model == Model::SG) {
            GridSpec spec;
            spec.n = options.oracle_n;
            try {
                const TwoQubitDensityMatrix numeric =
                    reduce_to_internal(build_full_state(scheduled, initial, spec));
                const double dev = numeric.matrix().max_abs_diff(rho.matrix());
                if (dev > options.verify_tol) {
                    std::ostringstream os;
                    os << "row " << i << " (T = " << t_rabi[i]
                       << " Rabi periods): oracle deviation " << dev << " > "
                       << options.verify_tol;
                    throw VerificationError(os.str());
                }
            } catch (const TruncationError& e) {
                std::ostringstream os;
                os << "row " << i << ": " << e.what();
                throw TruncationError(os.str());
            }
        }
        rows.push_back(row);
    }
    return rows;
}

Figure1 compute_figure1(const PhysicalParams& params, const SweepGrid& grid) {
    params.validate();
    const double k = params.wavenumber();
    if (std::abs(params.x1 * k * params.epsilon - params.x2 * k * params.epsilon) >
        1e-9 * std::abs(params.x1 * k * params.epsilon))
        throw ContractError("figure1: requires x1 eps k == x2 eps k (equal effective couplings)");

    const double rabi = params.rabi_period();
    const double eps_jc = params.epsilon_jc();
    const std::vector<double> t_rabi = grid_points(grid);

    Figure1 fig;
    fig.panel_jc.reserve(t_rabi.size());
    fig.panel_sg.reserve(t_rabi.size());
    for (std::size_t i = 0; i < t_rabi.size(); ++i) {
        const double t_seconds = t_rabi[i] * rabi;
        const PhysicalParams scheduled = with_schedule(params, t_seconds);
        try {
            const DegenerateM jc = degenerate_m(build_rho_jc(eps_jc, t_seconds, InitialState::GG1));
            const DegenerateM sg = degenerate_m(build_rho_sg(scheduled, InitialState::GG1));
            fig.panel_jc.push_back({t_rabi[i], jc.nu1 + jc.nu2, 2.0 * jc.nu2});
            fig.panel_sg.push_back({t_rabi[i], sg.nu1 + sg.nu2, 2.0 * sg.nu2});
        } catch (const ContractError& e) {
            std::ostringstream os;
            os << "figure1 row " << i << " (T = " << t_rabi[i] << " Rabi periods): " << e.what();
            throw ContractError(os.str());
        }
    }
    return fig;
}

} // namespace osg
