#pragma once

// Interaction-time sweeps over either model, with the schedule t1 = T,
// t2 = 2T, t3 = 3T. T grids are specified in Rabi periods (2 pi / eps_jc).

#include <string>
#include <vector>

#include "entanglement.hpp"

namespace osg {

enum class Model { SG, JC };

struct SweepGrid {
    double t_start_rabi = 0.0;
    double t_end_rabi = 1.0;
    int steps = 201;
};

struct SweepRow {
    double t_seconds = 0.0;
    double t_rabi = 0.0;
    double nu1 = 0.0;       // descending nu from the correlation tensor
    double nu2 = 0.0;
    double nu3 = 0.0;
    double m_value = 0.0;
    double ppt_min = 0.0;
    double damping1 = 1.0;  // |<phi_1^+|phi_1^->|
    double damping2 = 1.0;  // |<phi_2^+|phi_2^->|
    int separable = 1;
    int bell_violated = 0;
};

struct SweepOptions {
    // Cross-check every SG row against the grid oracle; a failure aborts
    // with the offending row index.
    bool verify_rows = false;
    std::size_t oracle_n = 16384;
    double verify_tol = 1e-6;
};

// Returns `params` with the schedule set to (T, 2T, 3T) seconds.
PhysicalParams with_schedule(const PhysicalParams& params, double t_seconds);

std::vector<SweepRow> run_sweep(const PhysicalParams& params, Model model,
                                InitialState initial, const SweepGrid& grid,
                                const SweepOptions& options = {});

struct Figure1Row {
    double t_rabi = 0.0;
    double nu1_plus_nu2 = 0.0;   // non-degenerate + degenerate eigenvalue
    double two_nu2 = 0.0;        // twice the degenerate eigenvalue
};

// Both panels over the same grid: panel (i) from the point-atom model,
// panel (ii) from the translational model. Initial state |g g 1>.
struct Figure1 {
    std::vector<Figure1Row> panel_jc;
    std::vector<Figure1Row> panel_sg;
};

Figure1 compute_figure1(const PhysicalParams& params, const SweepGrid& grid);

} // namespace osg
