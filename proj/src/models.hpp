#pragma once

// Reduced two-atom density matrices: the translational (Stern-Gerlach) model
// with its overlap-encoded decoherence, and the point-atom Jaynes-Cummings
// reference it reduces to when every damping factor is dropped.

#include "linalg.hpp"
#include "oracle.hpp"
#include "wavepackets.hpp"

namespace osg {

// The five scalar products that carry the translational which-way record:
// <phi_i^+|phi_i^-> for each atom and c_+- = <phi_2^+-|phi_2(0)>.
struct OverlapSet {
    double cR1 = 1.0;
    double cI1 = 0.0;
    double cR2 = 1.0;
    double cI2 = 0.0;
    Complex c_plus = 1.0;
    Complex c_minus = 1.0;
};

struct SgCoefficients {
    double P1 = 1.0;
    double P2 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    Complex q = 0.0;
    // Set when the q denominator vanishes (cR1 -> +-1 or cR2 -> 1). The
    // coherence q multiplies is identically zero there, so q := 0 is the
    // continuous extension.
    bool q_degenerate = false;
};

OverlapSet compute_overlap_set(const PhysicalParams& params);

// Same displacements with every overlap magnitude forced to 1; phases
// (including the Kerr phases carried by c_+-) are kept exactly.
OverlapSet jc_limit_overlap_set(const PhysicalParams& params);

SgCoefficients sg_coefficients(const OverlapSet& overlaps);

// Assembles the reduced matrix from a given overlap set (the parametrized
// entry point computes the set first and delegates here).
TwoQubitDensityMatrix build_rho_from_overlaps(const OverlapSet& overlaps, InitialState initial);

TwoQubitDensityMatrix build_rho_sg(const PhysicalParams& params, InitialState initial);

// Point-atom reference state for coupling eps_jc and common interaction time T.
TwoQubitDensityMatrix build_rho_jc(double eps_jc, double T, InitialState initial);

} // namespace osg
