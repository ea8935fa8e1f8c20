#pragma once

// Minimum-uncertainty Gaussian translational states and the phase-space
// displacements the two interaction branches imprint on them.

#include <complex>
#include <string>
#include <vector>

#include "errors.hpp"

namespace osg {

using Complex = std::complex<double>;

// One scenario's physical inputs: atom mass, cavity mode, coupling, packet
// geometry and the interaction schedule (atom 1 interacts on [0, t1], atom 2
// on [t2, t3], times absolute).
struct PhysicalParams {
    double mass = 1e-26;           // kg
    double lambda = 1e-5;          // m
    double epsilon = 1e6;          // 1/s, atom-field coupling
    double hbar = 1.054571817e-34; // J s
    double x1 = 1e-6;              // m, packet 1 center relative to the node
    double x2 = 1e-6;              // m
    double sigma_x1 = 1e-6;        // m
    double sigma_x2 = 1e-6;        // m
    double t1 = 0.0;               // s, atom-1 exit
    double t2 = 0.0;               // s, atom-2 entry
    double t3 = 0.0;               // s, atom-2 exit

    double wavenumber() const { return 2.0 * 3.141592653589793238462643383279502884 / lambda; }
    // Effective two-level coupling near the node; also sets the Rabi period.
    double epsilon_jc() const { return x1 * epsilon * wavenumber(); }
    double rabi_period() const;

    // Throws ContractError naming the offending field; returns soft warnings
    // (e.g. packet poking out of the linear nodal region).
    std::vector<std::string> validate() const;
    bool nodal_region_ok() const;
};

struct GaussianPacket {
    double x0 = 0.0;      // m
    double p0 = 0.0;      // kg m/s
    double sigma_x = 1.0; // m
    double hbar = 1.0;    // J s

    // sigma_p is derived, never stored: the packet is minimum uncertainty.
    double sigma_p() const { return hbar / (2.0 * sigma_x); }
};

// Action of one branch unitary on the translational state: shift of the
// packet's position and momentum expectation values plus the accumulated
// scalar phase (the Kerr-like cubic term, identical for both branches).
struct PhaseSpaceDisplacement {
    double dx = 0.0;    // m
    double dp = 0.0;    // kg m/s
    double phase = 0.0; // rad
};

// Displacements for the +/- branches of each atom. `sign` is +1 or -1.
//
// Convention: (dx, dp) is the shift the branch unitary produces on the
// state it acts on, i.e. exp[-i sign eps k (x + p tau'/2m) tau] moves
// <x> by +sign hbar eps k tau tau'/(2m) and <p> by -sign hbar eps k tau.
// The classical exit trajectories x^+-(t) = x -+ a t^2/2 quoted alongside
// the model differ from dx by the free-flight term dp*t/m; both give the
// same phase-space distance. The grid oracle pins this convention down.
PhaseSpaceDisplacement branch_displacement_atom1(const PhysicalParams& params, int sign);
PhaseSpaceDisplacement branch_displacement_atom2(const PhysicalParams& params, int sign);

// Squared dimensionless phase-space distance between two displaced copies of
// the same packet, measured in units of sigma_x and sigma_p.
double phase_space_distance_sq(const PhaseSpaceDisplacement& da,
                               const PhaseSpaceDisplacement& db,
                               const GaussianPacket& packet);

// Phase of <packet displaced by da | packet displaced by db>. Exact for
// minimum-uncertainty Gaussians: scalar-phase difference, the symplectic
// cross term of the two displacements, and the packet-center term.
double branch_overlap_phase(const PhaseSpaceDisplacement& da,
                            const PhaseSpaceDisplacement& db,
                            const GaussianPacket& packet);

// Full overlap: exp(-d^2/8) * exp(i branch_overlap_phase).
Complex branch_overlap(const PhaseSpaceDisplacement& da,
                       const PhaseSpaceDisplacement& db,
                       const GaussianPacket& packet);

} // namespace osg
