#pragma once

// Brute-force validation path: the initial Gaussians are sampled on a
// position grid, every branch unitary is applied spectrally, and the reduced
// two-atom matrix is obtained by numerical partial trace. Nothing here uses
// the closed-form overlap expressions it is meant to check.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "wavepackets.hpp"

namespace osg {

struct GridSpec {
    std::size_t n = 16384;      // power of two
    double span_sigma = 12.0;   // grid bound margin around the union of branch centers
};

class GridPacket {
public:
    // Uniform grid x_j = x_min + j dx with dx = (x_max - x_min)/n (x_max
    // exclusive, periodic for the spectral shifts).
    GridPacket(double x_min, double x_max, std::size_t n);

    static GridPacket sample_gaussian(const GaussianPacket& packet, double x_min, double x_max,
                                      std::size_t n);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    std::size_t size() const { return samples_.size(); }
    double dx() const { return (x_max_ - x_min_) / double(samples_.size()); }
    double x_at(std::size_t j) const { return x_min_ + double(j) * dx(); }

    std::vector<Complex>& samples() { return samples_; }
    const std::vector<Complex>& samples() const { return samples_; }

    double norm_sq() const;          // sum |psi_j|^2 dx
    double mean_position() const;
    double mean_momentum(double hbar) const;

    bool same_grid(const GridPacket& other) const;

private:
    double x_min_;
    double x_max_;
    std::vector<Complex> samples_;
};

// Trapezoidal integral of conj(a) * b over the common grid.
Complex quadrature_overlap(const GridPacket& a, const GridPacket& b);

// Applies the branch unitary recorded in `disp` (momentum kick, spectral
// position shift, factorization scalar, Kerr phase) to the sampled packet.
GridPacket apply_branch_unitary(const GridPacket& packet, const PhaseSpaceDisplacement& disp,
                                double hbar);

enum class AtomLabel { Excited, Ground };

struct Branch {
    AtomLabel atom1 = AtomLabel::Ground;
    AtomLabel atom2 = AtomLabel::Ground;
    int photons = 0;
    Complex amplitude = 1.0;
    GridPacket packet1;   // atom-1 translational part (not necessarily unit norm)
    GridPacket packet2;
};

struct BranchState {
    std::vector<Branch> branches;
    double total_norm() const;
};

enum class InitialState { GG1, EG0 };

// Evolves the chosen initial state through both interactions on the grid.
//
// The interaction operator u = a'S- + aS+ satisfies, in the single-excitation
// sector, u|g,1> = |e,0>, u|e,0> = |g,1> and u|g,0> = 0, so {|g,1>, |e,0>}
// plus the dark state |g,0> is closed under the full evolution and no higher
// photon number is ever populated. Each u-eigenbranch (eigenvalue +-1) picks
// up the corresponding displacement unitary.
BranchState build_full_state(const PhysicalParams& params, InitialState initial,
                             const GridSpec& grid = {});

// Numerical partial trace over field + translations: branches with equal
// photon number interfere with weight <pkt_j|pkt_i> per atom.
TwoQubitDensityMatrix reduce_to_internal(const BranchState& state);

} // namespace osg
