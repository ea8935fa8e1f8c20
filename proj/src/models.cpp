#include "models.hpp"

#include <cmath>

namespace osg {

namespace {

constexpr Complex kI(0.0, 1.0);

struct BranchPairs {
    PhaseSpaceDisplacement a1_plus, a1_minus, a2_plus, a2_minus;
    GaussianPacket packet1, packet2;
};

BranchPairs branch_pairs(const PhysicalParams& params) {
    BranchPairs b;
    b.a1_plus = branch_displacement_atom1(params, +1);
    b.a1_minus = branch_displacement_atom1(params, -1);
    b.a2_plus = branch_displacement_atom2(params, +1);
    b.a2_minus = branch_displacement_atom2(params, -1);
    b.packet1 = GaussianPacket{params.x1, 0.0, params.sigma_x1, params.hbar};
    b.packet2 = GaussianPacket{params.x2, 0.0, params.sigma_x2, params.hbar};
    return b;
}

} // namespace

OverlapSet compute_overlap_set(const PhysicalParams& params) {
    params.validate();
    const BranchPairs b = branch_pairs(params);
    const PhaseSpaceDisplacement rest{};   // undisplaced reference

    OverlapSet o;
    const Complex o1 = branch_overlap(b.a1_plus, b.a1_minus, b.packet1);
    const Complex o2 = branch_overlap(b.a2_plus, b.a2_minus, b.packet2);
    o.cR1 = o1.real();
    o.cI1 = o1.imag();
    o.cR2 = o2.real();
    o.cI2 = o2.imag();
    o.c_plus = branch_overlap(b.a2_plus, rest, b.packet2);
    o.c_minus = branch_overlap(b.a2_minus, rest, b.packet2);
    return o;
}

OverlapSet jc_limit_overlap_set(const PhysicalParams& params) {
    params.validate();
    const BranchPairs b = branch_pairs(params);
    const PhaseSpaceDisplacement rest{};

    // Phases are evaluated directly so that a fully damped overlap (magnitude
    // underflowed to zero) still yields the right unit-modulus limit.
    OverlapSet o;
    const double ph1 = branch_overlap_phase(b.a1_plus, b.a1_minus, b.packet1);
    const double ph2 = branch_overlap_phase(b.a2_plus, b.a2_minus, b.packet2);
    o.cR1 = std::cos(ph1);
    o.cI1 = std::sin(ph1);
    o.cR2 = std::cos(ph2);
    o.cI2 = std::sin(ph2);
    o.c_plus = std::polar(1.0, branch_overlap_phase(b.a2_plus, rest, b.packet2));
    o.c_minus = std::polar(1.0, branch_overlap_phase(b.a2_minus, rest, b.packet2));
    return o;
}

SgCoefficients sg_coefficients(const OverlapSet& o) {
    SgCoefficients c;
    c.P1 = 0.25 * (1.0 + o.cR1) * (1.0 + o.cR2);
    c.P2 = 1.0 - c.P1;

    if (c.P2 <= 1e-15) {
        // No excitation ever leaves the photon branch; the P2 sector carries
        // zero weight and any unit pair (c1, c2) represents it.
        c.P2 = std::max(c.P2, 0.0);
        c.c1 = std::sqrt(0.5);
        c.c2 = std::sqrt(0.5);
        c.q = 0.0;
        c.q_degenerate = true;
        return c;
    }

    c.c1 = std::sqrt(std::max(0.0, (1.0 + o.cR1) * (1.0 - o.cR2) / (4.0 * c.P2)));
    c.c2 = std::sqrt(std::max(0.0, (1.0 - o.cR1) / (2.0 * c.P2)));

    const double den_sq = 2.0 * (1.0 - o.cR1) * (1.0 + o.cR1) * (1.0 - o.cR2);
    if (den_sq <= 1e-24) {
        c.q = 0.0;
        c.q_degenerate = true;
    } else {
        c.q = kI * (o.c_minus - o.c_plus) * o.cI1 / std::sqrt(den_sq);
    }
    return c;
}

TwoQubitDensityMatrix build_rho_from_overlaps(const OverlapSet& o, InitialState initial) {
    ComplexMatrix rho(4, 4);

    if (initial == InitialState::GG1) {
        const SgCoefficients c = sg_coefficients(o);
        rho.at(1, 1) = c.P2 * c.c2 * c.c2;                 // |e1 g2>
        rho.at(2, 2) = c.P2 * c.c1 * c.c1;                 // |g1 e2>
        rho.at(3, 3) = c.P1;                               // |g1 g2>
        const Complex coh = c.P2 * c.c1 * c.c2 * c.q;      // q |e1 g2><g1 e2| + h.c.
        rho.at(1, 2) = coh;
        rho.at(2, 1) = std::conj(coh);
    } else {
        // |e1 g2 0>: atom 1 enters the cavity excited with no photon; the
        // branch bookkeeping swaps S+ and S- relative to the one-photon case,
        // giving the mirrored populations and the opposite coherence sign.
        rho.at(1, 1) = 0.5 * (1.0 + o.cR1);
        rho.at(2, 2) = 0.25 * (1.0 - o.cR1) * (1.0 - o.cR2);
        rho.at(3, 3) = 0.25 * (1.0 - o.cR1) * (1.0 + o.cR2);
        const Complex coh = 0.25 * kI * (o.c_plus - o.c_minus) * o.cI1;
        rho.at(1, 2) = coh;
        rho.at(2, 1) = std::conj(coh);
    }

    TwoQubitDensityMatrix::Tolerances tol;
    tol.trace = 1e-12;
    tol.hermiticity = 1e-14;
    tol.psd = 1e-10;
    return TwoQubitDensityMatrix::make(rho, tol);
}

TwoQubitDensityMatrix build_rho_sg(const PhysicalParams& params, InitialState initial) {
    return build_rho_from_overlaps(compute_overlap_set(params), initial);
}

TwoQubitDensityMatrix build_rho_jc(double eps_jc, double T, InitialState initial) {
    if (eps_jc <= 0.0) throw ContractError("build_rho_jc: eps_jc must be positive");
    if (T < 0.0) throw ContractError("build_rho_jc: T must be non-negative");
    const double c = std::cos(eps_jc * T);
    const double s = std::sin(eps_jc * T);

    ComplexMatrix rho(4, 4);
    if (initial == InitialState::GG1) {
        rho.at(1, 1) = s * s;
        rho.at(2, 2) = s * s * c * c;
        rho.at(3, 3) = c * c * c * c;
        rho.at(1, 2) = s * s * c;
        rho.at(2, 1) = s * s * c;
    } else {
        rho.at(1, 1) = c * c;
        rho.at(2, 2) = s * s * s * s;
        rho.at(3, 3) = s * s * c * c;
        rho.at(1, 2) = -s * s * c;
        rho.at(2, 1) = -s * s * c;
    }
    return TwoQubitDensityMatrix::make(rho);
}

} // namespace osg
