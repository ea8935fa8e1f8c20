#include "wavepackets.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace osg {

namespace {

void require_field(bool ok, const char* field, const char* what) {
    if (!ok) {
        std::ostringstream os;
        os << "PhysicalParams." << field << ": " << what;
        throw ContractError(os.str());
    }
}

} // namespace

double PhysicalParams::rabi_period() const {
    return 2.0 * std::numbers::pi / epsilon_jc();
}

std::vector<std::string> PhysicalParams::validate() const {
    require_field(mass > 0.0, "mass", "must be positive");
    require_field(lambda > 0.0, "lambda", "must be positive");
    require_field(epsilon > 0.0, "epsilon", "must be positive");
    require_field(hbar > 0.0, "hbar", "must be positive");
    require_field(sigma_x1 > 0.0, "sigma_x1", "must be positive");
    require_field(sigma_x2 > 0.0, "sigma_x2", "must be positive");
    require_field(t1 >= 0.0, "t1", "must be non-negative");
    require_field(t2 >= t1, "t2", "schedule must satisfy t1 <= t2");
    require_field(t3 >= t2, "t3", "schedule must satisfy t2 <= t3");

    std::vector<std::string> warnings;
    const double quarter = lambda / 4.0;
    if (std::abs(x1) + 3.0 * sigma_x1 > quarter)
        warnings.push_back("packet 1 extends past lambda/4: the linear nodal coupling is approximate");
    if (std::abs(x2) + 3.0 * sigma_x2 > quarter)
        warnings.push_back("packet 2 extends past lambda/4: the linear nodal coupling is approximate");
    return warnings;
}

bool PhysicalParams::nodal_region_ok() const {
    const double quarter = lambda / 4.0;
    return std::abs(x1) + 3.0 * sigma_x1 <= quarter && std::abs(x2) + 3.0 * sigma_x2 <= quarter;
}

namespace {

// Shared form of both branch generators: exp[-i s (x + beta p)] with
// s = sign eps k tau, beta = tau'/(2m); tau' = t1 for atom 1 and
// t3 + t2 for atom 2. Kerr phase hbar (eps k)^2 tau^3 / (12 m).
PhaseSpaceDisplacement branch_displacement(const PhysicalParams& params, int sign,
                                           double tau, double tau_prime) {
    if (sign != 1 && sign != -1) throw ContractError("branch sign must be +1 or -1");
    params.validate();
    const double k = params.wavenumber();
    const double hek = params.hbar * params.epsilon * k;
    PhaseSpaceDisplacement d;
    d.dp = -sign * hek * tau;
    d.dx = sign * hek * tau * tau_prime / (2.0 * params.mass);
    d.phase = params.hbar * params.epsilon * params.epsilon * k * k * tau * tau * tau /
              (12.0 * params.mass);
    return d;
}

} // namespace

PhaseSpaceDisplacement branch_displacement_atom1(const PhysicalParams& params, int sign) {
    return branch_displacement(params, sign, params.t1, params.t1);
}

PhaseSpaceDisplacement branch_displacement_atom2(const PhysicalParams& params, int sign) {
    return branch_displacement(params, sign, params.t3 - params.t2, params.t3 + params.t2);
}

double phase_space_distance_sq(const PhaseSpaceDisplacement& da,
                               const PhaseSpaceDisplacement& db,
                               const GaussianPacket& packet) {
    const double ddx = (da.dx - db.dx) / packet.sigma_x;
    const double ddp = (da.dp - db.dp) / packet.sigma_p();
    return ddx * ddx + ddp * ddp;
}

double branch_overlap_phase(const PhaseSpaceDisplacement& da,
                            const PhaseSpaceDisplacement& db,
                            const GaussianPacket& packet) {
    // <D(a) phi | D(b) phi> = e^{i(theta_b - theta_a)}
    //                         e^{(i/2hbar)(dx_a dp_b - dp_a dx_b)}
    //                         <phi| D(db - da) |phi>,
    // and the Gaussian characteristic function contributes
    // (delta_p x0 - delta_x p0)/hbar on top of the exp(-d^2/8) damping.
    const double hbar = packet.hbar;
    const double cross = (da.dx * db.dp - da.dp * db.dx) / (2.0 * hbar);
    const double center = ((db.dp - da.dp) * packet.x0 - (db.dx - da.dx) * packet.p0) / hbar;
    return (db.phase - da.phase) + cross + center;
}

Complex branch_overlap(const PhaseSpaceDisplacement& da,
                       const PhaseSpaceDisplacement& db,
                       const GaussianPacket& packet) {
    const double d2 = phase_space_distance_sq(da, db, packet);
    const double mag = std::exp(-d2 / 8.0);
    return std::polar(mag, branch_overlap_phase(da, db, packet));
}

} // namespace osg
