#include "entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace osg {

PptResult ppt_report(const TwoQubitDensityMatrix& rho, double tol) {
    const ComplexMatrix pt = partial_transpose_second(rho);
    const std::vector<double> eig = hermitian_eigenvalues(pt);
    PptResult r;
    std::copy(eig.begin(), eig.end(), r.eigenvalues.begin());
    r.separable = r.eigenvalues.front() >= -tol;
    return r;
}

ClosedFormPpt closed_form_ppt_eigenvalues(const SgCoefficients& co) {
    ClosedFormPpt r;
    const double z = std::abs(co.q) * co.c1 * co.c2 * co.P2;
    r.eigenvalues[0] = co.c1 * co.c1 * co.P2;
    r.eigenvalues[1] = co.c2 * co.c2 * co.P2;
    if (co.P1 <= 0.0) {
        r.eigenvalues[2] = z;
        r.eigenvalues[3] = -z;
        r.p1_zero_limit = true;
    } else {
        const double ratio = 2.0 * z / co.P1;
        const double root = std::sqrt(1.0 + ratio * ratio);
        r.eigenvalues[2] = 0.5 * co.P1 * (1.0 + root);
        r.eigenvalues[3] = 0.5 * co.P1 * (1.0 - root);
    }
    return r;
}

HorodeckiResult horodecki_m(const TwoQubitDensityMatrix& rho) {
    const Mat3 t = pauli_correlation_matrix(rho);
    const Mat3 u = transpose(t) * t;
    std::array<double, 3> nu = symmetric3_eigenvalues(u);
    for (double& v : nu) {
        if (v < -1e-12) throw ContractError("horodecki_m: negative eigenvalue of T^T T");
        v = std::max(v, 0.0);
    }
    HorodeckiResult r;
    r.nu = {nu[2], nu[1], nu[0]};   // descending
    r.m_value = std::max({r.nu[0] + r.nu[1], r.nu[0] + r.nu[2], r.nu[1] + r.nu[2]});
    return r;
}

DegenerateM degenerate_m(const TwoQubitDensityMatrix& rho, double tol) {
    const HorodeckiResult h = horodecki_m(rho);
    const double gap_high = std::abs(h.nu[0] - h.nu[1]);
    const double gap_low = std::abs(h.nu[1] - h.nu[2]);

    DegenerateM r;
    double gap;
    if (gap_high <= gap_low) {
        // degenerate pair is the larger two
        r.nu2 = 0.5 * (h.nu[0] + h.nu[1]);
        r.nu1 = h.nu[2];
        gap = gap_high;
    } else {
        r.nu2 = 0.5 * (h.nu[1] + h.nu[2]);
        r.nu1 = h.nu[0];
        gap = gap_low;
    }
    if (gap > tol) {
        std::ostringstream os;
        os << "degenerate_m: no degenerate eigenvalue pair (closest gap " << gap
           << " > " << tol << "); nu = {" << h.nu[0] << ", " << h.nu[1] << ", " << h.nu[2]
           << "}";
        throw ContractError(os.str());
    }
    r.m_value = std::max(r.nu1 + r.nu2, 2.0 * r.nu2);
    return r;
}

double jc_separability_value(double eps_jc, double T) {
    const double s2 = std::sin(2.0 * eps_jc * T);
    const double s1 = std::sin(eps_jc * T);
    return s2 * s2 * s1 * s1;
}

EntanglementReport analyze(const TwoQubitDensityMatrix& rho, double tol) {
    EntanglementReport rep;
    const PptResult ppt = ppt_report(rho, tol);
    rep.ppt_eigenvalues = ppt.eigenvalues;
    rep.separable = ppt.separable;
    const HorodeckiResult h = horodecki_m(rho);
    rep.nu = h.nu;
    rep.m_value = h.m_value;
    rep.bell_violated = h.m_value > 1.0;
    return rep;
}

} // namespace osg
