#pragma once

// Separability and non-locality diagnostics: partial-transpose test, its
// closed form for the translational model, and the correlation-tensor
// quantity M(rho) whose excess over 1 certifies a CHSH violation.

#include <array>

#include "linalg.hpp"
#include "models.hpp"

namespace osg {

struct EntanglementReport {
    std::array<double, 4> ppt_eigenvalues{};  // ascending
    std::array<double, 3> nu{};               // descending
    double m_value = 0.0;
    bool separable = true;
    bool bell_violated = false;
};

struct PptResult {
    std::array<double, 4> eigenvalues{};      // ascending
    bool separable = true;
};

// Eigenvalues of the partial transpose; separable iff min >= -tol.
PptResult ppt_report(const TwoQubitDensityMatrix& rho, double tol = 1e-10);

struct ClosedFormPpt {
    std::array<double, 4> eigenvalues{};      // unordered
    bool p1_zero_limit = false;               // continuous extension used
};

// {c1^2 P2, c2^2 P2, (P1/2)(1 +- sqrt(1 + (2|q|c1c2P2/P1)^2))}.
ClosedFormPpt closed_form_ppt_eigenvalues(const SgCoefficients& co);

struct HorodeckiResult {
    double m_value = 0.0;
    std::array<double, 3> nu{};               // descending
};

// nu = eigenvalues of T_rho^T T_rho; M = max pairwise sum.
HorodeckiResult horodecki_m(const TwoQubitDensityMatrix& rho);

struct DegenerateM {
    double m_value = 0.0;
    double nu1 = 0.0;   // the non-degenerate eigenvalue
    double nu2 = 0.0;   // the degenerate pair
};

// Specialization for the states produced here, which always carry a doubly
// degenerate nu. Verifies the degeneracy to `tol` and returns
// max{nu1 + nu2, 2 nu2}; a broken degeneracy signals a model bug.
DegenerateM degenerate_m(const TwoQubitDensityMatrix& rho, double tol = 1e-9);

// sin^2(2 eps T) sin^2(eps T); zero exactly at the separability instants of
// the point-atom model.
double jc_separability_value(double eps_jc, double T);

EntanglementReport analyze(const TwoQubitDensityMatrix& rho, double tol = 1e-10);

} // namespace osg
