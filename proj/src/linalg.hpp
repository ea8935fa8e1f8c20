#pragma once

// Small dense complex linear algebra: everything in this project is a
// 2x2, 3x3 or 4x4 matrix, so the solvers favour robustness over scaling.

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "errors.hpp"

namespace osg {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    // Bounds-checked access; an out-of-range index is a contract violation.
    Complex& at(std::size_t i, std::size_t j);
    const Complex& at(std::size_t i, std::size_t j) const;

    ComplexMatrix adjoint() const;
    Complex trace() const;

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;

    double max_abs() const;
    double max_abs_diff(const ComplexMatrix& rhs) const;
    double hermiticity_defect() const;   // max |m_ij - conj(m_ji)|
    bool is_square() const { return rows_ == cols_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> a_;   // row-major
};

// 3x3 real matrix (Pauli correlation tensors and U_rho live here).
struct Mat3 {
    std::array<double, 9> a{};
    double& operator()(std::size_t i, std::size_t j) { return a[3 * i + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[3 * i + j]; }
    static Mat3 zero() { return Mat3{}; }
};

Mat3 transpose(const Mat3& m);
Mat3 operator*(const Mat3& lhs, const Mat3& rhs);

// Pauli matrices with |e> the +1 eigenvector of sigma_z, basis {|e>, |g>}.
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

// 4x4 Hermitian, unit-trace, positive semidefinite matrix over the ordered
// two-atom basis {|ee>, |eg>, |ge>, |gg>} (first atom is the slow index).
class TwoQubitDensityMatrix {
public:
    struct Tolerances {
        double hermiticity = 1e-12;
        double trace = 1e-12;
        double psd = 1e-10;
    };

    // Validates the density-matrix invariants; throws ContractError on failure.
    static TwoQubitDensityMatrix make(const ComplexMatrix& m);
    static TwoQubitDensityMatrix make(const ComplexMatrix& m, const Tolerances& tol);

    const ComplexMatrix& matrix() const { return m_; }
    const Complex& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }

private:
    explicit TwoQubitDensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

struct EigenSystem {
    std::vector<double> values;                  // ascending
    std::vector<std::vector<Complex>> vectors;   // vectors[k] pairs with values[k]
};

// Eigenvalues of a Hermitian matrix (dim <= 4), ascending. Cyclic Jacobi on
// the real symmetric embedding; converges when the off-diagonal norm drops
// below 1e-14 * ||m||, hard cap 100 sweeps.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

// Eigenvalues of a 3x3 real symmetric matrix, ascending (symmetry checked
// to 1e-12).
std::array<double, 3> symmetric3_eigenvalues(const Mat3& m);

// Transposition of the second qubit's indices: ((i,j),(k,l)) -> ((i,l),(k,j)).
ComplexMatrix partial_transpose_second(const TwoQubitDensityMatrix& rho);
ComplexMatrix partial_transpose_second(const ComplexMatrix& m);   // raw 4x4

// T_rho with t_{n,m} = tr(rho sigma_n (x) sigma_m), n,m in {x,y,z}.
// Entries must be real to 1e-10; imaginary parts are discarded after the check.
Mat3 pauli_correlation_matrix(const TwoQubitDensityMatrix& rho);
Mat3 pauli_correlation_matrix(const ComplexMatrix& m);   // raw 4x4

} // namespace osg
