#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace osg {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw ContractError(msg);
}

std::string entry_name(std::size_t i, std::size_t j) {
    std::ostringstream os;
    os << "(" << i << "," << j << ")";
    return os.str();
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Complex(0.0, 0.0)) {
    require(rows >= 2 && rows <= 4 && cols >= 2 && cols <= 4,
            "ComplexMatrix: dimensions must lie in {2,3,4}");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Complex& ComplexMatrix::at(std::size_t i, std::size_t j) {
    require(i < rows_ && j < cols_, "ComplexMatrix: index " + entry_name(i, j) + " out of bounds");
    return a_[i * cols_ + j];
}

const Complex& ComplexMatrix::at(std::size_t i, std::size_t j) const {
    require(i < rows_ && j < cols_, "ComplexMatrix: index " + entry_name(i, j) + " out of bounds");
    return a_[i * cols_ + j];
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(j, i) = std::conj(at(i, j));
    return m;
}

Complex ComplexMatrix::trace() const {
    require(is_square(), "trace: matrix is not square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    require(cols_ == rhs.rows_, "matrix product: dimension mismatch");
    ComplexMatrix m(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex lik = at(i, k);
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                m.at(i, j) += lik * rhs.at(k, j);
        }
    return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix sum: dimension mismatch");
    ComplexMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + rhs.a_[i];
    return m;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix difference: dimension mismatch");
    ComplexMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - rhs.a_[i];
    return m;
}

double ComplexMatrix::max_abs() const {
    double v = 0.0;
    for (const Complex& z : a_) v = std::max(v, std::abs(z));
    return v;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& rhs) const {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "max_abs_diff: dimension mismatch");
    double v = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) v = std::max(v, std::abs(a_[i] - rhs.a_[i]));
    return v;
}

double ComplexMatrix::hermiticity_defect() const {
    require(is_square(), "hermiticity_defect: matrix is not square");
    double v = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            v = std::max(v, std::abs(at(i, j) - std::conj(at(j, i))));
    return v;
}

Mat3 transpose(const Mat3& m) {
    Mat3 t;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) t(i, j) = m(j, i);
    return t;
}

Mat3 operator*(const Mat3& lhs, const Mat3& rhs) {
    Mat3 m = Mat3::zero();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) += lhs(i, k) * rhs(k, j);
    return m;
}

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m = [] {
        ComplexMatrix s(2, 2);
        s.at(0, 1) = 1.0;
        s.at(1, 0) = 1.0;
        return s;
    }();
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m = [] {
        ComplexMatrix s(2, 2);
        s.at(0, 1) = Complex(0.0, -1.0);
        s.at(1, 0) = Complex(0.0, 1.0);
        return s;
    }();
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m = [] {
        ComplexMatrix s(2, 2);
        s.at(0, 0) = 1.0;
        s.at(1, 1) = -1.0;
        return s;
    }();
    return m;
}

TwoQubitDensityMatrix TwoQubitDensityMatrix::make(const ComplexMatrix& m) {
    return make(m, Tolerances{});
}

TwoQubitDensityMatrix TwoQubitDensityMatrix::make(const ComplexMatrix& m, const Tolerances& tol) {
    require(m.rows() == 4 && m.cols() == 4, "density matrix must be 4x4");
    const double herm = m.hermiticity_defect();
    if (herm > tol.hermiticity) {
        std::ostringstream os;
        os << "density matrix is not Hermitian: defect " << herm << " > " << tol.hermiticity;
        throw ContractError(os.str());
    }
    const double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
    if (trace_dev > tol.trace) {
        std::ostringstream os;
        os << "density matrix trace deviates from 1 by " << trace_dev;
        throw ContractError(os.str());
    }
    // Symmetrize rounding noise before the PSD check so the eigensolver sees
    // an exactly Hermitian matrix.
    ComplexMatrix h(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            h.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
    const std::vector<double> eig = hermitian_eigenvalues(h);
    if (eig.front() < -tol.psd) {
        std::ostringstream os;
        os << "density matrix is not positive semidefinite: min eigenvalue " << eig.front();
        throw ContractError(os.str());
    }
    return TwoQubitDensityMatrix(h);
}

namespace {

// Cyclic Jacobi sweeps on a real symmetric n x n matrix (n <= 8 here).
// Rotations accumulate into `vecs` so callers can reconstruct eigenpairs.
struct JacobiResult {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;   // column k pairs with values[k]
};

JacobiResult jacobi_symmetric(std::vector<double> a, std::size_t n) {
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    double norm = 0.0;
    for (double x : a) norm += x * x;
    norm = std::sqrt(norm);
    const double target = 1e-14 * std::max(norm, 1e-300);

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * a[p * n + q] * a[p * n + q];
        if (std::sqrt(off) < target) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double theta = 0.5 * (a[q * n + q] - a[p * n + p]) / apq;
                double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p];
                    const double vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    JacobiResult r;
    r.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.values[i] = a[i * n + i];

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return r.values[x] < r.values[y]; });

    JacobiResult sorted;
    sorted.values.resize(n);
    sorted.vectors.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        sorted.values[k] = r.values[order[k]];
        for (std::size_t i = 0; i < n; ++i) sorted.vectors[k][i] = v[i * n + order[k]];
    }
    return sorted;
}

void check_hermitian_input(const ComplexMatrix& m, double tol) {
    require(m.is_square(), "hermitian_eigenvalues: matrix is not square");
    const double scale = std::max(1.0, m.max_abs());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const double defect = std::abs(m.at(i, j) - std::conj(m.at(j, i)));
            if (defect > tol * scale)
                throw ContractError("hermitian_eigenvalues: entry " + entry_name(i, j) +
                                    " breaks Hermiticity");
        }
}

} // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
    check_hermitian_input(m, 1e-10);
    const std::size_t n = m.rows();

    // Real symmetric embedding [[A, -B], [B, A]] of H = A + iB. Every
    // eigenvalue appears twice; an embedded eigenvector (u; w) maps back to
    // the complex eigenvector u + i w.
    const std::size_t nn = 2 * n;
    std::vector<double> e(nn * nn, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double re = 0.5 * (m.at(i, j).real() + m.at(j, i).real());
            const double im = 0.5 * (m.at(i, j).imag() - m.at(j, i).imag());
            e[i * nn + j] = re;
            e[(i + n) * nn + (j + n)] = re;
            e[i * nn + (j + n)] = -im;
            e[(i + n) * nn + j] = im;
        }

    const JacobiResult jr = jacobi_symmetric(std::move(e), nn);

    EigenSystem out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (std::size_t k = 0; k < nn; k += 2) {
        // Doubled spectrum: adjacent sorted entries form one pair.
        out.values.push_back(0.5 * (jr.values[k] + jr.values[k + 1]));
        std::vector<Complex> vec(n);
        for (std::size_t i = 0; i < n; ++i)
            vec[i] = Complex(jr.vectors[k][i], jr.vectors[k][i + n]);
        double nrm = 0.0;
        for (const Complex& z : vec) nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        for (Complex& z : vec) z /= nrm;
        out.vectors.push_back(std::move(vec));
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    return hermitian_eigensystem(m).values;
}

std::array<double, 3> symmetric3_eigenvalues(const Mat3& m) {
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (std::abs(m(i, j) - m(j, i)) > 1e-12 * std::max(1.0, std::abs(m(i, j))))
                throw ContractError("symmetric3_eigenvalues: entry " + entry_name(i, j) +
                                    " breaks symmetry");

    std::vector<double> a(9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) a[i * 3 + j] = 0.5 * (m(i, j) + m(j, i));
    const JacobiResult jr = jacobi_symmetric(std::move(a), 3);
    return {jr.values[0], jr.values[1], jr.values[2]};
}

ComplexMatrix partial_transpose_second(const ComplexMatrix& m) {
    require(m.rows() == 4 && m.cols() == 4, "partial_transpose_second: matrix must be 4x4");
    ComplexMatrix out(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    out.at(2 * i + j, 2 * k + l) = m.at(2 * i + l, 2 * k + j);
    return out;
}

ComplexMatrix partial_transpose_second(const TwoQubitDensityMatrix& rho) {
    return partial_transpose_second(rho.matrix());
}

Mat3 pauli_correlation_matrix(const TwoQubitDensityMatrix& rho) {
    return pauli_correlation_matrix(rho.matrix());
}

Mat3 pauli_correlation_matrix(const ComplexMatrix& rho) {
    require(rho.rows() == 4 && rho.cols() == 4, "pauli_correlation_matrix: matrix must be 4x4");
    const ComplexMatrix* sigma[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
    Mat3 t = Mat3::zero();
    for (std::size_t n = 0; n < 3; ++n)
        for (std::size_t m = 0; m < 3; ++m) {
            Complex val = 0.0;
            // tr(rho (sigma_n (x) sigma_m)) without forming the 4x4 product.
            for (std::size_t i1 = 0; i1 < 2; ++i1)
                for (std::size_t i2 = 0; i2 < 2; ++i2)
                    for (std::size_t j1 = 0; j1 < 2; ++j1)
                        for (std::size_t j2 = 0; j2 < 2; ++j2)
                            val += rho.at(2 * i1 + i2, 2 * j1 + j2) *
                                   sigma[n]->at(j1, i1) * sigma[m]->at(j2, i2);
            if (std::abs(val.imag()) > 1e-10)
                throw ContractError("pauli_correlation_matrix: t_" + entry_name(n, m) +
                                    " has a non-real value");
            t(n, m) = val.real();
        }
    return t;
}

} // namespace osg
