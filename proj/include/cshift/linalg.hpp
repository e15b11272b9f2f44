#pragma once

#include <complex>
#include <vector>

#include "cshift/errors.hpp"

namespace cshift {

using Complex = std::complex<double>;

/// Dense row-major complex matrix, sized for the small model spaces handled
/// here (a few tens of rows at most).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows * cols), Complex(0.0)) {}

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(int i, int j) { return entries_[static_cast<size_t>(i * cols_ + j)]; }
    Complex operator()(int i, int j) const {
        return entries_[static_cast<size_t>(i * cols_ + j)];
    }
    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    double frobenius_norm() const;
    ComplexMatrix scaled(Complex factor) const;
    /// Column j as a vector.
    std::vector<Complex> column(int j) const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> entries_;
};

/// (A + A*)/2. Callers are expected to hermitize explicitly before calling
/// the eigensolver; it refuses to do so silently.
ComplexMatrix hermitian_part(const ComplexMatrix& A);

struct EigenResult {
    std::vector<double> eigenvalues;  ///< sorted descending
    ComplexMatrix eigenvectors;       ///< unitary, columns matched to eigenvalues
    double offdiag_residual = 0.0;    ///< Frobenius norm of the final off-diagonal part
};

/// Full spectral decomposition of a Hermitian matrix by cyclic Jacobi with
/// complex 2x2 rotations. Throws NotHermitian when ||A - A*||_F exceeds
/// 1e-12 * ||A||_F.
EigenResult hermitian_eigen(const ComplexMatrix& A, double tol_eig = 1e-12);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& A, double tol_eig = 1e-12);

/// Largest singular value, computed as sqrt of the top eigenvalue of A*A.
double operator_norm(const ComplexMatrix& A);

/// Second-largest eigenvalue magnitude of I - AA*; near zero certifies that
/// the defect operator has rank at most one. Returns 0 for 1x1 input.
double rank_one_defect_check(const ComplexMatrix& A);

}  // namespace cshift
