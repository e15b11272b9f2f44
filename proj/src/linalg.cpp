#include "cshift/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cshift {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Complex(1.0);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            m(j, i) = std::conj((*this)(i, j));
        }
    }
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : entries_) s += std::norm(v);
    return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const {
    ComplexMatrix m(*this);
    for (Complex& v : m.entries_) v *= factor;
    return m;
}

std::vector<Complex> ComplexMatrix::column(int j) const {
    std::vector<Complex> v(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = (*this)(i, j);
    return v;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0)) continue;
            for (int j = 0; j < b.cols_; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a);
    for (size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a);
    for (size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] -= b.entries_[k];
    return c;
}

ComplexMatrix hermitian_part(const ComplexMatrix& A) {
    ComplexMatrix h(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) {
            h(i, j) = 0.5 * (A(i, j) + std::conj(A(j, i)));
        }
    }
    return h;
}

namespace {

double offdiag_norm(const ComplexMatrix& w) {
    double s = 0.0;
    for (int i = 0; i < w.rows(); ++i) {
        for (int j = 0; j < w.cols(); ++j) {
            if (i != j) s += std::norm(w(i, j));
        }
    }
    return std::sqrt(s);
}

}  // namespace

EigenResult hermitian_eigen(const ComplexMatrix& A, double tol_eig) {
    if (!A.is_square()) throw NotHermitian("hermitian_eigen: matrix not square");
    const int n = A.rows();
    const double norm_a = A.frobenius_norm();
    const double herm_defect = (A - A.adjoint()).frobenius_norm();
    if (herm_defect > 1e-12 * std::max(norm_a, 1e-300)) {
        throw NotHermitian("hermitian_eigen: ||A - A*|| = " + std::to_string(herm_defect) +
                           " exceeds the Hermitian acceptance band");
    }

    // Work on an exactly Hermitian copy built from the upper triangle.
    ComplexMatrix w(n, n);
    for (int i = 0; i < n; ++i) {
        w(i, i) = Complex(A(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            w(i, j) = A(i, j);
            w(j, i) = std::conj(A(i, j));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double converge = 1e-13 * norm_a;
    const int max_sweeps = 100;
    // One extra sweep after crossing the threshold: quadratic convergence
    // turns it into near-roundoff off-diagonals, which the PSD-boundary
    // bisection in the interpolation solver depends on.
    bool polish = true;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (offdiag_norm(w) <= converge) {
            if (!polish) break;
            polish = false;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex g = w(p, q);
                const double ag = std::abs(g);
                if (ag == 0.0) continue;
                // Phase that makes the pivot entry real, then a classic
                // real Jacobi rotation on the remaining 2x2 block.
                const Complex omega = g / ag;
                const double app = w(p, p).real();
                const double aqq = w(q, q).real();
                const double tau = (aqq - app) / (2.0 * ag);
                double t;
                if (tau >= 0.0) {
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                } else {
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Unitary Q = [[c, s*omega_bar?]]: columns (c, -s*conj(omega))
                // and (s, c*conj(omega)); applied as W <- Q* W Q, V <- V Q.
                const Complex so = s * std::conj(omega);
                for (int k = 0; k < n; ++k) {
                    const Complex wkp = w(k, p);
                    const Complex wkq = w(k, q);
                    w(k, p) = c * wkp - so * wkq;
                    w(k, q) = s * wkp + c * std::conj(omega) * wkq;
                }
                const Complex so_row = s * omega;
                for (int k = 0; k < n; ++k) {
                    const Complex wpk = w(p, k);
                    const Complex wqk = w(q, k);
                    w(p, k) = c * wpk - so_row * wqk;
                    w(q, k) = s * wpk + c * omega * wqk;
                }
                w(p, q) = Complex(0.0);
                w(q, p) = Complex(0.0);
                w(p, p) = Complex(w(p, p).real(), 0.0);
                w(q, q) = Complex(w(q, q).real(), 0.0);
                for (int k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - so * vkq;
                    v(k, q) = s * vkp + c * std::conj(omega) * vkq;
                }
            }
        }
    }

    EigenResult res;
    res.offdiag_residual = offdiag_norm(w);
    if (res.offdiag_residual > std::max(converge, tol_eig * norm_a)) {
        throw NonConvergence("hermitian_eigen: Jacobi sweeps exhausted with off-diagonal " +
                             std::to_string(res.offdiag_residual));
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return w(a, a).real() > w(b, b).real(); });

    res.eigenvalues.resize(static_cast<size_t>(n));
    res.eigenvectors = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        res.eigenvalues[static_cast<size_t>(j)] = w(order[static_cast<size_t>(j)],
                                                    order[static_cast<size_t>(j)])
                                                      .real();
        for (int i = 0; i < n; ++i) {
            res.eigenvectors(i, j) = v(i, order[static_cast<size_t>(j)]);
        }
    }
    return res;
}

double min_eigenvalue(const ComplexMatrix& A, double tol_eig) {
    const EigenResult r = hermitian_eigen(A, tol_eig);
    return r.eigenvalues.back();
}

double operator_norm(const ComplexMatrix& A) {
    if (A.rows() == 0 || A.cols() == 0) return 0.0;
    const ComplexMatrix gram = hermitian_part(A.adjoint() * A);
    const EigenResult r = hermitian_eigen(gram);
    return std::sqrt(std::max(0.0, r.eigenvalues.front()));
}

double rank_one_defect_check(const ComplexMatrix& A) {
    if (!A.is_square()) throw Error("rank_one_defect_check: matrix not square");
    const int n = A.rows();
    if (n <= 1) return 0.0;
    const ComplexMatrix defect =
        hermitian_part(ComplexMatrix::identity(n) - A * A.adjoint());
    EigenResult r = hermitian_eigen(defect);
    std::vector<double> mags;
    mags.reserve(r.eigenvalues.size());
    for (double ev : r.eigenvalues) mags.push_back(std::abs(ev));
    std::sort(mags.begin(), mags.end(), std::greater<>());
    return mags[1];
}

}  // namespace cshift
