#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "cshift/errors.hpp"

namespace cshift {

using Complex = std::complex<double>;

/// Dense univariate polynomial over the complex numbers with coefficients
/// stored in ascending degree order. Trailing zero coefficients are trimmed
/// on construction so the leading coefficient is nonzero; the zero
/// polynomial is kept as the single coefficient 0.
class ComplexPolynomial {
public:
    ComplexPolynomial() : coeffs_{Complex(0.0)} {}
    explicit ComplexPolynomial(std::vector<Complex> coeffs);

    /// Monic polynomial with the given roots (with multiplicity).
    static ComplexPolynomial from_roots(const std::vector<Complex>& roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coefficients() const { return coeffs_; }
    /// Coefficient of z^k; zero outside the stored range.
    Complex coefficient(int k) const;

    double max_abs_coefficient() const;
    bool real_coefficients() const;

    ComplexPolynomial derivative() const;
    /// Multiplication by the monomial z.
    ComplexPolynomial times_z() const;
    ComplexPolynomial scaled(Complex factor) const;

    friend ComplexPolynomial operator+(const ComplexPolynomial& p, const ComplexPolynomial& q);
    friend ComplexPolynomial operator-(const ComplexPolynomial& p, const ComplexPolynomial& q);

private:
    std::vector<Complex> coeffs_;
};

/// Horner evaluation.
Complex eval(const ComplexPolynomial& p, Complex z);

/// Evaluates p and p' in a single Horner pass.
std::pair<Complex, Complex> eval_with_derivative(const ComplexPolynomial& p, Complex z);

/// Coefficient convolution; degree of the result is deg p + deg q.
ComplexPolynomial multiply(const ComplexPolynomial& p, const ComplexPolynomial& q);

/// Synthetic division by (z - root). The remainder is dropped, so this is
/// exact only when root actually annihilates p.
ComplexPolynomial deflate(const ComplexPolynomial& p, Complex root);

struct RootSet {
    std::vector<Complex> roots;     ///< all roots, with multiplicity
    std::vector<double> residuals;  ///< |p(root)| per root
    int iterations = 0;             ///< simultaneous-iteration sweeps used
};

struct RootFindOptions {
    double tol_root = 1e-13;      ///< residual acceptance, relative to max |c_i|
    int max_aberth_sweeps = 200;
    int max_newton_steps = 20;
    double cluster_radius = 1e-7; ///< merge distance for repeated roots
};

/// All complex roots of p via Aberth-Ehrlich simultaneous iteration with
/// per-root Newton polishing. Roots closer than cluster_radius are merged
/// into a repeated root at their centroid. When every coefficient is real
/// the returned multiset is closed under conjugation exactly: near-conjugate
/// pairs are averaged and near-real roots flattened onto the axis.
/// Throws NonConvergence if some residual stays above tol_root * max|c_i|.
RootSet find_roots(const ComplexPolynomial& p, const RootFindOptions& opts = {});

}  // namespace cshift
