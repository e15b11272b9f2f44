#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "cshift/complex_polynomial.hpp"
#include "cshift/errors.hpp"
#include "cshift/linalg.hpp"

namespace cshift {

/// Finite Blaschke product, the product of Moebius factors
/// (z - a_k)/(1 - conj(a_k) z) over the stored zeros, with no unimodular
/// prefactor. Every zero must lie strictly inside the unit disk; moduli at
/// or above 1 - 1e-12 are rejected so that sqrt(1 - |a|^2) stays
/// well-conditioned.
class BlaschkeProduct {
public:
    explicit BlaschkeProduct(std::vector<Complex> zeros);

    int degree() const { return static_cast<int>(zeros_.size()); }
    const std::vector<Complex>& zeros() const { return zeros_; }

    bool has_real_zeros(double tol = 1e-12) const;
    bool has_distinct_zeros(double separation = 1e-9) const;

    /// Product with every zero rotated by e^{i phi}; the compression it
    /// induces is unitarily equivalent to e^{i phi} times the original one.
    BlaschkeProduct rotated(double phi) const;

private:
    std::vector<Complex> zeros_;
};

/// Evaluates the product of Moebius factors at z.
/// Throws PoleHit when some |1 - conj(a_k) z| < 1e-14.
Complex eval_blaschke(const BlaschkeProduct& B, Complex z);

/// Expanded numerator prod (z - a_k) and denominator prod (1 - conj(a_k) z).
std::pair<ComplexPolynomial, ComplexPolynomial> numerator_denominator(const BlaschkeProduct& B);

/// Upper-triangular matrix of the compression of the shift to the model
/// space, in the orthonormal basis attached to the zero order as given.
struct CompressedShiftMatrix {
    ComplexMatrix matrix;
    std::vector<Complex> zero_order;
};

CompressedShiftMatrix shift_matrix(const BlaschkeProduct& B);

/// Numerical-range ellipse data for a degree-2 product: foci at the zeros,
/// minor axis from the trace formula, major axis from the ellipse identity
/// major^2 = minor^2 + |f1 - f2|^2 (axes are full lengths).
struct EllipseParams {
    std::pair<Complex, Complex> foci;
    double minor_axis = 0.0;
    double major_axis = 0.0;
    Complex center;
};

EllipseParams ellipse_for_degree2(const BlaschkeProduct& B);

/// Largest modulus over an ellipse with real center and real foci:
/// |center| + semi-major axis.
double ellipse_numerical_radius(const EllipseParams& e);

/// Zero-list grammar shared with the CLI: comma-separated complex literals
/// `re` or `re+imi` / `re-imi` with decimal floats, whitespace-insensitive.
/// Examples: "0,0.5" and "0.3+0.1i,-0.2".
std::vector<Complex> parse_zero_list(const std::string& text);
Complex parse_complex_literal(const std::string& text);
std::string format_complex_literal(Complex z);

}  // namespace cshift
