#pragma once

#include <vector>

#include "cshift/blaschke.hpp"
#include "cshift/complex_polynomial.hpp"
#include "cshift/result.hpp"

namespace cshift {

/// Roots of z B(z) = sign for a product with real zeros, i.e. of the
/// polynomial z num(z) - sign den(z). Every solution lies on the unit
/// circle; the residuals record how far the computed ones drift. Roots
/// within 1e-8 of +1 or -1 are trivial: they sit at eigenvalue-adjacent
/// tangent points and never realize the maximum real part, so they are
/// excluded from the candidate list.
struct RootCertificate {
    int equation_sign = 1;  ///< the sign s in z B(z) = s
    RootSet roots;
    std::vector<double> unimodularity_residuals;  ///< |1 - |root|| per root
    std::vector<Complex> trivial_roots;
    std::vector<double> candidate_real_parts;
};

/// sign-equation coefficients after the trivial (z -+ 1) factors are
/// divided out: alpha is the negative of the z coefficient, beta half the
/// z^2 coefficient of the remaining self-inversive cofactor.
struct ClosedFormCoefficients {
    double alpha = 0.0;
    double beta = 0.0;
    int degree = 0;  ///< degree of the Blaschke product (2, 3 or 4)
};

/// Builds and solves the sign equation. Throws NotRealZeros unless every
/// zero of B is real; sign must be +1 or -1.
RootCertificate root_equation(const BlaschkeProduct& B, int sign,
                              const RootFindOptions& rootfind = {});

struct RootMethodOptions {
    bool cross_check = true;
    double oracle_tolerance = 1e-6;
    SweepOptions sweep;
    RootFindOptions rootfind;
};

struct RootMethodResult {
    NormResult result;
    RootCertificate plus_certificate;
    RootCertificate minus_certificate;
};

/// Numerical radius for a product with real zeros: the largest |Re| over
/// the nontrivial roots of both sign equations. With cross-checking on, the
/// value is compared against the eigenvalue-sweep oracle; a mismatch beyond
/// the tolerance flags a warning, and for degree > 4 (where the candidate
/// selection rule is heuristic) additionally downgrades the value to the
/// oracle's.
RootMethodResult numerical_radius_root_method(const BlaschkeProduct& B,
                                              const RootMethodOptions& opts = {});

/// Degree-2 closed form max{|(a1+a2-a1a2+1)/2|, |(a1+a2+a1a2-1)/2|}.
double closed_form_degree2(double a1, double a2);

/// Degree-3 closed form with alpha = a+b+c+abc and beta = ab+ac+bc:
/// max of |(alpha +- sqrt(alpha^2 - 8(beta-1)))/4|.
double closed_form_degree3(double a, double b, double c);

/// Degree-4 closed form: for each sign equation, divide out the trivial
/// root, read (alpha, beta) off the quartic cofactor, and take the largest
/// |(alpha +- sqrt(alpha^2 - 8(beta-1)))/4| over both equations.
double closed_form_degree4(double a, double b, double c, double d);

ClosedFormCoefficients closed_form_coeffs(const BlaschkeProduct& B, int sign);

}  // namespace cshift
