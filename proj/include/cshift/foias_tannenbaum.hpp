#pragma once

#include <utility>
#include <vector>

#include "cshift/blaschke.hpp"

namespace cshift {

/// One sample of the singularity scan: the quadratic roots z1, z2 attached
/// to (a, rho) and the value of the scalar equation whose vanishing marks a
/// singular defect operator. The roots satisfy z1 z2 = conj(a)/a and
/// z1 + z2 = (4 rho^2 - 1 - |a|^2)/a.
struct FTState {
    Complex a;
    double rho = 0.0;
    Complex z1;
    Complex z2;
    Complex defect;
};

/// Both roots of a z^2 - (4 rho^2 - 1 - |a|^2) z + conj(a) = 0, ordered by
/// ascending imaginary part, then ascending real part.
std::pair<Complex, Complex> ft_quadratic_roots(Complex a, double rho);

/// z2 B(z2) - z1 B(z1) + conj(a) (B(z2) - B(z1)) at the quadratic roots.
/// For real a and real zeros this is purely imaginary.
Complex ft_defect(const BlaschkeProduct& B, Complex a, double rho);

FTState ft_state(const BlaschkeProduct& B, Complex a, double rho);

struct FTOptions {
    int scan_samples = 10000;
    double rho_tol = 1e-12;       ///< bisection width on rho
    double scan_margin = 0.05;    ///< scan starts at (1+|a|)/2 + margin
    double min_rho_factor = 1e-3; ///< scan ends at |a| * this
};

struct FTResult {
    double rho_bar = 0.0;
    double norm = 0.0;  ///< 2 * rho_bar
    std::pair<double, double> bracket{0.0, 0.0};
    double defect_residual = 0.0;
};

/// ||I + a S_B|| located as twice the largest rho at which the defect
/// equation vanishes. The scan walks rho downward on a dense grid; for real
/// a and real zeros the defect reduces to the real function
/// Im(z1 B(z1)) + a Im(B(z1)) with z1 on the unit circle, and samples whose
/// circle intersection would have |Re z1| > 1 are skipped. The general
/// complex case bisects the phase-aligned imaginary part Im(conj(a) defect)
/// and falls back to minimizing |defect| where no sign change brackets.
FTResult ft_norm(const BlaschkeProduct& B, Complex a, const FTOptions& opts = {});

/// The scan samples (for plotting); skipped samples are omitted.
std::vector<FTState> ft_trace(const BlaschkeProduct& B, Complex a, int samples = 2000);

}  // namespace cshift
