#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "cshift/linalg.hpp"

namespace cshift {

/// One point of the numerical-range boundary sweep: the support value is
/// the top eigenvalue of the Hermitian part of e^{-i theta} A and the
/// boundary point is v*Av at the corresponding top eigenvector.
struct BoundarySample {
    double theta = 0.0;
    double support_value = 0.0;
    Complex boundary_point;
};

struct RadiusEstimate {
    double value = 0.0;
    double argmax_theta = 0.0;
    double refinement_width = 0.0;
};

struct SweepOptions {
    int theta_samples = 720;
    double angle_tol = 1e-12;   ///< final golden-section bracket width
    int refine_candidates = 3;  ///< local maxima refined after the coarse pass
};

struct LadderOptions {
    std::vector<double> ts;       ///< decreasing perturbation sizes
    double stability_tol = 1e-4;  ///< max disagreement of successive extrapolants
    LadderOptions();
};

/// The default perturbation ladder 1e-2 * 2^-k, k = 0..6.
std::vector<double> default_t_ladder();

BoundarySample support_function(const ComplexMatrix& A, double theta);

/// Maximizes a 2pi-periodic function: coarse uniform grid, then
/// golden-section refinement around the best few local maxima. Ties in the
/// refined value resolve to the smallest angle.
RadiusEstimate sweep_maximize(const std::function<double(double)>& h, const SweepOptions& opts);

/// Numerical radius via the support-function sweep.
RadiusEstimate numerical_radius(const ComplexMatrix& A, const SweepOptions& opts = {});

double norm_I_plus_tA(const ComplexMatrix& A, Complex t);

/// Richardson extrapolation of a difference quotient q(t) to t -> 0+,
/// assuming q(t) = w + c t + O(t^2). Throws ExtrapolationUnstable when the
/// last two extrapolants disagree beyond the stability tolerance.
double richardson_limit(const std::function<double(double)>& quotient,
                        const LadderOptions& opts);

/// Numerical radius through the norm limit: for each angle extrapolate
/// (||I + t e^{i theta} A|| - 1)/t down the ladder, then maximize over the
/// sweep.
RadiusEstimate radius_via_limit(const ComplexMatrix& A, const SweepOptions& sweep = {},
                                const LadderOptions& ladder = {});

}  // namespace cshift
