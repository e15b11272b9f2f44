#pragma once

#include <vector>

#include "cshift/blaschke.hpp"
#include "cshift/linalg.hpp"
#include "cshift/result.hpp"

namespace cshift {

/// Interpolation data for the bounded problem h(z_k) = (1 + t z_k)/gamma:
/// distinct nodes in the disk, the perturbation t, and the trial bound.
/// A gamma below max_k |1 + t z_k| makes a diagonal entry of the kernel
/// matrix negative, so such problems are infeasible by inspection (they are
/// still representable; feasibility testing reports them as infeasible).
struct PickProblem {
    std::vector<Complex> nodes;
    Complex t;
    double gamma = 1.0;

    /// Validates node separation (NodesTooClose below 1e-9) and gamma > 0.
    static PickProblem make(std::vector<Complex> nodes, Complex t, double gamma);
};

/// The kernel matrix split E - F/gamma^2: E is the Szego kernel part with
/// entries 1/(1 - z_j conj(z_k)), F has entries
/// (1 + t z_j) conj(1 + t z_k) / (1 - z_j conj(z_k)), so F = D E D* for the
/// diagonal D of (1 + t z_j) and both pieces are positive semidefinite.
struct PickMatrixDecomposition {
    ComplexMatrix E;
    ComplexMatrix F;
    ComplexMatrix assembled;
};

PickMatrixDecomposition pick_matrix(const PickProblem& problem);

struct Feasibility {
    bool feasible = false;
    double min_eigenvalue = 0.0;
};

/// Feasible iff the assembled kernel matrix is PSD within the acceptance
/// band (min eigenvalue >= -1e-11).
Feasibility is_feasible(const PickProblem& problem);

struct PickOptions {
    double tol_bisect = 1e-12;
    double eig_band = 1e-11;  ///< PSD acceptance band on the min eigenvalue
};

/// The smallest feasible interpolation bound, equal to ||I + t S_B|| for
/// the product with the given zeros: bisection on gamma between
/// max_k |1 + t z_k| and 1 + |t|, driven by the sign of the monotone min
/// eigenvalue. When the lower endpoint is already feasible it is returned
/// directly (the bracket degenerates).
NormResult critical_gamma(const std::vector<Complex>& nodes, Complex t,
                          const PickOptions& opts = {});

/// Deterministic radial separation of repeated zeros: the m-th copy of a
/// repeated zero is pushed outward by m * 1e-6 (along +1 for zeros at the
/// origin). Results computed from the perturbed nodes carry an O(1e-6)
/// error bar.
std::vector<Complex> separate_repeated_zeros(const std::vector<Complex>& zeros);

/// Numerical radius through the interpolation route: for each angle,
/// extrapolate (critical_gamma(zeros, t e^{i theta}) - 1)/t down the
/// ladder, then maximize over the sweep.
RadiusEstimate radius_via_pick(const BlaschkeProduct& B, const SweepOptions& sweep = {},
                               const LadderOptions& ladder = {}, const PickOptions& opts = {});

}  // namespace cshift
