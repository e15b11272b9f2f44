#include "cshift/pick.hpp"

#include <algorithm>
#include <cmath>

namespace cshift {

namespace {

constexpr double kNodeSeparation = 1e-9;

double diagonal_floor(const std::vector<Complex>& nodes, Complex t) {
    double m = 0.0;
    for (const Complex& z : nodes) m = std::max(m, std::abs(1.0 + t * z));
    return m;
}

}  // namespace

PickProblem PickProblem::make(std::vector<Complex> nodes, Complex t, double gamma) {
    if (nodes.empty()) throw Error("PickProblem: at least one node required");
    if (!(std::isfinite(gamma) && gamma > 0.0)) {
        throw Error("PickProblem: gamma must be positive and finite");
    }
    for (size_t j = 0; j < nodes.size(); ++j) {
        if (std::abs(nodes[j]) >= 1.0) {
            throw Error("PickProblem: nodes must lie inside the unit disk");
        }
        for (size_t k = j + 1; k < nodes.size(); ++k) {
            if (std::abs(nodes[j] - nodes[k]) < kNodeSeparation) {
                throw NodesTooClose("PickProblem: node separation below 1e-9");
            }
        }
    }
    return PickProblem{std::move(nodes), t, gamma};
}

PickMatrixDecomposition pick_matrix(const PickProblem& problem) {
    const auto& z = problem.nodes;
    const int n = static_cast<int>(z.size());
    const double g2 = problem.gamma * problem.gamma;

    PickMatrixDecomposition d;
    d.E = ComplexMatrix(n, n);
    d.F = ComplexMatrix(n, n);
    d.assembled = ComplexMatrix(n, n);
    // Fill the upper triangle and mirror, so the result is Hermitian to the
    // last bit.
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            const Complex szego = 1.0 / (1.0 - z[static_cast<size_t>(j)] *
                                                   std::conj(z[static_cast<size_t>(k)]));
            const Complex weight = (1.0 + problem.t * z[static_cast<size_t>(j)]) *
                                   std::conj(1.0 + problem.t * z[static_cast<size_t>(k)]);
            d.E(j, k) = szego;
            d.F(j, k) = weight * szego;
            d.assembled(j, k) = szego - weight * szego / g2;
            if (k != j) {
                d.E(k, j) = std::conj(d.E(j, k));
                d.F(k, j) = std::conj(d.F(j, k));
                d.assembled(k, j) = std::conj(d.assembled(j, k));
            } else {
                d.E(j, j) = Complex(d.E(j, j).real(), 0.0);
                d.F(j, j) = Complex(d.F(j, j).real(), 0.0);
                d.assembled(j, j) = Complex(d.assembled(j, j).real(), 0.0);
            }
        }
    }
    return d;
}

Feasibility is_feasible(const PickProblem& problem) {
    const PickMatrixDecomposition d = pick_matrix(problem);
    const double lambda = min_eigenvalue(d.assembled);
    return Feasibility{lambda >= -1e-11, lambda};
}

NormResult critical_gamma(const std::vector<Complex>& nodes, Complex t,
                          const PickOptions& opts) {
    // Representability checks (separation, disk membership) piggyback on a
    // probe problem at gamma = 1.
    PickProblem probe = PickProblem::make(nodes, t, 1.0);

    auto min_eig_at = [&](double gamma) {
        probe.gamma = gamma;
        return min_eigenvalue(pick_matrix(probe).assembled);
    };

    double lo = diagonal_floor(nodes, t);
    double hi = 1.0 + std::abs(t) + 1e-9;

    NormResult res;
    res.method = Method::pick;
    res.zeros_echo = nodes;
    res.t_echo = t;

    const double lo_eig = min_eig_at(std::max(lo, opts.tol_bisect));
    if (lo_eig >= -opts.eig_band) {
        // Endpoints do not straddle: the norm is pinned at the diagonal
        // floor (the one-node case and t = 0 land here).
        res.value = lo;
        res.diagnostics["min_eigenvalue"] = lo_eig;
        res.diagnostics["bracket_width"] = 0.0;
        return res;
    }
    const double hi_eig = min_eig_at(hi);
    if (hi_eig < -opts.eig_band) {
        throw BracketFailure("critical_gamma: upper endpoint 1+|t| is infeasible");
    }

    // Bisect on the exact sign: near-parallel nodes flatten the
    // min-eigenvalue slope in gamma, and an acceptance band there would
    // translate into a visible bias of the returned bound.
    while (hi - lo > opts.tol_bisect) {
        const double mid = 0.5 * (lo + hi);
        if (min_eig_at(mid) >= 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    res.value = hi;  // the feasible endpoint: PSD within the band
    res.diagnostics["min_eigenvalue"] = min_eig_at(hi);
    res.diagnostics["bracket_width"] = hi - lo;
    return res;
}

std::vector<Complex> separate_repeated_zeros(const std::vector<Complex>& zeros) {
    std::vector<Complex> out;
    out.reserve(zeros.size());
    for (const Complex& z : zeros) {
        Complex candidate = z;
        int bump = 0;
        auto collides = [&](const Complex& c) {
            return std::any_of(out.begin(), out.end(), [&](const Complex& o) {
                return std::abs(o - c) < kNodeSeparation;
            });
        };
        while (collides(candidate)) {
            ++bump;
            const Complex direction = (std::abs(z) > 0.0) ? z / std::abs(z) : Complex(1.0);
            candidate = z + direction * (1e-6 * bump);
        }
        out.push_back(candidate);
    }
    return out;
}

RadiusEstimate radius_via_pick(const BlaschkeProduct& B, const SweepOptions& sweep,
                               const LadderOptions& ladder, const PickOptions& opts) {
    const std::vector<Complex> nodes = separate_repeated_zeros(B.zeros());
    auto directional = [&](double theta) {
        const Complex phase = std::polar(1.0, theta);
        return richardson_limit(
            [&](double t) {
                return (critical_gamma(nodes, t * phase, opts).value - 1.0) / t;
            },
            ladder);
    };
    return sweep_maximize(directional, sweep);
}

}  // namespace cshift
