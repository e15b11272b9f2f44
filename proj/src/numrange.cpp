#include "cshift/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cshift {

std::vector<double> default_t_ladder() {
    std::vector<double> ts;
    double t = 1e-2;
    for (int k = 0; k <= 6; ++k) {
        ts.push_back(t);
        t *= 0.5;
    }
    return ts;
}

LadderOptions::LadderOptions() : ts(default_t_ladder()) {}

BoundarySample support_function(const ComplexMatrix& A, double theta) {
    if (!A.is_square()) throw Error("support_function: matrix not square");
    const Complex rot = std::polar(1.0, -theta);
    const ComplexMatrix h = hermitian_part(A.scaled(rot));
    const EigenResult eig = hermitian_eigen(h);
    const int n = A.rows();
    // Boundary point: Rayleigh quotient of A at the top eigenvector.
    Complex point(0.0);
    for (int i = 0; i < n; ++i) {
        Complex row(0.0);
        for (int j = 0; j < n; ++j) {
            row += A(i, j) * eig.eigenvectors(j, 0);
        }
        point += std::conj(eig.eigenvectors(i, 0)) * row;
    }
    return BoundarySample{theta, eig.eigenvalues.front(), point};
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGoldenRatio = 0.6180339887498949;

struct RefinedMax {
    double theta = 0.0;
    double value = 0.0;
    double width = 0.0;
};

RefinedMax golden_section_max(const std::function<double(double)>& h, double lo, double hi,
                              double tol) {
    double x1 = hi - kGoldenRatio * (hi - lo);
    double x2 = lo + kGoldenRatio * (hi - lo);
    double f1 = h(x1);
    double f2 = h(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGoldenRatio * (hi - lo);
            f2 = h(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGoldenRatio * (hi - lo);
            f1 = h(x1);
        }
    }
    const double mid = 0.5 * (lo + hi);
    return RefinedMax{mid, h(mid), hi - lo};
}

}  // namespace

RadiusEstimate sweep_maximize(const std::function<double(double)>& h, const SweepOptions& opts) {
    const int n = std::max(opts.theta_samples, 8);
    std::vector<double> vals(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        vals[static_cast<size_t>(i)] = h(kTwoPi * i / n);
    }

    // Local maxima on the cyclic grid, best few first, smaller angle first
    // among equals.
    std::vector<int> maxima;
    for (int i = 0; i < n; ++i) {
        const double prev = vals[static_cast<size_t>((i + n - 1) % n)];
        const double next = vals[static_cast<size_t>((i + 1) % n)];
        if (vals[static_cast<size_t>(i)] >= prev && vals[static_cast<size_t>(i)] >= next) {
            maxima.push_back(i);
        }
    }
    std::sort(maxima.begin(), maxima.end(), [&](int a, int b) {
        if (vals[static_cast<size_t>(a)] != vals[static_cast<size_t>(b)]) {
            return vals[static_cast<size_t>(a)] > vals[static_cast<size_t>(b)];
        }
        return a < b;
    });
    const size_t keep = std::min<size_t>(maxima.size(), static_cast<size_t>(opts.refine_candidates));

    RadiusEstimate best;
    bool have = false;
    const double step = kTwoPi / n;
    for (size_t k = 0; k < keep; ++k) {
        const double center = kTwoPi * maxima[k] / n;
        const RefinedMax r = golden_section_max(h, center - step, center + step, opts.angle_tol);
        double theta = std::fmod(r.theta, kTwoPi);
        if (theta < 0.0) theta += kTwoPi;
        if (!have || r.value > best.value ||
            (r.value == best.value && theta < best.argmax_theta)) {
            best.value = r.value;
            best.argmax_theta = theta;
            best.refinement_width = r.width;
            have = true;
        }
    }
    return best;
}

RadiusEstimate numerical_radius(const ComplexMatrix& A, const SweepOptions& opts) {
    if (!A.is_square()) throw Error("numerical_radius: matrix not square");
    return sweep_maximize(
        [&A](double theta) { return support_function(A, theta).support_value; }, opts);
}

double norm_I_plus_tA(const ComplexMatrix& A, Complex t) {
    return operator_norm(ComplexMatrix::identity(A.rows()) + A.scaled(t));
}

double richardson_limit(const std::function<double(double)>& quotient,
                        const LadderOptions& opts) {
    if (opts.ts.size() < 2) throw Error("richardson_limit: ladder needs at least two rungs");
    std::vector<double> q;
    q.reserve(opts.ts.size());
    for (double t : opts.ts) q.push_back(quotient(t));

    std::vector<double> extrap;
    for (size_t k = 0; k + 1 < q.size(); ++k) {
        const double ratio = opts.ts[k] / opts.ts[k + 1];
        if (ratio <= 1.0) throw Error("richardson_limit: ladder must be strictly decreasing");
        extrap.push_back((ratio * q[k + 1] - q[k]) / (ratio - 1.0));
    }
    if (extrap.size() >= 2) {
        const double drift = std::abs(extrap.back() - extrap[extrap.size() - 2]);
        if (drift > opts.stability_tol) {
            throw ExtrapolationUnstable("richardson_limit: successive extrapolants differ by " +
                                        std::to_string(drift));
        }
    }
    return extrap.back();
}

RadiusEstimate radius_via_limit(const ComplexMatrix& A, const SweepOptions& sweep,
                                const LadderOptions& ladder) {
    if (!A.is_square()) throw Error("radius_via_limit: matrix not square");
    auto directional = [&](double theta) {
        const Complex phase = std::polar(1.0, theta);
        return richardson_limit(
            [&](double t) { return (norm_I_plus_tA(A, t * phase) - 1.0) / t; }, ladder);
    };
    return sweep_maximize(directional, sweep);
}

}  // namespace cshift
