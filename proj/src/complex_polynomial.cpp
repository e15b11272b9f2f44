#include "cshift/complex_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cshift {

namespace {

constexpr double kTinyDenominator = 1e-290;

}  // namespace

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == Complex(0.0)) {
        coeffs_.pop_back();
    }
    if (coeffs_.empty()) {
        coeffs_.push_back(Complex(0.0));
    }
}

ComplexPolynomial ComplexPolynomial::from_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> c{Complex(1.0)};
    for (Complex r : roots) {
        c.push_back(Complex(0.0));
        for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
            c[k] = c[k - 1] - r * c[k];
        }
        c[0] = -r * c[0];
    }
    return ComplexPolynomial(std::move(c));
}

Complex ComplexPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Complex(0.0);
    return coeffs_[static_cast<size_t>(k)];
}

double ComplexPolynomial::max_abs_coefficient() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

bool ComplexPolynomial::real_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Complex& c) { return c.imag() == 0.0; });
}

ComplexPolynomial ComplexPolynomial::derivative() const {
    if (degree() == 0) return ComplexPolynomial();
    std::vector<Complex> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    }
    return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::times_z() const {
    std::vector<Complex> c(coeffs_.size() + 1, Complex(0.0));
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::scaled(Complex factor) const {
    std::vector<Complex> c(coeffs_);
    for (Complex& v : c) v *= factor;
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator+(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    std::vector<Complex> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Complex(0.0));
    for (size_t k = 0; k < p.coeffs_.size(); ++k) c[k] += p.coeffs_[k];
    for (size_t k = 0; k < q.coeffs_.size(); ++k) c[k] += q.coeffs_[k];
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator-(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    std::vector<Complex> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Complex(0.0));
    for (size_t k = 0; k < p.coeffs_.size(); ++k) c[k] += p.coeffs_[k];
    for (size_t k = 0; k < q.coeffs_.size(); ++k) c[k] -= q.coeffs_[k];
    return ComplexPolynomial(std::move(c));
}

Complex eval(const ComplexPolynomial& p, Complex z) {
    const auto& c = p.coefficients();
    Complex acc(0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

std::pair<Complex, Complex> eval_with_derivative(const ComplexPolynomial& p, Complex z) {
    const auto& c = p.coefficients();
    Complex v(0.0), d(0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d = d * z + v;
        v = v * z + *it;
    }
    return {v, d};
}

ComplexPolynomial multiply(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    const auto& a = p.coefficients();
    const auto& b = q.coefficients();
    std::vector<Complex> c(a.size() + b.size() - 1, Complex(0.0));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial deflate(const ComplexPolynomial& p, Complex root) {
    const auto& c = p.coefficients();
    const int n = p.degree();
    if (n < 1) return ComplexPolynomial();
    std::vector<Complex> q(static_cast<size_t>(n), Complex(0.0));
    Complex carry = c[static_cast<size_t>(n)];
    for (int k = n - 1; k >= 0; --k) {
        q[static_cast<size_t>(k)] = carry;
        carry = c[static_cast<size_t>(k)] + root * carry;
    }
    return ComplexPolynomial(std::move(q));
}

namespace {

double cauchy_bound(const ComplexPolynomial& p) {
    const auto& c = p.coefficients();
    const double lead = std::abs(c.back());
    double m = 0.0;
    for (size_t k = 0; k + 1 < c.size(); ++k) {
        m = std::max(m, std::abs(c[k]) / lead);
    }
    return 1.0 + m;
}

/// Merge roots within radius into repeated roots at the cluster centroid.
/// Marks members of nontrivial clusters so the residual acceptance can
/// widen for them (the centroid of a merged pair is not a root to working
/// precision unless the multiplicity is genuine).
std::vector<Complex> merge_clusters(std::vector<Complex> roots, double radius,
                                    std::vector<bool>& merged) {
    const size_t n = roots.size();
    std::vector<size_t> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (std::abs(roots[i] - roots[j]) <= radius) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<Complex> sum(n, Complex(0.0));
    std::vector<int> count(n, 0);
    for (size_t i = 0; i < n; ++i) {
        size_t r = find(i);
        sum[r] += roots[i];
        count[r] += 1;
    }
    merged.assign(n, false);
    for (size_t i = 0; i < n; ++i) {
        size_t r = find(i);
        roots[i] = sum[r] / static_cast<double>(count[r]);
        merged[i] = count[r] > 1;
    }
    return roots;
}

/// For real-coefficient polynomials: make the root multiset exactly closed
/// under conjugation. Greedy pairing from the largest |Im| down; a root whose
/// best conjugate partner is too far away is flattened onto the real axis.
std::vector<Complex> enforce_conjugate_closure(std::vector<Complex> roots, double pair_tol) {
    const size_t n = roots.size();
    std::vector<bool> done(n, false);
    for (;;) {
        size_t pivot = n;
        double best_im = 0.0;
        for (size_t i = 0; i < n; ++i) {
            if (!done[i] && std::abs(roots[i].imag()) > best_im) {
                best_im = std::abs(roots[i].imag());
                pivot = i;
            }
        }
        if (pivot == n) break;  // rest are exactly real
        const Complex target = std::conj(roots[pivot]);
        size_t mate = n;
        double best_dist = pair_tol * std::max(1.0, std::abs(roots[pivot]));
        for (size_t j = 0; j < n; ++j) {
            if (j == pivot || done[j]) continue;
            double d = std::abs(roots[j] - target);
            if (d < best_dist) {
                best_dist = d;
                mate = j;
            }
        }
        if (mate == n) {
            roots[pivot] = Complex(roots[pivot].real(), 0.0);
            done[pivot] = true;
        } else {
            Complex avg = 0.5 * (roots[pivot] + std::conj(roots[mate]));
            roots[pivot] = avg;
            roots[mate] = std::conj(avg);
            done[pivot] = done[mate] = true;
        }
    }
    return roots;
}

}  // namespace

RootSet find_roots(const ComplexPolynomial& p, const RootFindOptions& opts) {
    const int n = p.degree();
    if (n < 1) throw Error("find_roots: degree must be at least 1");

    const double scale = p.max_abs_coefficient();
    const double accept = opts.tol_root * scale;

    // Initial guesses equally spaced on the Cauchy-bound circle, with a
    // fixed angular offset so real-axis symmetry cannot trap the iteration.
    const double radius = cauchy_bound(p);
    std::vector<Complex> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double angle = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.25) /
                           static_cast<double>(n) +
                       0.57;
        z[static_cast<size_t>(i)] = std::polar(radius, angle);
    }

    int sweeps = 0;
    for (; sweeps < opts.max_aberth_sweeps; ++sweeps) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            auto [pv, dv] = eval_with_derivative(p, z[static_cast<size_t>(i)]);
            worst = std::max(worst, std::abs(pv));
            if (std::abs(pv) <= accept) continue;
            if (std::abs(dv) < kTinyDenominator) {
                z[static_cast<size_t>(i)] += Complex(1e-8, 1e-8);
                continue;
            }
            Complex newton = pv / dv;
            Complex repulsion(0.0);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                if (std::abs(diff) < kTinyDenominator) diff = Complex(1e-12, 1e-12);
                repulsion += 1.0 / diff;
            }
            Complex denom = 1.0 - newton * repulsion;
            Complex step = (std::abs(denom) < kTinyDenominator) ? newton : newton / denom;
            z[static_cast<size_t>(i)] -= step;
        }
        if (worst <= accept) break;
    }

    // Newton polish, keeping only improving steps.
    for (int i = 0; i < n; ++i) {
        Complex best = z[static_cast<size_t>(i)];
        double best_res = std::abs(eval(p, best));
        Complex cur = best;
        for (int step = 0; step < opts.max_newton_steps; ++step) {
            auto [pv, dv] = eval_with_derivative(p, cur);
            if (std::abs(dv) < kTinyDenominator) break;
            cur -= pv / dv;
            double res = std::abs(eval(p, cur));
            if (res < best_res) {
                best_res = res;
                best = cur;
            } else {
                break;
            }
        }
        z[static_cast<size_t>(i)] = best;
    }

    std::vector<bool> merged;
    z = merge_clusters(std::move(z), opts.cluster_radius, merged);
    if (p.real_coefficients()) {
        // Pairing distance is a small multiple of the cluster radius:
        // anything nearer its mirror image than that is one conjugate pair.
        z = enforce_conjugate_closure(std::move(z), 10.0 * opts.cluster_radius);
    }

    std::vector<size_t> order(z.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (z[a].real() != z[b].real()) return z[a].real() < z[b].real();
        return z[a].imag() < z[b].imag();
    });

    RootSet out;
    out.iterations = sweeps;
    out.roots.reserve(static_cast<size_t>(n));
    out.residuals.reserve(static_cast<size_t>(n));
    for (size_t idx : order) {
        const Complex r = z[idx];
        const double res = std::abs(eval(p, r));
        out.roots.push_back(r);
        out.residuals.push_back(res);
        double bound = accept;
        if (merged[idx]) {
            // A merged centroid is off each cluster member by up to the
            // cluster radius; scale the band by the local derivative.
            bound += std::abs(eval_with_derivative(p, r).second) * opts.cluster_radius;
        }
        if (res > bound) {
            throw NonConvergence("find_roots: residual " + std::to_string(res) +
                                 " above tolerance after iteration caps");
        }
    }
    return out;
}

}  // namespace cshift
