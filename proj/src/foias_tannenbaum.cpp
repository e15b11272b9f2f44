#include "cshift/foias_tannenbaum.hpp"

#include <algorithm>
#include <cmath>

namespace cshift {

namespace {

constexpr double kRealTol = 1e-12;
constexpr double kEdgeExclusion = 1e-7;     // reject roots this close to a band edge
constexpr double kResidualAccept = 1e-8;    // general-path acceptance on |defect|

bool real_case(const BlaschkeProduct& B, Complex a) {
    return std::abs(a.imag()) <= kRealTol && B.has_real_zeros(kRealTol);
}

/// Real-case defect functional Im(z1 B(z1)) + a Im B(z1) with z1 placed on
/// the unit circle from the root-sum identity. Returns false when the
/// circle intersection does not exist (|Re z1| > 1).
bool real_defect(const BlaschkeProduct& B, double a, double rho, double& g) {
    const double s = (4.0 * rho * rho - 1.0 - a * a) / (2.0 * a);
    if (std::abs(s) > 1.0) return false;
    const Complex z1(s, -std::sqrt(std::max(0.0, 1.0 - s * s)));
    const Complex bz = eval_blaschke(B, z1);
    g = std::imag(z1 * bz) + a * bz.imag();
    return true;
}

}  // namespace

std::pair<Complex, Complex> ft_quadratic_roots(Complex a, double rho) {
    if (a == Complex(0.0)) throw Error("ft_quadratic_roots: a must be nonzero");
    if (rho <= 0.0) throw Error("ft_quadratic_roots: rho must be positive");
    // a z^2 - S z + conj(a) = 0 with real middle coefficient S; the
    // discriminant S^2 - 4|a|^2 is real, so the branch is explicit.
    const double s_coef = 4.0 * rho * rho - 1.0 - std::norm(a);
    const double disc = s_coef * s_coef - 4.0 * std::norm(a);
    Complex sq = (disc >= 0.0) ? Complex(std::sqrt(disc), 0.0)
                               : Complex(0.0, std::sqrt(-disc));
    Complex r1 = (s_coef - sq) / (2.0 * a);
    Complex r2 = (s_coef + sq) / (2.0 * a);
    if (r1.imag() > r2.imag() ||
        (r1.imag() == r2.imag() && r1.real() > r2.real())) {
        std::swap(r1, r2);
    }
    return {r1, r2};
}

Complex ft_defect(const BlaschkeProduct& B, Complex a, double rho) {
    const auto [z1, z2] = ft_quadratic_roots(a, rho);
    const Complex b1 = eval_blaschke(B, z1);
    const Complex b2 = eval_blaschke(B, z2);
    return z2 * b2 - z1 * b1 + std::conj(a) * (b2 - b1);
}

FTState ft_state(const BlaschkeProduct& B, Complex a, double rho) {
    FTState st;
    st.a = a;
    st.rho = rho;
    std::tie(st.z1, st.z2) = ft_quadratic_roots(a, rho);
    st.defect = ft_defect(B, a, rho);
    return st;
}

namespace {

FTResult make_result(const BlaschkeProduct& B, Complex a, double lo, double hi) {
    FTResult r;
    r.rho_bar = 0.5 * (lo + hi);
    r.norm = 2.0 * r.rho_bar;
    r.bracket = {lo, hi};
    r.defect_residual = std::abs(ft_defect(B, a, r.rho_bar));
    return r;
}

/// One secant step inside the final bracket knocks the residual down from
/// slope * bracket_width to near roundoff.
FTResult make_result_secant(const BlaschkeProduct& B, Complex a, double lo, double hi,
                            double f_lo, double f_hi) {
    double rho = 0.5 * (lo + hi);
    if (f_hi != f_lo) {
        const double secant = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
        if (std::isfinite(secant) && secant >= lo && secant <= hi) rho = secant;
    }
    FTResult r;
    r.rho_bar = rho;
    r.norm = 2.0 * rho;
    r.bracket = {lo, hi};
    r.defect_residual = std::abs(ft_defect(B, a, rho));
    return r;
}

/// Scan the real-case functional downward; bisect the first sign change.
bool scan_real(const BlaschkeProduct& B, double a, const FTOptions& opts, FTResult& out) {
    const double hi = (1.0 + std::abs(a)) / 2.0 + opts.scan_margin;
    const double lo = std::abs(a) * opts.min_rho_factor;
    const double step = (hi - lo) / opts.scan_samples;

    bool have_prev = false;
    double prev_rho = 0.0, prev_g = 0.0;
    for (int i = 0; i <= opts.scan_samples; ++i) {
        const double rho = hi - i * step;
        if (rho <= 0.0) break;
        double g;
        if (!real_defect(B, a, rho, g)) {
            have_prev = false;
            continue;
        }
        if (g == 0.0) {
            out = make_result(B, Complex(a), rho, rho);
            return true;
        }
        if (have_prev && prev_g * g < 0.0) {
            double b_lo = rho, b_hi = prev_rho;
            double g_lo = g, g_hi = prev_g;
            while (b_hi - b_lo > opts.rho_tol) {
                const double mid = 0.5 * (b_lo + b_hi);
                double gm = 0.0;
                // The band is an interval in rho, so the midpoint of two
                // in-band samples stays in-band.
                real_defect(B, a, mid, gm);
                if (gm == 0.0) {
                    b_lo = b_hi = mid;
                    g_lo = g_hi = 0.0;
                    break;
                }
                if (gm * g_lo > 0.0) {
                    b_lo = mid;
                    g_lo = gm;
                } else {
                    b_hi = mid;
                    g_hi = gm;
                }
            }
            out = make_result_secant(B, Complex(a), b_lo, b_hi, g_lo, g_hi);
            return true;
        }
        have_prev = true;
        prev_rho = rho;
        prev_g = g;
    }
    return false;
}

/// General scan on the phase-aligned imaginary part Im(conj(a) defect),
/// with an |defect| residual gate and exclusion of the spurious band-edge
/// zeros (the quadratic roots collide there and the defect vanishes
/// identically).
bool scan_general(const BlaschkeProduct& B, Complex a, const FTOptions& opts, FTResult& out) {
    const double abs_a = std::abs(a);
    const double hi = (1.0 + abs_a) / 2.0 + opts.scan_margin;
    const double lo = abs_a * opts.min_rho_factor;
    const double step = (hi - lo) / opts.scan_samples;
    const double edge_hi = (1.0 + abs_a) / 2.0;
    const double edge_lo = (1.0 - abs_a) / 2.0;

    auto near_edge = [&](double rho) {
        return std::abs(rho - edge_hi) <= kEdgeExclusion ||
               std::abs(rho - edge_lo) <= kEdgeExclusion;
    };
    auto aligned = [&](double rho) { return std::imag(std::conj(a) * ft_defect(B, a, rho)); };

    bool have_prev = false;
    double prev_rho = 0.0, prev_h = 0.0;
    for (int i = 0; i <= opts.scan_samples; ++i) {
        const double rho = hi - i * step;
        if (rho <= 0.0) break;
        const double h = aligned(rho);
        if (have_prev && prev_h * h < 0.0) {
            double b_lo = rho, b_hi = prev_rho;
            double h_lo = h, h_hi = prev_h;
            while (b_hi - b_lo > opts.rho_tol) {
                const double mid = 0.5 * (b_lo + b_hi);
                const double hm = aligned(mid);
                if (hm == 0.0) {
                    b_lo = b_hi = mid;
                    h_lo = h_hi = 0.0;
                    break;
                }
                if (hm * h_lo > 0.0) {
                    b_lo = mid;
                    h_lo = hm;
                } else {
                    b_hi = mid;
                    h_hi = hm;
                }
            }
            FTResult candidate = make_result_secant(B, a, b_lo, b_hi, h_lo, h_hi);
            if (!near_edge(candidate.rho_bar) &&
                candidate.defect_residual <= kResidualAccept &&
                candidate.norm <= 1.0 + abs_a + 1e-9 &&
                candidate.norm >= std::max(0.0, 1.0 - abs_a) - 1e-9) {
                out = candidate;
                return true;
            }
        }
        have_prev = true;
        prev_rho = rho;
        prev_h = h;
    }

    // No sign-consistent bracket: fall back to the deepest |defect| minimum.
    double best_rho = -1.0, best_abs = kResidualAccept;
    for (int i = 0; i <= opts.scan_samples; ++i) {
        const double rho = hi - i * step;
        if (rho <= 0.0) break;
        if (near_edge(rho)) continue;
        const double v = std::abs(ft_defect(B, a, rho));
        if (v < best_abs) {
            best_abs = v;
            best_rho = rho;
        }
    }
    if (best_rho > 0.0) {
        out = make_result(B, a, best_rho, best_rho);
        return true;
    }
    return false;
}

}  // namespace

FTResult ft_norm(const BlaschkeProduct& B, Complex a, const FTOptions& opts) {
    if (a == Complex(0.0)) throw Error("ft_norm: a must be nonzero");

    // One-dimensional model space with zero compression: the scan would
    // degenerate, but the norm is simply 1.
    if (B.degree() == 1 && B.zeros()[0] == Complex(0.0)) {
        return FTResult{0.5, 1.0, {0.5, 0.5}, 0.0};
    }

    FTResult out;
    if (real_case(B, a) && scan_real(B, a.real(), opts, out)) return out;
    // Complex data, or a tangential real-case root with no sign change:
    // the general scan locates it through the |defect| minimum.
    if (scan_general(B, a, opts, out)) return out;
    throw NoRootFound("ft_norm: no defect root bracketed in the scan range");
}

std::vector<FTState> ft_trace(const BlaschkeProduct& B, Complex a, int samples) {
    if (a == Complex(0.0)) throw Error("ft_trace: a must be nonzero");
    std::vector<FTState> out;
    const double hi = (1.0 + std::abs(a)) / 2.0 + 0.05;
    const double lo = std::abs(a) * 1e-3;
    const double step = (hi - lo) / std::max(samples, 2);
    const bool real = real_case(B, a);
    for (int i = 0; i <= samples; ++i) {
        const double rho = hi - i * step;
        if (rho <= 0.0) break;
        if (real) {
            const double s = (4.0 * rho * rho - 1.0 - std::norm(a)) / (2.0 * a.real());
            if (std::abs(s) > 1.0) continue;
        }
        out.push_back(ft_state(B, a, rho));
    }
    return out;
}

}  // namespace cshift
