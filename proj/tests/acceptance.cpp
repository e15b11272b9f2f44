// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every tolerance is pinned in code next to the check it
// gates. Random inputs are seeded, so runs are reproducible.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "cshift/blaschke.hpp"
#include "cshift/foias_tannenbaum.hpp"
#include "cshift/numrange.hpp"
#include "cshift/pick.hpp"
#include "cshift/realzeros.hpp"

using namespace cshift;

namespace {

struct Checker {
    int failures = 0;
    std::string detail;

    void require(bool ok, const std::string& msg) {
        if (!ok) {
            ++failures;
            if (detail.empty()) detail = msg;
        }
    }
    void within(double got, double want, double tol, const std::string& what) {
        const double err = std::abs(got - want);
        if (!(err <= tol)) {
            ++failures;
            if (detail.empty()) {
                char buf[256];
                std::snprintf(buf, sizeof(buf), "%s: |%.17g - %.17g| = %.3g > %.3g",
                              what.c_str(), got, want, err, tol);
                detail = buf;
            }
        }
    }
};

int g_failed = 0;

void run_criterion(int index, const std::string& label, const std::function<void(Checker&)>& fn) {
    Checker c;
    try {
        fn(c);
    } catch (const std::exception& e) {
        c.failures++;
        c.detail = std::string("exception: ") + e.what();
    }
    if (c.failures == 0) {
        std::printf("[PASS] criterion %d: %s\n", index, label.c_str());
    } else {
        std::printf("[FAIL] criterion %d: %s (%d checks failed; first: %s)\n", index,
                    label.c_str(), c.failures, c.detail.c_str());
        ++g_failed;
    }
    std::fflush(stdout);
}

double root_method_value(const BlaschkeProduct& b) {
    RootMethodOptions opts;
    opts.cross_check = false;  // the criteria compare against the oracle themselves
    return numerical_radius_root_method(b, opts).result.value;
}

double oracle_value(const BlaschkeProduct& b) {
    return numerical_radius(shift_matrix(b).matrix).value;
}

double gamma_closed_form(double t) {
    const double q = 2.0 + t + t * t;
    return std::sqrt((q + std::sqrt(q * q - 4.0 * (1.0 + t + t * t / 4.0))) / 2.0);
}

// ---- shared corpora (seeded) ----

std::vector<BlaschkeProduct> quadruples_corpus() {
    std::mt19937_64 rng(900500);
    std::vector<BlaschkeProduct> out;
    for (int i = 0; i < 30; ++i) out.push_back(corpus::real_zero_product(rng, 4, 0.9));
    return out;
}

std::vector<BlaschkeProduct> ft_corpus() {
    std::mt19937_64 rng(900700);
    std::vector<BlaschkeProduct> out;
    for (int i = 0; i < 20; ++i) out.push_back(corpus::real_zero_product(rng, 2 + i % 4, 0.9));
    return out;
}

std::vector<BlaschkeProduct> unimodularity_corpus() {
    std::mt19937_64 rng(900800);
    std::uniform_int_distribution<int> deg(1, 10);
    std::vector<BlaschkeProduct> out;
    for (int i = 0; i < 100; ++i) out.push_back(corpus::real_zero_product(rng, deg(rng), 0.9));
    return out;
}

std::vector<BlaschkeProduct> full_corpus() {
    std::vector<BlaschkeProduct> out;
    out.emplace_back(std::vector<Complex>{Complex(0.0), Complex(0.5)});
    for (int n = 1; n <= 8; ++n) {
        out.emplace_back(std::vector<Complex>(static_cast<size_t>(n), Complex(0.0)));
    }
    for (const auto& b : quadruples_corpus()) out.push_back(b);
    for (const auto& b : ft_corpus()) out.push_back(b);
    for (const auto& b : unimodularity_corpus()) out.push_back(b);
    std::mt19937_64 rng(900900);
    for (int i = 0; i < 40; ++i) out.push_back(corpus::complex_zero_product(rng, 1 + i % 8));
    return out;
}

}  // namespace

int main() {
    run_criterion(1, "all four radius routes give 3/4 for zeros {0, 1/2}", [](Checker& c) {
        const BlaschkeProduct b({Complex(0.0), Complex(0.5)});
        c.within(closed_form_degree2(0.0, 0.5), 0.75, 1e-10, "closed form");
        c.within(root_method_value(b), 0.75, 1e-10, "root method");
        c.within(oracle_value(b), 0.75, 1e-10, "oracle");
        c.within(radius_via_limit(shift_matrix(b).matrix).value, 0.75, 1e-4, "limit route");
        c.within(radius_via_pick(b).value, 0.75, 1e-4, "pick route");
    });

    run_criterion(2, "Jordan family w = cos(pi/(n+1)) for n = 1..8", [](Checker& c) {
        for (int n = 1; n <= 8; ++n) {
            const BlaschkeProduct b(std::vector<Complex>(static_cast<size_t>(n), Complex(0.0)));
            const double want = std::cos(std::numbers::pi / (n + 1));
            c.within(root_method_value(b), want, 1e-9, "root method n=" + std::to_string(n));
            c.within(oracle_value(b), want, 1e-9, "oracle n=" + std::to_string(n));
        }
    });

    run_criterion(3, "degree-2 grid: closed form, roots, oracle and ellipse agree",
                  [](Checker& c) {
        const std::vector<double> grid{-0.8, -0.4, 0.0, 0.4, 0.8};
        for (double a1 : grid) {
            for (double a2 : grid) {
                const BlaschkeProduct b({Complex(a1), Complex(a2)});
                const double closed = closed_form_degree2(a1, a2);
                const double roots = root_method_value(b);
                const double oracle = oracle_value(b);
                const std::string tag =
                    " at (" + std::to_string(a1) + "," + std::to_string(a2) + ")";
                c.within(closed, roots, 1e-8, "closed vs roots" + tag);
                c.within(closed, oracle, 1e-8, "closed vs oracle" + tag);
                c.within(roots, oracle, 1e-8, "roots vs oracle" + tag);
                c.within(ellipse_numerical_radius(ellipse_for_degree2(b)), closed, 1e-10,
                         "ellipse vs closed" + tag);
            }
        }
    });

    run_criterion(4, "degree-3 grid plus the {0, a, a} reductions", [](Checker& c) {
        const std::vector<double> grid{-0.72, -0.36, 0.0, 0.36, 0.72};
        for (double a : grid) {
            for (double b2 : grid) {
                for (double c3 : grid) {
                    const BlaschkeProduct b({Complex(a), Complex(b2), Complex(c3)});
                    const double closed = closed_form_degree3(a, b2, c3);
                    const double roots = root_method_value(b);
                    const double oracle = oracle_value(b);
                    c.within(closed, roots, 1e-8, "closed vs roots");
                    c.within(closed, oracle, 1e-8, "closed vs oracle");
                    c.within(roots, oracle, 1e-8, "roots vs oracle");
                }
            }
        }
        for (double a : grid) {
            const double two_branch =
                std::max(std::abs(a / 2.0 + std::sqrt(2.0 - a * a) / 2.0),
                         std::abs(a / 2.0 - std::sqrt(2.0 - a * a) / 2.0));
            c.within(closed_form_degree3(0.0, a, a), two_branch, 1e-12, "{0,a,a} reduction");

            const BlaschkeProduct b({Complex(0.0), Complex(a), Complex(a)});
            const ComplexMatrix m = shift_matrix(b).matrix;
            const ComplexMatrix gram = m.adjoint() * m;
            double trace = 0.0;
            for (int i = 0; i < 3; ++i) trace += gram(i, i).real();
            const double minor_tr = std::sqrt(trace - 2.0 * a * a);
            c.within(minor_tr, std::sqrt(2.0 * (1.0 - a * a)), 1e-10, "{0,a,a} minor axis");
        }
    });

    run_criterion(5, "degree-4 random quadruples: extraction = roots = oracle", [](Checker& c) {
        for (const BlaschkeProduct& b : quadruples_corpus()) {
            const auto& z = b.zeros();
            const double closed = closed_form_degree4(z[0].real(), z[1].real(), z[2].real(),
                                                      z[3].real());
            const double roots = root_method_value(b);
            const double oracle = oracle_value(b);
            c.within(closed, roots, 1e-8, "closed vs roots");
            c.within(closed, oracle, 1e-8, "closed vs oracle");
            c.within(roots, oracle, 1e-8, "roots vs oracle");
        }
    });

    run_criterion(6, "interpolation bound matches the closed form and slope 3/4",
                  [](Checker& c) {
        const std::vector<Complex> nodes{Complex(0.0), Complex(0.5)};
        const BlaschkeProduct b(nodes);
        const ComplexMatrix A = shift_matrix(b).matrix;
        const std::vector<double> ts{0.4, 0.2, 0.1, 0.05, 0.025};
        for (double t : ts) {
            const double gamma = critical_gamma(nodes, Complex(t)).value;
            c.within(gamma, gamma_closed_form(t), 1e-9,
                     "gamma vs closed form at t=" + std::to_string(t));
            c.within(gamma, norm_I_plus_tA(A, Complex(t)), 1e-8,
                     "gamma vs svd at t=" + std::to_string(t));
        }
        LadderOptions ladder;
        ladder.ts = ts;
        const double slope = richardson_limit(
            [&](double t) { return (critical_gamma(nodes, Complex(t)).value - 1.0) / t; },
            ladder);
        c.within(slope, 0.75, 1e-4, "extrapolated slope");
    });

    run_criterion(7, "FT route agrees with pick and svd; root relations hold", [](Checker& c) {
        for (const BlaschkeProduct& b : ft_corpus()) {
            const ComplexMatrix A = shift_matrix(b).matrix;
            for (double a : {0.2, 0.1, 0.05}) {
                const double ft = ft_norm(b, Complex(a)).norm;
                c.within(ft, critical_gamma(b.zeros(), Complex(a)).value, 1e-7, "ft vs pick");
                c.within(ft, norm_I_plus_tA(A, Complex(a)), 1e-7, "ft vs svd");
            }
            for (const FTState& st : ft_trace(b, Complex(0.1), 200)) {
                c.require(std::abs(st.z1 * st.z2 - Complex(1.0)) <= 1e-10,
                          "Vieta product residual above 1e-10");
                const Complex want_sum = (4.0 * st.rho * st.rho - 1.0 - 0.01) / 0.1;
                c.require(std::abs(st.z1 + st.z2 - want_sum) <= 1e-10,
                          "Vieta sum residual above 1e-10");
            }
        }
    });

    run_criterion(8, "sign-equation roots are unimodular; coefficients self-inversive",
                  [](Checker& c) {
        for (const BlaschkeProduct& b : unimodularity_corpus()) {
            auto [num, den] = numerator_denominator(b);
            for (int sign : {+1, -1}) {
                const RootCertificate cert = root_equation(b, sign);
                for (double r : cert.unimodularity_residuals) {
                    c.require(r <= 1e-8, "unimodularity residual " + std::to_string(r));
                }
                const ComplexPolynomial p =
                    num.times_z() - den.scaled(Complex(static_cast<double>(sign)));
                for (double r : cert.roots.residuals) {
                    c.require(r <= 1e-11 * p.max_abs_coefficient(),
                              "root residual above 1e-11 * max|c|");
                }
                const int n = p.degree();
                for (int k = 0; k <= n; ++k) {
                    const Complex lhs = p.coefficient(k);
                    const Complex rhs = -static_cast<double>(sign) *
                                        std::conj(p.coefficient(n - k));
                    c.require(std::abs(lhs - rhs) <= 1e-12, "self-inversive identity");
                }
            }
        }
    });

    run_criterion(9, "structural invariants of the compression matrices", [](Checker& c) {
        for (const BlaschkeProduct& b : full_corpus()) {
            const ComplexMatrix m = shift_matrix(b).matrix;
            for (int i = 0; i < m.rows(); ++i) {
                for (int j = 0; j < i; ++j) {
                    c.require(m(i, j) == Complex(0.0), "below-diagonal entry not exactly 0");
                }
            }
            const double norm = operator_norm(m);
            c.require(norm <= 1.0 + 1e-10, "contraction bound violated");
            c.require(rank_one_defect_check(m) <= 1e-10, "rank-one defect above 1e-10");
            const double w = numerical_radius(m).value;
            c.require(w >= 0.5 * norm - 1e-10, "lower sandwich bound violated");
            c.require(w <= norm + 1e-10, "upper sandwich bound violated");
        }
    });

    run_criterion(10, "difference quotients are monotone and dominate the limit",
                  [](Checker& c) {
        const LadderOptions ladder;
        for (const BlaschkeProduct& b : full_corpus()) {
            const ComplexMatrix A = shift_matrix(b).matrix;
            std::vector<double> quotients;
            for (double t : ladder.ts) {
                quotients.push_back((norm_I_plus_tA(A, Complex(t)) - 1.0) / t);
            }
            // ladder is decreasing in t, so quotients must be nonincreasing
            for (size_t k = 1; k < quotients.size(); ++k) {
                c.require(quotients[k] <= quotients[k - 1] + 1e-12,
                          "difference quotient not monotone in t");
            }
            const double limit = richardson_limit(
                [&](double t) { return (norm_I_plus_tA(A, Complex(t)) - 1.0) / t; }, ladder);
            for (double q : quotients) {
                c.require(limit <= q + 1e-10, "extrapolant exceeds a quotient sample");
            }
        }
    });

    if (g_failed == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failed);
    return 1;
}
