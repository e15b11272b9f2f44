#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "corpus.hpp"
#include "cshift/foias_tannenbaum.hpp"
#include "cshift/numrange.hpp"
#include "cshift/pick.hpp"

using namespace cshift;

TEST_CASE("ft_quadratic_roots satisfies both root relations") {
    for (Complex a : {Complex(0.3), Complex(-0.2), Complex(0.1, 0.15)}) {
        for (double rho : {0.3, 0.5, 0.55}) {
            const auto [z1, z2] = ft_quadratic_roots(a, rho);
            CHECK(std::abs(z1 * z2 - std::conj(a) / a) <= 1e-10);
            const Complex want_sum = (4.0 * rho * rho - 1.0 - std::norm(a)) / a;
            CHECK(std::abs(z1 + z2 - want_sum) <= 1e-10);
            CHECK(z1.imag() <= z2.imag());
        }
    }
    CHECK_THROWS_AS(ft_quadratic_roots(Complex(0.0), 0.5), Error);
}

TEST_CASE("ft_quadratic_roots worked values") {
    // a = 0.1, rho = 1/2: sum -0.1, roots -0.05 +- i sqrt(1 - 0.0025)
    const auto [z1, z2] = ft_quadratic_roots(Complex(0.1), 0.5);
    const double y = std::sqrt(1.0 - 0.0025);
    CHECK(std::abs(z1 - Complex(-0.05, -y)) <= 1e-12);
    CHECK(std::abs(z2 - Complex(-0.05, y)) <= 1e-12);

    // common real part (2 delta + delta^2 - a^2)/(2a) near the band top
    const double a = 0.2, delta = 0.06;
    const auto [w1, w2] = ft_quadratic_roots(Complex(a), (1.0 + delta) / 2.0);
    const double want = (2.0 * delta + delta * delta - a * a) / (2.0 * a);
    CHECK(w1.real() == doctest::Approx(want).epsilon(1e-12));
    CHECK(w2.real() == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("ft_defect is purely imaginary for real data") {
    std::mt19937_64 rng(3030);
    for (int rep = 0; rep < 6; ++rep) {
        const auto b = corpus::real_zero_product(rng, 2 + rep % 4);
        const double a = 0.1 + 0.05 * (rep % 3);
        // stay inside the band where the circle intersection exists
        for (double rho : {(1.0 - a) / 2.0 + 0.01, 0.5, (1.0 + a) / 2.0 - 0.01}) {
            const Complex d = ft_defect(b, Complex(a), rho);
            CHECK(std::abs(d.real()) <= 1e-12);

            const auto [z1, z2] = ft_quadratic_roots(Complex(a), rho);
            const Complex b1 = eval_blaschke(b, z1);
            const double g = std::imag(z1 * b1) + a * b1.imag();
            CHECK(std::abs(d - Complex(0.0, -2.0) * g) <= 1e-12);
        }
    }
}

TEST_CASE("ft_defect shrinks from the slope estimate to the located root") {
    // The first-order estimate rho = (1 + a w)/2 sits 4.6e-4 away from the
    // true singularity for a = 0.1; the defect there measures that gap
    // through its rho-slope of roughly 230.
    const BlaschkeProduct b({Complex(0.0), Complex(0.5)});
    const double at_estimate = std::abs(ft_defect(b, Complex(0.1), (1.0 + 0.1 * 0.75) / 2.0));
    CHECK(at_estimate == doctest::Approx(0.10497).epsilon(1e-3));

    const FTResult r = ft_norm(b, Complex(0.1));
    CHECK(r.defect_residual <= 1e-10);
    CHECK(r.defect_residual < at_estimate);
}

TEST_CASE("ft_defect vanishes identically at a double quadratic root") {
    // a = 1/4 makes the band-edge rho = (1+a)/2 exact in binary, so the
    // discriminant is exactly zero and z1 == z2.
    const BlaschkeProduct b({Complex(0.3), Complex(-0.2)});
    const Complex a(0.25);
    const auto [z1, z2] = ft_quadratic_roots(a, 0.625);
    CHECK(z1 == z2);
    CHECK(ft_defect(b, a, 0.625) == Complex(0.0));
}

TEST_CASE("ft_norm golden cases") {
    const BlaschkeProduct b({Complex(0.0), Complex(0.5)});
    const FTResult r = ft_norm(b, Complex(0.05));
    const double via_pick = critical_gamma(b.zeros(), Complex(0.05)).value;
    CHECK(std::abs(r.norm - via_pick) <= 1e-8);
    CHECK(r.norm == doctest::Approx(1.0 + 0.05 * 0.75).epsilon(1e-3));
    CHECK(r.defect_residual <= 1e-10);

    const BlaschkeProduct b00({Complex(0.0), Complex(0.0)});
    const double closed = std::sqrt(1.0 + 0.005 + 0.1 * std::sqrt(1.0025));
    CHECK(ft_norm(b00, Complex(0.1)).norm == doctest::Approx(closed).epsilon(1e-9));

    const FTResult trivial = ft_norm(BlaschkeProduct({Complex(0.0)}), Complex(0.3, 0.2));
    CHECK(trivial.norm == 1.0);
    CHECK(trivial.rho_bar == 0.5);
}

TEST_CASE("ft_norm rejects a = 0") {
    CHECK_THROWS_AS(ft_norm(BlaschkeProduct({Complex(0.3)}), Complex(0.0)), Error);
}

TEST_CASE("quadratic roots land on the unit circle at the located norm") {
    std::mt19937_64 rng(3131);
    for (int rep = 0; rep < 5; ++rep) {
        const auto b = corpus::real_zero_product(rng, 2 + rep % 3);
        const Complex a(0.15);
        const FTResult r = ft_norm(b, a);
        const auto [z1, z2] = ft_quadratic_roots(a, r.rho_bar);
        CHECK(std::abs(std::abs(z1) - 1.0) <= 1e-8);
        CHECK(std::abs(std::abs(z2) - 1.0) <= 1e-8);
        CHECK(r.norm >= 1.0 - std::abs(a));
        CHECK(r.norm <= 1.0 + std::abs(a));
    }
}

TEST_CASE("ft_norm agrees with the eigenvalue and interpolation routes") {
    std::mt19937_64 rng(3232);
    for (int rep = 0; rep < 6; ++rep) {
        const auto b = corpus::real_zero_product(rng, 2 + rep % 3);
        for (double a : {0.2, 0.1}) {
            const double via_ft = ft_norm(b, Complex(a)).norm;
            const double via_svd = norm_I_plus_tA(shift_matrix(b).matrix, Complex(a));
            const double via_pick = critical_gamma(b.zeros(), Complex(a)).value;
            CHECK(std::abs(via_ft - via_svd) <= 1e-8);
            CHECK(std::abs(via_ft - via_pick) <= 1e-8);
        }
    }
}

TEST_CASE("ft_norm handles complex perturbations and complex zeros") {
    const BlaschkeProduct real_zeros({Complex(0.0), Complex(0.5)});
    const Complex a = std::polar(0.1, std::numbers::pi / 6.0);
    CHECK(std::abs(ft_norm(real_zeros, a).norm -
                   norm_I_plus_tA(shift_matrix(real_zeros).matrix, a)) <= 1e-9);

    const BlaschkeProduct complex_zeros({Complex(0.2, 0.3), Complex(-0.1)});
    CHECK(std::abs(ft_norm(complex_zeros, Complex(0.1)).norm -
                   norm_I_plus_tA(shift_matrix(complex_zeros).matrix, Complex(0.1))) <= 1e-9);
}

TEST_CASE("ft_trace stays inside the scan band for real data") {
    const BlaschkeProduct b({Complex(0.0), Complex(0.5)});
    const auto states = ft_trace(b, Complex(0.1), 500);
    CHECK(!states.empty());
    for (const FTState& s : states) {
        CHECK(s.rho >= (1.0 - 0.1) / 2.0 - 1e-9);
        CHECK(s.rho <= (1.0 + 0.1) / 2.0 + 1e-9);
        CHECK(std::abs(s.z1 * s.z2 - Complex(1.0)) <= 1e-10);
    }
}
