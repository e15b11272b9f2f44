#include "cshift/realzeros.hpp"

#include <algorithm>
#include <cmath>

namespace cshift {

namespace {

constexpr double kTrivialRootTol = 1e-8;
constexpr double kRealZeroTol = 1e-12;

void require_real_zeros(const BlaschkeProduct& B, const char* who) {
    if (!B.has_real_zeros(kRealZeroTol)) {
        throw NotRealZeros(std::string(who) + ": all zeros must be real");
    }
}

ComplexPolynomial sign_equation(const BlaschkeProduct& B, int sign) {
    auto [num, den] = numerator_denominator(B);
    return num.times_z() - den.scaled(Complex(static_cast<double>(sign)));
}

double max_abs(const std::vector<double>& xs) {
    double m = 0.0;
    for (double x : xs) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

RootCertificate root_equation(const BlaschkeProduct& B, int sign,
                              const RootFindOptions& rootfind) {
    if (sign != 1 && sign != -1) throw Error("root_equation: sign must be +1 or -1");
    require_real_zeros(B, "root_equation");

    RootCertificate cert;
    cert.equation_sign = sign;
    cert.roots = find_roots(sign_equation(B, sign), rootfind);
    for (const Complex& r : cert.roots.roots) {
        cert.unimodularity_residuals.push_back(std::abs(1.0 - std::abs(r)));
        if (std::abs(r - Complex(1.0)) <= kTrivialRootTol ||
            std::abs(r + Complex(1.0)) <= kTrivialRootTol) {
            cert.trivial_roots.push_back(r);
        } else {
            cert.candidate_real_parts.push_back(r.real());
        }
    }
    return cert;
}

RootMethodResult numerical_radius_root_method(const BlaschkeProduct& B,
                                              const RootMethodOptions& opts) {
    require_real_zeros(B, "numerical_radius_root_method");

    RootMethodResult out;
    out.plus_certificate = root_equation(B, +1, opts.rootfind);
    out.minus_certificate = root_equation(B, -1, opts.rootfind);

    std::vector<double> candidates = out.plus_certificate.candidate_real_parts;
    candidates.insert(candidates.end(), out.minus_certificate.candidate_real_parts.begin(),
                      out.minus_certificate.candidate_real_parts.end());
    if (candidates.empty()) {
        throw Error("numerical_radius_root_method: no nontrivial roots found");
    }

    NormResult& res = out.result;
    res.method = Method::root_method;
    res.value = max_abs(candidates);
    res.zeros_echo = B.zeros();
    res.diagnostics["max_unimodularity_residual"] =
        std::max(max_abs(out.plus_certificate.unimodularity_residuals),
                 max_abs(out.minus_certificate.unimodularity_residuals));
    res.diagnostics["trivial_root_count"] =
        static_cast<double>(out.plus_certificate.trivial_roots.size() +
                            out.minus_certificate.trivial_roots.size());

    if (opts.cross_check) {
        const double oracle = numerical_radius(shift_matrix(B).matrix, opts.sweep).value;
        const double delta = std::abs(res.value - oracle);
        res.cross_checks["oracle"] = CrossCheck{delta, opts.oracle_tolerance};
        if (delta > opts.oracle_tolerance) {
            if (B.degree() > 4) {
                // The max-|Re| candidate rule is only verified up to degree
                // 4; beyond that a disagreement means the oracle wins.
                res.warnings.push_back(
                    "root-method/oracle mismatch at degree > 4; value downgraded to the "
                    "eigenvalue-sweep oracle");
                res.value = oracle;
            } else {
                res.warnings.push_back("root-method value disagrees with the eigenvalue-sweep "
                                       "oracle beyond tolerance");
            }
        }
    }
    return out;
}

double closed_form_degree2(double a1, double a2) {
    if (std::abs(a1) >= 1.0 || std::abs(a2) >= 1.0) {
        throw Error("closed_form_degree2: zeros must lie inside the unit disk");
    }
    const double plus_branch = std::abs((a1 + a2 - a1 * a2 + 1.0) / 2.0);
    const double minus_branch = std::abs((a1 + a2 + a1 * a2 - 1.0) / 2.0);
    return std::max(plus_branch, minus_branch);
}

double closed_form_degree3(double a, double b, double c) {
    if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0 || std::abs(c) >= 1.0) {
        throw Error("closed_form_degree3: zeros must lie inside the unit disk");
    }
    const double alpha = a + b + c + a * b * c;
    const double beta = a * b + a * c + b * c;
    const double disc = alpha * alpha - 8.0 * (beta - 1.0);
    if (disc < -1e-12) {
        throw Error("closed_form_degree3: negative discriminant");
    }
    const double root = std::sqrt(std::max(0.0, disc));
    return std::max(std::abs((alpha + root) / 4.0), std::abs((alpha - root) / 4.0));
}

double closed_form_degree4(double a, double b, double c, double d) {
    const BlaschkeProduct B({Complex(a), Complex(b), Complex(c), Complex(d)});
    double best = 0.0;
    for (int sign : {+1, -1}) {
        const ClosedFormCoefficients cf = closed_form_coeffs(B, sign);
        const double disc = cf.alpha * cf.alpha - 8.0 * (cf.beta - 1.0);
        if (disc < -1e-12) {
            throw Error("closed_form_degree4: negative discriminant");
        }
        const double root = std::sqrt(std::max(0.0, disc));
        best = std::max({best, std::abs((cf.alpha + root) / 4.0),
                         std::abs((cf.alpha - root) / 4.0)});
    }
    return best;
}

ClosedFormCoefficients closed_form_coeffs(const BlaschkeProduct& B, int sign) {
    if (sign != 1 && sign != -1) throw Error("closed_form_coeffs: sign must be +1 or -1");
    const int n = B.degree();
    if (n < 2 || n > 4) {
        throw WrongDegree("closed_form_coeffs: degree " + std::to_string(n) +
                          " outside {2,3,4}");
    }
    require_real_zeros(B, "closed_form_coeffs");

    ComplexPolynomial p = sign_equation(B, sign);
    // Trivial roots by parity: z = 1 solves the equation exactly when
    // sign = +1, z = -1 exactly when sign = (-1)^(n+1).
    if (sign == 1) p = deflate(p, Complex(1.0));
    if (sign == ((n % 2 == 0) ? -1 : 1)) p = deflate(p, Complex(-1.0));

    ClosedFormCoefficients cf;
    cf.degree = n;
    cf.alpha = -p.coefficient(1).real();
    cf.beta = 0.5 * p.coefficient(2).real();
    return cf;
}

}  // namespace cshift
