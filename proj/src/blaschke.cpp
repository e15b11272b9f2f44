#include "cshift/blaschke.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace cshift {

namespace {

constexpr double kBoundaryMargin = 1e-12;
constexpr double kPoleTolerance = 1e-14;

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<Complex> zeros) : zeros_(std::move(zeros)) {
    if (zeros_.empty()) {
        throw Error("BlaschkeProduct: at least one zero is required");
    }
    for (const Complex& a : zeros_) {
        if (std::abs(a) >= 1.0 - kBoundaryMargin) {
            throw Error("BlaschkeProduct: zero with |a| = " + std::to_string(std::abs(a)) +
                        " is not strictly inside the unit disk");
        }
    }
}

bool BlaschkeProduct::has_real_zeros(double tol) const {
    for (const Complex& a : zeros_) {
        if (std::abs(a.imag()) > tol) return false;
    }
    return true;
}

bool BlaschkeProduct::has_distinct_zeros(double separation) const {
    for (size_t i = 0; i < zeros_.size(); ++i) {
        for (size_t j = i + 1; j < zeros_.size(); ++j) {
            if (std::abs(zeros_[i] - zeros_[j]) < separation) return false;
        }
    }
    return true;
}

BlaschkeProduct BlaschkeProduct::rotated(double phi) const {
    const Complex r = std::polar(1.0, phi);
    std::vector<Complex> z(zeros_);
    for (Complex& a : z) a *= r;
    return BlaschkeProduct(std::move(z));
}

Complex eval_blaschke(const BlaschkeProduct& B, Complex z) {
    Complex prod(1.0);
    for (const Complex& a : B.zeros()) {
        const Complex den = 1.0 - std::conj(a) * z;
        if (std::abs(den) < kPoleTolerance) {
            throw PoleHit("eval_blaschke: evaluation point hits a pole");
        }
        prod *= (z - a) / den;
    }
    return prod;
}

std::pair<ComplexPolynomial, ComplexPolynomial> numerator_denominator(const BlaschkeProduct& B) {
    ComplexPolynomial num({Complex(1.0)});
    ComplexPolynomial den({Complex(1.0)});
    for (const Complex& a : B.zeros()) {
        num = multiply(num, ComplexPolynomial({-a, Complex(1.0)}));
        den = multiply(den, ComplexPolynomial({Complex(1.0), -std::conj(a)}));
    }
    return {num, den};
}

CompressedShiftMatrix shift_matrix(const BlaschkeProduct& B) {
    const auto& a = B.zeros();
    const int n = B.degree();
    ComplexMatrix m(n, n);
    std::vector<double> root_defect(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        root_defect[static_cast<size_t>(j)] =
            std::sqrt(1.0 - std::norm(a[static_cast<size_t>(j)]));
        m(j, j) = a[static_cast<size_t>(j)];
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Complex factor(1.0);
            for (int k = i + 1; k < j; ++k) {
                factor *= -std::conj(a[static_cast<size_t>(k)]);
            }
            m(i, j) = factor * root_defect[static_cast<size_t>(i)] *
                      root_defect[static_cast<size_t>(j)];
        }
    }
    return CompressedShiftMatrix{std::move(m), a};
}

EllipseParams ellipse_for_degree2(const BlaschkeProduct& B) {
    if (B.degree() != 2) {
        throw WrongDegree("ellipse_for_degree2: degree " + std::to_string(B.degree()));
    }
    const Complex f1 = B.zeros()[0];
    const Complex f2 = B.zeros()[1];
    const ComplexMatrix A = shift_matrix(B).matrix;
    const ComplexMatrix gram = A.adjoint() * A;
    double trace = 0.0;
    for (int i = 0; i < 2; ++i) trace += gram(i, i).real();
    const double minor_sq = trace - std::norm(f1) - std::norm(f2);
    EllipseParams e;
    e.foci = {f1, f2};
    e.center = 0.5 * (f1 + f2);
    e.minor_axis = std::sqrt(std::max(0.0, minor_sq));
    e.major_axis = std::sqrt(std::max(0.0, minor_sq + std::norm(f1 - f2)));
    return e;
}

double ellipse_numerical_radius(const EllipseParams& e) {
    return std::abs(e.center) + 0.5 * e.major_axis;
}

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

double parse_double_strict(const std::string& s) {
    if (s.empty()) throw ParseError("empty numeric literal");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v)) {
        throw ParseError("malformed numeric literal '" + s + "'");
    }
    return v;
}

}  // namespace

Complex parse_complex_literal(const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty complex literal");
    if (s.back() != 'i') {
        return Complex(parse_double_strict(s), 0.0);
    }
    // re±imi: find the sign that splits the two parts, skipping a leading
    // sign and signs that belong to an exponent.
    const std::string body = s.substr(0, s.size() - 1);
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        const char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        // pure imaginary: "0.5i", "-i", "i"
        std::string im = body;
        if (im.empty() || im == "+") im = "1";
        else if (im == "-") im = "-1";
        return Complex(0.0, parse_double_strict(im));
    }
    const std::string re = body.substr(0, split);
    std::string im = body.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return Complex(parse_double_strict(re), parse_double_strict(im));
}

std::vector<Complex> parse_zero_list(const std::string& text) {
    std::vector<Complex> out;
    std::string item;
    const std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty zero list");
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(parse_complex_literal(s.substr(start, comma - start)));
        start = comma + 1;
        if (comma == s.size()) break;
    }
    return out;
}

std::string format_complex_literal(Complex z) {
    char buf[64];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.17g", z.real());
        return buf;
    }
    std::string out;
    std::snprintf(buf, sizeof(buf), "%.17g", z.real());
    out = buf;
    out += (z.imag() < 0.0) ? '-' : '+';
    std::snprintf(buf, sizeof(buf), "%.17g", std::abs(z.imag()));
    out += buf;
    out += 'i';
    return out;
}

}  // namespace cshift
