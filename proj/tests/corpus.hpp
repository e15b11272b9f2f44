#pragma once

// Deterministic random inputs shared by the test suites. Everything is
// seeded, so failures reproduce exactly.

#include <complex>
#include <random>
#include <vector>

#include "cshift/blaschke.hpp"

namespace corpus {

using cshift::Complex;

inline std::vector<double> real_zeros(std::mt19937_64& rng, int degree, double radius,
                                      double min_separation = 1e-3) {
    std::uniform_real_distribution<double> dist(-radius, radius);
    std::vector<double> zs;
    while (static_cast<int>(zs.size()) < degree) {
        const double z = dist(rng);
        bool ok = true;
        for (double other : zs) {
            if (std::abs(z - other) < min_separation) ok = false;
        }
        if (ok) zs.push_back(z);
    }
    return zs;
}

inline cshift::BlaschkeProduct real_zero_product(std::mt19937_64& rng, int degree,
                                                 double radius = 0.9) {
    std::vector<Complex> zs;
    for (double z : real_zeros(rng, degree, radius)) zs.emplace_back(z, 0.0);
    return cshift::BlaschkeProduct(zs);
}

inline cshift::BlaschkeProduct complex_zero_product(std::mt19937_64& rng, int degree,
                                                    double radius = 0.95) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> zs;
    while (static_cast<int>(zs.size()) < degree) {
        const double r = radius * std::sqrt(unit(rng));
        const double phi = 2.0 * 3.14159265358979323846 * unit(rng);
        zs.push_back(std::polar(r, phi));
    }
    return cshift::BlaschkeProduct(zs);
}

}  // namespace corpus
