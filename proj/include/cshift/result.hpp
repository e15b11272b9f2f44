#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cshift/numrange.hpp"

namespace cshift {

enum class Method { closed_form, root_method, oracle, pick, ft, limit };

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

/// Delta against a reference route, together with the tolerance the
/// comparison was made at.
struct CrossCheck {
    double delta = 0.0;
    double tolerance = 0.0;
};

/// A norm or radius value with its provenance and diagnostics. The map
/// fields keep keys sorted, which the serializer relies on for
/// byte-identical output.
struct NormResult {
    double value = 0.0;
    Method method = Method::oracle;
    std::map<std::string, CrossCheck> cross_checks;
    std::vector<std::string> warnings;
    std::map<std::string, double> diagnostics;
    std::vector<Complex> zeros_echo;
    std::optional<Complex> t_echo;
    std::optional<double> gamma_echo;
};

/// Shared numeric configuration, overridable from key=value config files.
struct RunConfig {
    double tol_root = 1e-13;
    double tol_eig = 1e-12;
    double tol_bisect = 1e-12;
    int theta_samples = 720;
    std::vector<double> t_ladder = default_t_ladder();
    bool cross_check = true;
};

}  // namespace cshift
