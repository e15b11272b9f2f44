// Command-line front end: numerical radius and perturbed-identity norms of
// compressed shifts attached to finite Blaschke products, with
// cross-validation between the independent computational routes.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cshift/blaschke.hpp"
#include "cshift/foias_tannenbaum.hpp"
#include "cshift/numrange.hpp"
#include "cshift/pick.hpp"
#include "cshift/realzeros.hpp"
#include "cshift/result.hpp"
#include "cshift/serialize.hpp"

namespace {

using namespace cshift;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitCrossCheckWarning = 3;
constexpr int kExitIoError = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SweepOptions sweep_options(const RunConfig& cfg) {
    SweepOptions s;
    s.theta_samples = cfg.theta_samples;
    return s;
}

LadderOptions ladder_options(const RunConfig& cfg) {
    LadderOptions l;
    l.ts = cfg.t_ladder;
    return l;
}

RootFindOptions rootfind_options(const RunConfig& cfg) {
    RootFindOptions r;
    r.tol_root = cfg.tol_root;
    return r;
}

PickOptions pick_options(const RunConfig& cfg) {
    PickOptions p;
    p.tol_bisect = cfg.tol_bisect;
    return p;
}

bool repeated_zeros(const std::vector<Complex>& zeros) {
    for (size_t i = 0; i < zeros.size(); ++i) {
        for (size_t j = i + 1; j < zeros.size(); ++j) {
            if (std::abs(zeros[i] - zeros[j]) < 1e-9) return true;
        }
    }
    return false;
}

void add_oracle_cross_check(NormResult& res, double oracle_value, double tolerance,
                            const std::string& key = "oracle") {
    const double delta = std::abs(res.value - oracle_value);
    res.cross_checks[key] = CrossCheck{delta, tolerance};
    if (delta > tolerance) {
        res.warnings.push_back("value disagrees with the " + key +
                               " route beyond tolerance " + format_double17(tolerance));
    }
}

int finish(const NormResult& res, const RunConfig& cfg) {
    std::cout << norm_result_to_json(res, cfg) << "\n";
    return res.warnings.empty() ? kExitOk : kExitCrossCheckWarning;
}

int cmd_numrad(const std::string& zeros_text, std::string method, const RunConfig& cfg) {
    const std::vector<Complex> zeros = parse_zero_list(zeros_text);
    const BlaschkeProduct B(zeros);
    const bool real = B.has_real_zeros();

    if (method == "auto") {
        method = (B.degree() <= 4 && real) ? "closed" : (real ? "roots" : "oracle");
    }

    NormResult res;
    res.zeros_echo = zeros;

    if (method == "closed") {
        if (!real) throw NotRealZeros("closed form requires real zeros");
        std::vector<double> a;
        for (const Complex& z : zeros) a.push_back(z.real());
        res.method = Method::closed_form;
        switch (B.degree()) {
            case 1: res.value = std::abs(a[0]); break;
            case 2: res.value = closed_form_degree2(a[0], a[1]); break;
            case 3: res.value = closed_form_degree3(a[0], a[1], a[2]); break;
            case 4: res.value = closed_form_degree4(a[0], a[1], a[2], a[3]); break;
            default:
                throw WrongDegree("closed form is only available for degree <= 4");
        }
        if (cfg.cross_check) {
            const double oracle =
                numerical_radius(shift_matrix(B).matrix, sweep_options(cfg)).value;
            add_oracle_cross_check(res, oracle, 1e-6);
        }
    } else if (method == "roots") {
        RootMethodOptions opts;
        opts.cross_check = cfg.cross_check;
        opts.sweep = sweep_options(cfg);
        opts.rootfind = rootfind_options(cfg);
        RootMethodResult r = numerical_radius_root_method(B, opts);
        res = r.result;
        res.zeros_echo = zeros;
    } else if (method == "oracle") {
        const RadiusEstimate est = numerical_radius(shift_matrix(B).matrix, sweep_options(cfg));
        res.method = Method::oracle;
        res.value = est.value;
        res.diagnostics["argmax_theta"] = est.argmax_theta;
        res.diagnostics["refinement_width"] = est.refinement_width;
    } else if (method == "limit") {
        const RadiusEstimate est =
            radius_via_limit(shift_matrix(B).matrix, sweep_options(cfg), ladder_options(cfg));
        res.method = Method::limit;
        res.value = est.value;
        res.diagnostics["argmax_theta"] = est.argmax_theta;
        if (cfg.cross_check) {
            const double oracle =
                numerical_radius(shift_matrix(B).matrix, sweep_options(cfg)).value;
            add_oracle_cross_check(res, oracle, 1e-3);
        }
    } else if (method == "pick") {
        if (repeated_zeros(zeros)) {
            res.warnings.push_back(
                "repeated zeros separated by a deterministic 1e-6 radial perturbation; "
                "the value carries an O(1e-6) error bar");
        }
        const RadiusEstimate est =
            radius_via_pick(B, sweep_options(cfg), ladder_options(cfg), pick_options(cfg));
        res.method = Method::pick;
        res.value = est.value;
        res.diagnostics["argmax_theta"] = est.argmax_theta;
        if (cfg.cross_check) {
            const double oracle =
                numerical_radius(shift_matrix(B).matrix, sweep_options(cfg)).value;
            add_oracle_cross_check(res, oracle, 1e-3);
        }
    } else {
        throw ParseError("numrad: unknown method '" + method + "'");
    }
    return finish(res, cfg);
}

int cmd_norm(const std::string& zeros_text, const std::string& t_text, const std::string& method,
             const RunConfig& cfg) {
    const std::vector<Complex> zeros = parse_zero_list(zeros_text);
    const Complex t = parse_complex_literal(t_text);
    const BlaschkeProduct B(zeros);

    NormResult res;
    res.zeros_echo = zeros;
    res.t_echo = t;

    const auto svd_value = [&]() { return norm_I_plus_tA(shift_matrix(B).matrix, t); };

    if (method == "svd") {
        res.method = Method::oracle;
        res.value = svd_value();
    } else if (method == "pick") {
        std::vector<Complex> nodes = zeros;
        if (repeated_zeros(zeros)) {
            nodes = separate_repeated_zeros(zeros);
            res.warnings.push_back(
                "repeated zeros separated by a deterministic 1e-6 radial perturbation; "
                "the value carries an O(1e-6) error bar");
        }
        NormResult pick_res = critical_gamma(nodes, t, pick_options(cfg));
        res.method = Method::pick;
        res.value = pick_res.value;
        res.diagnostics = pick_res.diagnostics;
        if (cfg.cross_check) add_oracle_cross_check(res, svd_value(), 1e-8, "svd");
    } else if (method == "ft") {
        if (t == Complex(0.0)) throw Error("ft route needs a nonzero t");
        const FTResult ft = ft_norm(B, t);
        res.method = Method::ft;
        res.value = ft.norm;
        res.diagnostics["rho_bar"] = ft.rho_bar;
        res.diagnostics["defect_residual"] = ft.defect_residual;
        if (cfg.cross_check) {
            add_oracle_cross_check(res, svd_value(), 1e-8, "svd");
            if (B.has_distinct_zeros()) {
                add_oracle_cross_check(res, critical_gamma(zeros, t, pick_options(cfg)).value,
                                       1e-8, "pick");
            }
        }
    } else {
        throw ParseError("norm: unknown method '" + method + "'");
    }
    return finish(res, cfg);
}

int cmd_range(const std::string& zeros_text, int samples, const std::string& out_path,
              const RunConfig& cfg) {
    if (samples < 8) throw ParseError("range: samples must be at least 8");
    const BlaschkeProduct B(parse_zero_list(zeros_text));
    const ComplexMatrix A = shift_matrix(B).matrix;

    std::vector<BoundarySample> rows;
    rows.reserve(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        rows.push_back(support_function(A, 2.0 * std::numbers::pi * i / samples));
    }

    std::ofstream out(out_path);
    if (!out) throw IoError("range: cannot open '" + out_path + "' for writing");
    write_boundary_csv(out, rows);
    out.flush();
    if (!out) throw IoError("range: write to '" + out_path + "' failed");

    SweepOptions sweep = sweep_options(cfg);
    sweep.theta_samples = samples;
    const RadiusEstimate est = numerical_radius(A, sweep);
    JsonWriter w;
    w.begin_object();
    w.key("value").value(est.value);
    w.key("argmax_theta").value(est.argmax_theta);
    w.key("samples").value(samples);
    w.key("out").value(out_path);
    w.end_object();
    std::cout << w.str() << "\n";
    return kExitOk;
}

int cmd_pick_check(const std::string& zeros_text, const std::string& t_text, double gamma) {
    const std::vector<Complex> zeros = parse_zero_list(zeros_text);
    const Complex t = parse_complex_literal(t_text);
    const PickProblem problem = PickProblem::make(zeros, t, gamma);
    const PickMatrixDecomposition d = pick_matrix(problem);
    const Feasibility f = is_feasible(problem);

    JsonWriter w;
    w.begin_object();
    w.key("feasible").value(f.feasible);
    w.key("min_eigenvalue").value(f.min_eigenvalue);
    w.key("gamma").value(gamma);
    w.key("t").value(format_complex_literal(t));
    w.key("zeros").begin_array();
    for (const Complex& z : zeros) w.value(format_complex_literal(z));
    w.end_array();
    w.key("assembled").begin_array();
    for (int i = 0; i < d.assembled.rows(); ++i) {
        w.begin_array();
        for (int j = 0; j < d.assembled.cols(); ++j) {
            w.begin_array();
            w.value(d.assembled(i, j).real());
            w.value(d.assembled(i, j).imag());
            w.end_array();
        }
        w.end_array();
    }
    w.end_array();
    w.end_object();
    std::cout << w.str() << "\n";
    return kExitOk;
}

int cmd_ft_trace(const std::string& zeros_text, const std::string& t_text, int samples,
                 const std::string& out_path) {
    const BlaschkeProduct B(parse_zero_list(zeros_text));
    const Complex a = parse_complex_literal(t_text);
    const std::vector<FTState> states = ft_trace(B, a, samples);
    if (out_path.empty()) {
        write_ft_trace_csv(std::cout, states);
    } else {
        std::ofstream out(out_path);
        if (!out) throw IoError("ft-trace: cannot open '" + out_path + "' for writing");
        write_ft_trace_csv(out, states);
        out.flush();
        if (!out) throw IoError("ft-trace: write to '" + out_path + "' failed");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical radius and perturbed-identity norms of compressed shifts"};
    app.require_subcommand(1);

    std::string zeros_text;
    std::string t_text = "0";
    std::string method_numrad = "auto";
    std::string method_norm = "svd";
    std::string config_path;
    std::string out_path;
    double gamma = 1.0;
    int samples_range = 720;
    int samples_trace = 2000;
    bool json_flag = false;  // JSON is already the default output

    auto* numrad = app.add_subcommand("numrad", "numerical radius of the compressed shift");
    numrad->add_option("--zeros", zeros_text, "comma-separated zeros, e.g. 0,0.5 or 0.3+0.1i")
        ->required();
    numrad->add_option("--method", method_numrad, "auto|closed|roots|oracle|limit|pick");
    numrad->add_option("--config", config_path, "key=value config file");
    numrad->add_flag("--json", json_flag, "emit JSON (default)");

    auto* norm = app.add_subcommand("norm", "operator norm of I + t S_B");
    norm->add_option("--zeros", zeros_text)->required();
    norm->add_option("--t", t_text, "perturbation, complex literal")->required();
    norm->add_option("--method", method_norm, "svd|pick|ft");
    norm->add_option("--config", config_path);
    norm->add_flag("--json", json_flag);

    auto* range = app.add_subcommand("range", "numerical-range boundary sweep to CSV");
    range->add_option("--zeros", zeros_text)->required();
    range->add_option("--samples", samples_range, "sweep sample count (>= 8)");
    range->add_option("--out", out_path, "CSV output path")->required();
    range->add_option("--config", config_path);

    auto* pick_check = app.add_subcommand("pick-check", "feasibility of one interpolation bound");
    pick_check->add_option("--zeros", zeros_text)->required();
    pick_check->add_option("--t", t_text)->required();
    pick_check->add_option("--gamma", gamma)->required();

    auto* ft_tr = app.add_subcommand("ft-trace", "defect values along the rho scan, as CSV");
    ft_tr->add_option("--zeros", zeros_text)->required();
    ft_tr->add_option("--t", t_text, "the perturbation a (nonzero)")->required();
    ft_tr->add_option("--samples", samples_trace);
    ft_tr->add_option("--out", out_path, "CSV output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) cfg = load_run_config(config_path);

        if (numrad->parsed()) return cmd_numrad(zeros_text, method_numrad, cfg);
        if (norm->parsed()) return cmd_norm(zeros_text, t_text, method_norm, cfg);
        if (range->parsed()) return cmd_range(zeros_text, samples_range, out_path, cfg);
        if (pick_check->parsed()) return cmd_pick_check(zeros_text, t_text, gamma);
        if (ft_tr->parsed()) return cmd_ft_trace(zeros_text, t_text, samples_trace, out_path);
        return kExitInputError;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const NonConvergence& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const NoRootFound& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const BracketFailure& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const ExtrapolationUnstable& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const NotHermitian& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        // Remaining library errors are input/domain problems: malformed
        // literals, zeros outside the disk, wrong degree, node collisions.
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
