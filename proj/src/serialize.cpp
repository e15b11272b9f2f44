#include "cshift/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cshift/blaschke.hpp"

namespace cshift {

std::string format_double17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::root_method: return "root_method";
        case Method::oracle: return "oracle";
        case Method::pick: return "pick";
        case Method::ft: return "ft";
        case Method::limit: return "limit";
    }
    return "unknown";
}

std::optional<Method> method_from_name(const std::string& name) {
    if (name == "closed_form") return Method::closed_form;
    if (name == "root_method") return Method::root_method;
    if (name == "oracle") return Method::oracle;
    if (name == "pick") return Method::pick;
    if (name == "ft") return Method::ft;
    if (name == "limit") return Method::limit;
    return std::nullopt;
}

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    return out;
}

void JsonWriter::comma() {
    if (!first_.empty() && !pending_key_) {
        if (!first_.back()) out_ += ',';
        first_.back() = false;
    }
    pending_key_ = false;
}

JsonWriter& JsonWriter::begin_object() {
    comma();
    out_ += '{';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    first_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    comma();
    out_ += '[';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    first_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    if (!first_.back()) out_ += ',';
    first_.back() = false;
    out_ += '"';
    out_ += escape_json(k);
    out_ += "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    comma();
    out_ += format_double17(v);
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    comma();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    comma();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
    comma();
    out_ += '"';
    out_ += escape_json(s);
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::value(const char* s) { return value(std::string(s)); }

std::string norm_result_to_json(const NormResult& result, const RunConfig& config) {
    JsonWriter w;
    w.begin_object();
    w.key("value").value(result.value);
    w.key("method").value(method_name(result.method));

    w.key("cross_checks").begin_object();
    for (const auto& [name, check] : result.cross_checks) {
        w.key(name).begin_object();
        w.key("delta").value(check.delta);
        w.key("tolerance").value(check.tolerance);
        w.end_object();
    }
    w.end_object();

    w.key("warnings").begin_array();
    for (const std::string& s : result.warnings) w.value(s);
    w.end_array();

    w.key("inputs_echo").begin_object();
    w.key("zeros").begin_array();
    for (const Complex& z : result.zeros_echo) w.value(format_complex_literal(z));
    w.end_array();
    if (result.t_echo) w.key("t").value(format_complex_literal(*result.t_echo));
    if (result.gamma_echo) w.key("gamma").value(*result.gamma_echo);
    w.end_object();

    w.key("config_echo").begin_object();
    w.key("tol_root").value(config.tol_root);
    w.key("tol_eig").value(config.tol_eig);
    w.key("tol_bisect").value(config.tol_bisect);
    w.key("theta_samples").value(config.theta_samples);
    w.key("t_ladder").begin_array();
    for (double t : config.t_ladder) w.value(t);
    w.end_array();
    w.key("cross_check").value(config.cross_check);
    w.end_object();

    w.key("diagnostics").begin_object();
    for (const auto& [name, v] : result.diagnostics) w.key(name).value(v);
    w.end_object();

    w.end_object();
    return w.str();
}

void write_boundary_csv(std::ostream& os, const std::vector<BoundarySample>& samples) {
    os << "theta,support_value,re,im\n";
    for (const BoundarySample& s : samples) {
        os << format_double17(s.theta) << ',' << format_double17(s.support_value) << ','
           << format_double17(s.boundary_point.real()) << ','
           << format_double17(s.boundary_point.imag()) << '\n';
    }
}

void write_ft_trace_csv(std::ostream& os, const std::vector<FTState>& states) {
    os << "rho,defect_re,defect_im,defect_abs\n";
    for (const FTState& s : states) {
        os << format_double17(s.rho) << ',' << format_double17(s.defect.real()) << ','
           << format_double17(s.defect.imag()) << ',' << format_double17(std::abs(s.defect))
           << '\n';
    }
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

double parse_positive(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size() || !(std::isfinite(x) && x > 0.0)) throw ParseError("");
        return x;
    } catch (...) {
        throw ParseError("config: key '" + key + "' needs a positive number, got '" + v + "'");
    }
}

}  // namespace

RunConfig parse_run_config_text(const std::string& text, RunConfig base) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw ParseError("config: expected key=value, got '" + t + "'");
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string val = trim(t.substr(eq + 1));
        if (key == "tol_root") {
            base.tol_root = parse_positive(key, val);
        } else if (key == "tol_eig") {
            base.tol_eig = parse_positive(key, val);
        } else if (key == "tol_bisect") {
            base.tol_bisect = parse_positive(key, val);
        } else if (key == "theta_samples") {
            const double x = parse_positive(key, val);
            base.theta_samples = static_cast<int>(x);
            if (base.theta_samples < 8) throw ParseError("config: theta_samples must be >= 8");
        } else if (key == "t_ladder") {
            std::vector<double> ts;
            std::string item;
            std::istringstream vs(val);
            while (std::getline(vs, item, ',')) ts.push_back(parse_positive(key, trim(item)));
            if (ts.size() < 2) throw ParseError("config: t_ladder needs at least two entries");
            for (size_t k = 1; k < ts.size(); ++k) {
                if (ts[k] >= ts[k - 1]) {
                    throw ParseError("config: t_ladder must be strictly decreasing");
                }
            }
            base.t_ladder = std::move(ts);
        } else if (key == "cross_check") {
            if (val == "true" || val == "1") {
                base.cross_check = true;
            } else if (val == "false" || val == "0") {
                base.cross_check = false;
            } else {
                throw ParseError("config: cross_check must be true/false/1/0");
            }
        } else {
            throw ParseError("config: unknown key '" + key + "'");
        }
    }
    return base;
}

RunConfig load_run_config(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw ParseError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_run_config_text(ss.str(), base);
}

}  // namespace cshift
