#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cshift/foias_tannenbaum.hpp"
#include "cshift/numrange.hpp"
#include "cshift/result.hpp"

namespace cshift {

/// Doubles are printed with 17 significant digits everywhere, so identical
/// invocations serialize byte-identically.
std::string format_double17(double v);

/// Minimal JSON emitter with insertion-ordered keys. Only what the fixed
/// output schemas need.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& s);
    JsonWriter& value(const char* s);
    const std::string& str() const { return out_; }

private:
    void comma();
    std::string out_;
    std::vector<bool> first_;
    bool pending_key_ = false;
};

std::string escape_json(const std::string& s);

/// Top-level result schema:
/// {value, method, cross_checks, warnings, inputs_echo, config_echo,
///  diagnostics}.
std::string norm_result_to_json(const NormResult& result, const RunConfig& config);

void write_boundary_csv(std::ostream& os, const std::vector<BoundarySample>& samples);
void write_ft_trace_csv(std::ostream& os, const std::vector<FTState>& states);

/// key=value overrides for RunConfig; blank lines and '#' comments allowed.
/// Keys: tol_root, tol_eig, tol_bisect, theta_samples, t_ladder
/// (comma-separated), cross_check (true/false/1/0).
RunConfig parse_run_config_text(const std::string& text, RunConfig base = {});
RunConfig load_run_config(const std::string& path, RunConfig base = {});

}  // namespace cshift
