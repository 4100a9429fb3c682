#pragma once

#include <string>

namespace per1::cli {

/// Resolved configuration of one CLI run; serializes losslessly so an emitted
/// sidecar re-runs to identical outputs.
struct RunConfig {
    std::string subcommand;
    std::string lambda = "2";
    std::string t = "0";
    std::string window = "-3:3:-3:3";  // xmin:xmax:ymin:ymax
    int res = 512;
    int n = 1;
    int m = 0;
    std::string sign = "+";  // +, -, both
    double tol = 1e-9;
    int max_period = 64;
    int budget = 4000;
    std::string mode = "bif";   // render: bif|density; capacity: closed|resultant|both
    std::string check = "all";  // verify
    std::string places = "inf";
    int terms = 60;
    std::string out = "per1_out";
    int threads = 0;
    unsigned long seed = 1;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

std::string to_json(const RunConfig& cfg);
RunConfig config_from_json(const std::string& json);
void write_sidecar(const RunConfig& cfg);

/// Parse "xmin:xmax:ymin:ymax"; false on malformed or empty boxes.
bool parse_window(const std::string& s, double& x0, double& x1, double& y0, double& y1);

/// Dispatch a resolved config.  Exit codes: 0 success, 1 computational
/// failure (certification not met), 2 usage error.
int run_command(const RunConfig& cfg);

}  // namespace per1::cli
