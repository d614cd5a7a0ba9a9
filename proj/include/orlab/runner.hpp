#ifndef ORLAB_RUNNER_HPP
#define ORLAB_RUNNER_HPP

#include <string>
#include <vector>

#include "orlab/certify.hpp"
#include "orlab/config.hpp"

namespace orlab {

/// Measure construction from config fields (gaussian | u_alpha | inhomog_builtin).
Potential measure_from_config(const Config& cfg);

/// Test-function set from config ("standard12" or a comma list of specs).
std::vector<TestFunction> functions_from_config(const Config& cfg);

/// Family spec from config; "lambda = auto" estimates c empirically from
/// the F-Sobolev ratios over the test set and uses lambda(t) = t/c.
FamilySpec family_from_config(const Config& cfg, const Potential& mu,
                              const std::vector<TestFunction>& fs,
                              double* c_estimate = nullptr);

struct RunResult {
    int status = 0;  // 0 iff every unconditional invariant passed
    std::vector<std::string> report_paths;
    std::string summary;
};

/// Executes the experiment declared in the config file and writes the
/// tabular reports plus a human-readable summary into the output dir.
RunResult run(const std::string& config_path);
RunResult run_config(const Config& cfg, const std::string& out_dir);

}  // namespace orlab

#endif
