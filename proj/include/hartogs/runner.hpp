#pragma once

#include <string>

#include "hartogs/config.hpp"

namespace hartogs {

struct RunResult {
    int exit_code = 0;           // 0 ok, 1 error, 2 zoo-suite verdict mismatch
    std::string csv_path;
    std::string summary_path;
    std::string message;
};

// Executes the experiment, writes <out>/<experiment>.csv and
// <out>/<experiment>.summary.txt.  Throws on invalid configs; the CLI maps
// exceptions to exit code 1.
RunResult run(const ExperimentConfig& cfg);

}  // namespace hartogs
