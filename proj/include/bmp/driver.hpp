#pragma once

#include "bmp/report_json.hpp"
#include "bmp/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bmp {

/// Exit codes of the command driver.
enum ExitCode : int {
    kExitPass = 0,
    kExitUsage = 1,
    kExitCheckFailed = 2,
    kExitInvalidBody = 3,
    kExitIoError = 4,
};

/// One fully-specified command invocation.
struct RunConfig {
    std::string command;                 // validate, volume, bm-scan, variation,
                                         // poincare, lichnerowicz, equality, dump-forms
    std::string body_json;
    std::optional<std::string> body2_json; // bm-scan only
    int dim = 3;
    int resolution = 0;                  // 0 = default (24 for n=3, 128 for n=2)
    int basis_degree = 8;
    double tolerance = 1e-7;
    std::string output;                  // empty = stdout
    std::string format = "json";         // csv enables the dump-forms matrix dump
    std::vector<double> u0;              // equality/variation; empty = e_1
    int t_points = 33;                   // bm-scan grid size
    std::optional<int> phi_basis;        // variation: basis element index
};

struct RunOutcome {
    int exit_code = kExitPass;
    JsonValue report;
};

/// Executes the command and builds the report document. Never throws for
/// anticipated failures; the exit code classifies them.
RunOutcome run(const RunConfig& config);

/// Runs, then writes the report (and any CSV dumps) to the configured
/// destination. Returns the final exit code (I/O failures map to 4).
int run_and_emit(const RunConfig& config);

int default_resolution(int dim);

} // namespace bmp
