#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fracbound::cli {

enum class ExitCode : int { ok = 0, check_failed = 1, config_error = 2 };

struct RunConfig {
    std::string command;  ///< build-matrix, solve, simulate, converge, verify, compare
    double alpha = 1.5;
    std::string bc = "DD";
    int n = 64;
    double t_final = 0.5;
    std::vector<double> output_times;  ///< empty: 11 evenly spaced times in [0, t_final]
    std::string initial = "delta@0";   ///< delta@x, uniform, poly:c0,c1,..., file:path
    std::size_t n_paths = 100000;
    std::uint64_t seed = 1;
    std::string output_dir;  ///< empty: $FRACBOUND_OUTPUT_DIR, else ./fracbound-out
    std::string direction = "forward";
    std::string suite = "all";
    std::vector<int> n_sequence{32, 64, 128, 256};
    double lambda = 1.0;  ///< build-matrix: interpolation parameter
    int bins = 0;         ///< simulate: 0 means one bin per state
    std::size_t record_paths = 10;
};

const std::vector<std::string>& commands();

/// Every problem with the config, in one list. Empty means valid.
std::vector<std::string> validate(const RunConfig& c);

std::string resolved_output_dir(const RunConfig& c);

/// Times written by solve/simulate: output_times plus t_final, sorted and unique.
std::vector<double> snapshot_times(const RunConfig& c);

std::string to_json(const RunConfig& c);
/// Accepts either a bare config object or a manifest {config, seed, ...}.
RunConfig config_from_json(const std::string& text);

}  // namespace fracbound::cli
