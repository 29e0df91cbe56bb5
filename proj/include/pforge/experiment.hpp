#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pforge/core.hpp"
#include "pforge/engine.hpp"
#include "pforge/metrics.hpp"

namespace pforge {

/// User-facing configuration error: bad flag values, unknown keys, unknown
/// problem or algorithm names. Maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One experiment request. Unset optional fields fall back to the
/// per-algorithm defaults. An empty algo means "sslpsa" for single runs and
/// "both" for comparisons.
struct ExperimentConfig {
    std::string problem = "zdt1";
    std::string algo;
    int runs = 1;
    std::uint64_t seed = 0;
    std::string out = ".";
    std::optional<int> generations;
    std::optional<int> pop;
    std::optional<double> xi;
    std::optional<std::string> xi_mode;  // "fixed" | "uniform"
    std::optional<double> pmut;
    std::optional<int> pool;
    std::optional<int> som_units;
    std::optional<int> archive_cap;
    std::optional<bool> reshuffle;
};

/// Parses a flat JSON config object (or a result.json wrapper whose "config"
/// member holds one). Unknown keys are rejected.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Control parameters for one algorithm after applying the overrides.
ControlParams effective_params(const ExperimentConfig& config, const std::string& algo);

/// Number of worker threads for parallel runs: the PARETO_FORGE_THREADS
/// environment variable if set, otherwise the hardware concurrency.
int thread_cap();

/// One seeded run; writes front.csv, decisions.csv, trace.csv and
/// result.json into the output directory. Exit code 0/1/2.
int cmd_run(const ExperimentConfig& config);

/// `runs` seeded runs per algorithm (seed + run index); writes metrics.csv
/// and summary.csv. Runs execute in parallel up to thread_cap().
int cmd_compare(const ExperimentConfig& config);

/// Writes k reference-front points of a problem as CSV, sorted by f1.
int cmd_front(const std::string& problem, int k, const std::string& path);

/// Per-run metric rows as written into metrics.csv, exposed for reuse.
struct RunMetrics {
    std::string problem;
    std::string algorithm;
    int run = 0;
    std::uint64_t seed = 0;
    double gamma = 0.0;
    double delta = 0.0;
    double igd = 0.0;
    double spread = 0.0;
    int archive_size = 0;
    double wall_time_seconds = 0.0;
};

/// Executes one seeded run of the named algorithm.
RunResult execute_run(const std::string& problem, const std::string& algo, const ExperimentConfig& config,
                      std::uint64_t seed);

/// Metrics of a finished run against a reference front sample.
RunMetrics score_run(const RunResult& result, const std::string& algo,
                     const std::vector<ObjectiveVector>& reference, int run_index);

}  // namespace pforge
