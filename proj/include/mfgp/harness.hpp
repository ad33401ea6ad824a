#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mfgp/acquisition.hpp"
#include "mfgp/inference.hpp"
#include "mfgp/types.hpp"

namespace mfgp {

enum class Strategy { MfUcr, IfUcr, IfUcrBel, SingleUs };

const char* to_string(Strategy strategy);
Strategy strategy_from_string(const std::string& name);

/// Named substreams hanging off each replication's seed; every consumer of
/// randomness draws from its own stream so the streams stay independent.
namespace substream {
inline constexpr std::uint64_t kInitialDesign = 0;
inline constexpr std::uint64_t kPools = 1;
inline constexpr std::uint64_t kHoldout = 2;
inline constexpr std::uint64_t kMcmc = 3;
}  // namespace substream

struct ExperimentConfig {
    std::string problem = "forrester";        // forrester | park | fluidized_bed
    Strategy strategy = Strategy::IfUcr;
    double cost_high = 5.0;
    double cost_low = 1.0;
    int iterations = 10;
    int replications = 10;
    int n_init_low = 4;
    int n_init_high = 2;
    int pool_size = 100;
    int holdout_size = 100;
    std::uint64_t seed = 0;
    int chain_length = 2000;
    double burn_in_fraction = 0.5;
    double step_scale = 0.25;
    PriorSpec prior{};
    bool use_latin_hypercube = false;         // default off: plain uniform sampling
    double stop_rmse = 0.0;                   // >0 stops a replication once reached
    std::string bed_data;                     // fluidized-bed CSV; empty -> synthetic stand-in

    void validate() const;
};

struct IterationRecord {
    int replication;
    int iteration;                 // 1-based
    Eigen::VectorXd point;         // raw-domain coordinates of the chosen input
    FidelityLevel level;
    double rmse;                   // holdout RMSE of this iteration's fitted model
    double cumulative_cost;
    Eigen::Index pool_low_remaining;
    Eigen::Index pool_high_remaining;
};

struct HoldoutPrediction {
    int replication;
    int iteration;
    int index;          // position within the holdout set
    double predicted;   // un-standardized model mean
    double truth;       // high-fidelity holdout value
};

struct RunResult {
    ExperimentConfig config;
    std::vector<IterationRecord> records;
    std::vector<HoldoutPrediction> predictions;
    std::vector<int> truncated_replications;       // stopped early on pool exhaustion
    std::vector<std::vector<int>> holdout_indices; // dataset rows per replication (bed only)
};

/// The adaptive-sampling loop over all replications: seeded initial designs
/// and pools, then per iteration fit -> select -> evaluate -> append,
/// recording holdout RMSE and cumulative cost. Deterministic per (config, seed).
RunResult run_experiment(const ExperimentConfig& config);

struct SummaryRow {
    std::string strategy;
    double cost_high;
    double cost_low;
    int iteration;
    double rmse_median;
    double rmse_iqr;
    double cost_median;
    double cost_iqr;
};

/// Median and interquartile range of RMSE and cumulative cost across
/// replications, per iteration.
std::vector<SummaryRow> summarize(const std::vector<IterationRecord>& records,
                                  const ExperimentConfig& config);

/// Writes <prefix>iterations.csv, <prefix>summary.csv, <prefix>predictions.csv
/// and <prefix>run.json. Bit-stable for a fixed (config, seed).
void emit_results(const RunResult& result, const std::vector<SummaryRow>& summary,
                  const std::string& prefix);

/// Inverse of the iterations.csv writer; used for replay checks.
std::vector<IterationRecord> read_iteration_records(const std::filesystem::path& path);

/// Key = value config file covering every ExperimentConfig field.
ExperimentConfig load_config(const std::filesystem::path& path);

int problem_dim(const std::string& problem);

}  // namespace mfgp
