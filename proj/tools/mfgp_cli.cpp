#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mfgp/benchmarks.hpp"
#include "mfgp/harness.hpp"

namespace {

void apply_cost_ratio(mfgp::ExperimentConfig& cfg, const std::string& ratio) {
    const auto colon = ratio.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--cost-ratio expects H:L, e.g. 5:1");
    cfg.cost_high = std::stod(ratio.substr(0, colon));
    cfg.cost_low = std::stod(ratio.substr(colon + 1));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-fidelity Gaussian-process surrogate experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_prefix = "./";
    std::string strategy_name;
    std::string cost_ratio;
    std::uint64_t seed = 0;

    CLI::App* run = app.add_subcommand("run", "Run an adaptive-sampling experiment");
    run->add_option("--config", config_path, "Experiment config file (key = value lines)")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("--out", out_prefix, "Output path prefix for the result files");
    run->add_option("--strategy", strategy_name,
                    "Override: mf_ucr | if_ucr | if_ucr_bel | single_us");
    run->add_option("--cost-ratio", cost_ratio, "Override: cost ratio H:L, e.g. 10:1");
    CLI::Option* seed_opt = run->add_option("--seed", seed, "Override: base random seed");

    std::string bed_out;
    std::uint64_t bed_seed = 0;
    int bed_rows = mfgp::kFluidizedBedConditions;
    CLI::App* synth = app.add_subcommand(
        "synth-bed", "Write a synthetic fluidized-bed dataset (stand-in, not measured data)");
    synth->add_option("--out", bed_out, "Destination CSV path")->required();
    synth->add_option("--seed", bed_seed, "Generator seed");
    synth->add_option("--rows", bed_rows, "Number of records");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            mfgp::ExperimentConfig cfg = mfgp::load_config(config_path);
            if (!strategy_name.empty()) cfg.strategy = mfgp::strategy_from_string(strategy_name);
            if (!cost_ratio.empty()) apply_cost_ratio(cfg, cost_ratio);
            if (seed_opt->count() > 0) cfg.seed = seed;
            cfg.validate();

            const mfgp::RunResult result = mfgp::run_experiment(cfg);
            const auto summary = mfgp::summarize(result.records, cfg);
            mfgp::emit_results(result, summary, out_prefix);

            if (!summary.empty()) {
                const auto& last = summary.back();
                std::cout << cfg.problem << " " << mfgp::to_string(cfg.strategy) << " "
                          << cfg.cost_high << ":" << cfg.cost_low << " seed " << cfg.seed
                          << " -> iteration " << last.iteration << " median RMSE "
                          << last.rmse_median << ", median cost " << last.cost_median << "\n";
            }
            if (!result.truncated_replications.empty()) {
                std::cout << "note: " << result.truncated_replications.size()
                          << " replication(s) stopped early on pool exhaustion\n";
            }
            std::cout << "wrote " << out_prefix << "{iterations,summary,predictions}.csv and "
                      << out_prefix << "run.json\n";
        } else if (synth->parsed()) {
            const auto records = mfgp::synthetic_fluidized_bed(bed_seed, bed_rows);
            mfgp::write_fluidized_bed(bed_out, records);
            std::cout << "wrote " << records.size() << " synthetic records to " << bed_out
                      << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
