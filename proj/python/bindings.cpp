#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mfgp/acquisition.hpp"
#include "mfgp/benchmarks.hpp"
#include "mfgp/gp.hpp"
#include "mfgp/harness.hpp"
#include "mfgp/inference.hpp"
#include "mfgp/mf_model.hpp"
#include "mfgp/types.hpp"

namespace py = pybind11;
using namespace mfgp;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multi-fidelity Gaussian-process surrogates with cost-aware adaptive sampling";
    m.attr("__version__") = kVersion;

    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::enum_<FidelityLevel>(m, "FidelityLevel")
        .value("Low", FidelityLevel::Low)
        .value("High", FidelityLevel::High);

    py::class_<Hyperparameters>(m, "Hyperparameters")
        .def(py::init<double, Eigen::VectorXd, double>(), py::arg("amplitude"),
             py::arg("inv_length_scales"), py::arg("nugget"))
        .def_readonly("amplitude", &Hyperparameters::amplitude)
        .def_readonly("inv_length_scales", &Hyperparameters::inv_length_scales)
        .def_readonly("nugget", &Hyperparameters::nugget)
        .def("dim", &Hyperparameters::dim);

    py::class_<TrainingSet>(m, "TrainingSet")
        .def(py::init<Eigen::MatrixXd, Eigen::VectorXd>(), py::arg("inputs"),
             py::arg("outputs"))
        .def_readonly("inputs", &TrainingSet::inputs)
        .def_readonly("outputs", &TrainingSet::outputs)
        .def("size", &TrainingSet::size)
        .def("dim", &TrainingSet::dim)
        .def("with_point", &TrainingSet::with_point, py::arg("x"), py::arg("y"));

    m.def("kernel_eval", &kernel_eval, py::arg("a"), py::arg("b"), py::arg("hyper"),
          py::arg("same_point") = false);
    m.def("covariance_matrix", &covariance_matrix, py::arg("train"), py::arg("hyper"));

    py::enum_<PredictMode>(m, "PredictMode")
        .value("Noisy", PredictMode::Noisy)
        .value("Interpolating", PredictMode::Interpolating);

    py::class_<Prediction>(m, "Prediction")
        .def_readonly("mean", &Prediction::mean)
        .def_readonly("variance", &Prediction::variance)
        .def("__repr__", [](const Prediction& p) {
            return "Prediction(mean=" + std::to_string(p.mean) +
                   ", variance=" + std::to_string(p.variance) + ")";
        });

    py::class_<CondensedGP>(m, "CondensedGP")
        .def(py::init<TrainingSet, Hyperparameters>(), py::arg("train"), py::arg("hyper"))
        .def("predict", &CondensedGP::predict, py::arg("x_star"),
             py::arg("mode") = PredictMode::Noisy)
        .def_property_readonly("train", &CondensedGP::train)
        .def_property_readonly("hyper", &CondensedGP::hyper)
        .def_property_readonly("jitter", &CondensedGP::jitter);

    py::class_<PriorSpec>(m, "PriorSpec")
        .def(py::init<>())
        .def_readwrite("sigma_loc", &PriorSpec::sigma_loc)
        .def_readwrite("sigma_scale", &PriorSpec::sigma_scale)
        .def_readwrite("beta_loc", &PriorSpec::beta_loc)
        .def_readwrite("beta_scale", &PriorSpec::beta_scale)
        .def_readwrite("lambda_loc", &PriorSpec::lambda_loc)
        .def_readwrite("lambda_scale", &PriorSpec::lambda_scale)
        .def("log_density", &PriorSpec::log_density, py::arg("log_params"));

    py::class_<ChainConfig>(m, "ChainConfig")
        .def(py::init<>())
        .def_readwrite("length", &ChainConfig::length)
        .def_readwrite("burn_in_fraction", &ChainConfig::burn_in_fraction)
        .def_readwrite("step_scale", &ChainConfig::step_scale)
        .def_readwrite("seed", &ChainConfig::seed)
        .def_readwrite("adapt_rounds", &ChainConfig::adapt_rounds)
        .def_readwrite("adapt_round_length", &ChainConfig::adapt_round_length);

    py::class_<Chain>(m, "Chain")
        .def_readonly("samples", &Chain::samples)
        .def_readonly("accept_count", &Chain::accept_count)
        .def_readonly("burn_in_fraction", &Chain::burn_in_fraction)
        .def("retained", &Chain::retained);

    m.def("log_marginal_likelihood", &log_marginal_likelihood, py::arg("train"),
          py::arg("hyper"));
    m.def("log_posterior", &log_posterior, py::arg("train"), py::arg("hyper"),
          py::arg("prior"));
    m.def("acceptance_probability", &acceptance_probability, py::arg("lp_proposed"),
          py::arg("lp_current"));
    m.def("run_chain", &run_chain, py::arg("train"), py::arg("prior"), py::arg("config"));
    m.def("condense", &condense, py::arg("chain"));

    py::class_<MfPrediction>(m, "MfPrediction")
        .def_readonly("mean", &MfPrediction::mean)
        .def_readonly("var_total", &MfPrediction::var_total)
        .def_readonly("var_eta", &MfPrediction::var_eta)
        .def_readonly("var_delta", &MfPrediction::var_delta);

    py::class_<MultiFidelityModel>(m, "MultiFidelityModel")
        .def(py::init<CondensedGP, CondensedGP>(), py::arg("eta"), py::arg("delta"))
        .def_property_readonly("eta", &MultiFidelityModel::eta)
        .def_property_readonly("delta", &MultiFidelityModel::delta)
        .def("dim", &MultiFidelityModel::dim);

    m.def("fit_mf", &fit_mf, py::arg("d_eta"), py::arg("d_y"), py::arg("prior"),
          py::arg("config"));
    m.def("predict_mf", &predict_mf, py::arg("model"), py::arg("x_star"));
    m.def("assemble_blocked", &assemble_blocked, py::arg("model"));
    m.def("believer_variance", &believer_variance, py::arg("model"), py::arg("x_eval"),
          py::arg("x_bel"), py::arg("level"));

    py::class_<CostModel>(m, "CostModel")
        .def(py::init<double, double>(), py::arg("cost_low"), py::arg("cost_high"))
        .def_readonly("cost_low", &CostModel::cost_low)
        .def_readonly("cost_high", &CostModel::cost_high);

    py::class_<CandidatePool>(m, "CandidatePool")
        .def(py::init<Eigen::MatrixXd, Eigen::MatrixXd>(), py::arg("low_candidates"),
             py::arg("high_candidates"))
        .def("rows", &CandidatePool::rows, py::arg("level"))
        .def("consumed", &CandidatePool::consumed, py::arg("level"), py::arg("row"))
        .def("active_count", &CandidatePool::active_count, py::arg("level"))
        .def("consume", &CandidatePool::consume, py::arg("level"), py::arg("row"));

    py::class_<Decision>(m, "Decision")
        .def_readonly("point", &Decision::point)
        .def_readonly("level", &Decision::level)
        .def_readonly("score", &Decision::score)
        .def_readonly("pool_row", &Decision::pool_row);

    m.def("select_uncertainty", &select_uncertainty, py::arg("gp"), py::arg("pool"));
    m.def("select_mf_ucr", &select_mf_ucr, py::arg("model"), py::arg("pool"), py::arg("cost"));
    m.def("select_if_ucr", &select_if_ucr, py::arg("model"), py::arg("pool"), py::arg("cost"));
    m.def("select_if_ucr_bel", &select_if_ucr_bel, py::arg("model"), py::arg("pool"),
          py::arg("cost"));

    m.def("forrester_high", &forrester_high, py::arg("x"));
    m.def("forrester_low", &forrester_low, py::arg("x"));
    m.def("park_high", [](const Eigen::VectorXd& x) { return park_high(x); }, py::arg("x"));
    m.def("park_low", [](const Eigen::VectorXd& x) { return park_low(x); }, py::arg("x"));
    m.def("rmse", [](const Eigen::VectorXd& p, const Eigen::VectorXd& t) { return rmse(p, t); },
          py::arg("predictions"), py::arg("truth"));

    py::class_<FluidizedBedRecord>(m, "FluidizedBedRecord")
        .def_readwrite("humidity", &FluidizedBedRecord::humidity)
        .def_readwrite("room_temp", &FluidizedBedRecord::room_temp)
        .def_readwrite("pump_air_temp", &FluidizedBedRecord::pump_air_temp)
        .def_readwrite("coating_flow_rate", &FluidizedBedRecord::coating_flow_rate)
        .def_readwrite("atomization_pressure", &FluidizedBedRecord::atomization_pressure)
        .def_readwrite("fluidization_velocity", &FluidizedBedRecord::fluidization_velocity)
        .def_readwrite("t_experiment", &FluidizedBedRecord::t_experiment)
        .def_readwrite("t_model", &FluidizedBedRecord::t_model)
        .def("inputs", &FluidizedBedRecord::inputs);

    m.def("load_fluidized_bed",
          [](const std::string& path) { return load_fluidized_bed(path); }, py::arg("path"));
    m.def("write_fluidized_bed",
          [](const std::string& path, const std::vector<FluidizedBedRecord>& records) {
              write_fluidized_bed(path, records);
          },
          py::arg("path"), py::arg("records"));
    m.def("synthetic_fluidized_bed", &synthetic_fluidized_bed, py::arg("seed"),
          py::arg("rows") = kFluidizedBedConditions);

    py::enum_<Strategy>(m, "Strategy")
        .value("MfUcr", Strategy::MfUcr)
        .value("IfUcr", Strategy::IfUcr)
        .value("IfUcrBel", Strategy::IfUcrBel)
        .value("SingleUs", Strategy::SingleUs);

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("problem", &ExperimentConfig::problem)
        .def_readwrite("strategy", &ExperimentConfig::strategy)
        .def_readwrite("cost_high", &ExperimentConfig::cost_high)
        .def_readwrite("cost_low", &ExperimentConfig::cost_low)
        .def_readwrite("iterations", &ExperimentConfig::iterations)
        .def_readwrite("replications", &ExperimentConfig::replications)
        .def_readwrite("n_init_low", &ExperimentConfig::n_init_low)
        .def_readwrite("n_init_high", &ExperimentConfig::n_init_high)
        .def_readwrite("pool_size", &ExperimentConfig::pool_size)
        .def_readwrite("holdout_size", &ExperimentConfig::holdout_size)
        .def_readwrite("seed", &ExperimentConfig::seed)
        .def_readwrite("chain_length", &ExperimentConfig::chain_length)
        .def_readwrite("burn_in_fraction", &ExperimentConfig::burn_in_fraction)
        .def_readwrite("step_scale", &ExperimentConfig::step_scale)
        .def_readwrite("prior", &ExperimentConfig::prior)
        .def_readwrite("use_latin_hypercube", &ExperimentConfig::use_latin_hypercube)
        .def_readwrite("stop_rmse", &ExperimentConfig::stop_rmse)
        .def_readwrite("bed_data", &ExperimentConfig::bed_data)
        .def("validate", &ExperimentConfig::validate);

    py::class_<IterationRecord>(m, "IterationRecord")
        .def_readonly("replication", &IterationRecord::replication)
        .def_readonly("iteration", &IterationRecord::iteration)
        .def_readonly("point", &IterationRecord::point)
        .def_readonly("level", &IterationRecord::level)
        .def_readonly("rmse", &IterationRecord::rmse)
        .def_readonly("cumulative_cost", &IterationRecord::cumulative_cost)
        .def_readonly("pool_low_remaining", &IterationRecord::pool_low_remaining)
        .def_readonly("pool_high_remaining", &IterationRecord::pool_high_remaining);

    py::class_<HoldoutPrediction>(m, "HoldoutPrediction")
        .def_readonly("replication", &HoldoutPrediction::replication)
        .def_readonly("iteration", &HoldoutPrediction::iteration)
        .def_readonly("index", &HoldoutPrediction::index)
        .def_readonly("predicted", &HoldoutPrediction::predicted)
        .def_readonly("truth", &HoldoutPrediction::truth);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("config", &RunResult::config)
        .def_readonly("records", &RunResult::records)
        .def_readonly("predictions", &RunResult::predictions)
        .def_readonly("truncated_replications", &RunResult::truncated_replications)
        .def_readonly("holdout_indices", &RunResult::holdout_indices);

    py::class_<SummaryRow>(m, "SummaryRow")
        .def_readonly("strategy", &SummaryRow::strategy)
        .def_readonly("cost_high", &SummaryRow::cost_high)
        .def_readonly("cost_low", &SummaryRow::cost_low)
        .def_readonly("iteration", &SummaryRow::iteration)
        .def_readonly("rmse_median", &SummaryRow::rmse_median)
        .def_readonly("rmse_iqr", &SummaryRow::rmse_iqr)
        .def_readonly("cost_median", &SummaryRow::cost_median)
        .def_readonly("cost_iqr", &SummaryRow::cost_iqr);

    m.def("run_experiment", &run_experiment, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("summarize", &summarize, py::arg("records"), py::arg("config"));
    m.def("emit_results", &emit_results, py::arg("result"), py::arg("summary"),
          py::arg("prefix"));
    m.def("read_iteration_records",
          [](const std::string& path) { return read_iteration_records(path); },
          py::arg("path"));
    m.def("load_config", [](const std::string& path) { return load_config(path); },
          py::arg("path"));
}
